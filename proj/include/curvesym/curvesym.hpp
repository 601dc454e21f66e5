// Umbrella header.
#pragma once

#include "curvesym/config.hpp"
#include "curvesym/curve.hpp"
#include "curvesym/geometry.hpp"
#include "curvesym/jet.hpp"
#include "curvesym/kernels.hpp"
#include "curvesym/report.hpp"
#include "curvesym/sampler.hpp"
#include "curvesym/search.hpp"
#include "curvesym/suites.hpp"
#include "curvesym/symmetry.hpp"
