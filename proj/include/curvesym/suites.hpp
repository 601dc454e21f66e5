//
// suites.hpp: the verification suites. Each suite draws a reproducible
// triple stream, tracks worst cases with their witnesses, and reports one
// pass/fail assertion per claim it checks.
//
#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "curvesym/curve.hpp"
#include "curvesym/geometry.hpp"
#include "curvesym/kernels.hpp"
#include "curvesym/report.hpp"
#include "curvesym/sampler.hpp"
#include "curvesym/symmetry.hpp"

namespace curvesym {

struct Assertion {
  std::string id;
  bool pass = false;
  double worst = 0.0;      // the tracked extremal quantity
  double tolerance = 0.0;  // the bound it is compared against
  double margin = 0.0;     // >= 0 iff pass
  std::array<double, 6> witness_z{};  // re/im interleaved, NaN when no witness applies
  std::optional<std::array<double, 3>> witness_xs;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double runtime_sec = 0.0;
  std::vector<Assertion> assertions;
};

struct SuiteOptions {
  std::size_t n = 0;        // 0: use the suite default
  std::uint64_t seed = 0;   // 0: use the suite default
  std::function<void(const SampleRow&)> sample_sink;  // optional CSV feed

  SuiteOptions() = default;
  SuiteOptions(std::size_t n_, std::uint64_t seed_ = 0) : n(n_), seed(seed_) {}
};

namespace detail {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline std::array<double, 6> flatten(const Triple& t) {
  return {t.z1.real(), t.z1.imag(), t.z2.real(),
          t.z2.imag(), t.z3.real(), t.z3.imag()};
}

inline std::array<double, 6> no_witness() {
  return {kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
}

// Tracks the largest offered value together with its witness triple.
struct MaxTracker {
  double value = -std::numeric_limits<double>::infinity();
  std::array<double, 6> z = no_witness();
  std::optional<std::array<double, 3>> xs;

  void offer(double v, const Triple& t) {
    if (v > value) {
      value = v;
      z = flatten(t);
      xs = t.xs;
    }
  }
};

struct MinTracker {
  double value = std::numeric_limits<double>::infinity();
  std::array<double, 6> z = no_witness();
  std::optional<std::array<double, 3>> xs;

  void offer(double v, const Triple& t) {
    if (v < value) {
      value = v;
      z = flatten(t);
      xs = t.xs;
    }
  }
};

template <class Tracker>
inline Assertion upper_bound(std::string id, const Tracker& tr, double tol,
                             std::string note = {}) {
  Assertion a;
  a.id = std::move(id);
  a.worst = tr.value;
  a.tolerance = tol;
  a.margin = tol - tr.value;
  a.pass = a.margin >= 0.0;
  a.witness_z = tr.z;
  a.witness_xs = tr.xs;
  a.note = std::move(note);
  return a;
}

template <class Tracker>
inline Assertion lower_bound(std::string id, const Tracker& tr, double bound,
                             std::string note = {}) {
  Assertion a;
  a.id = std::move(id);
  a.worst = tr.value;
  a.tolerance = bound;
  a.margin = tr.value - bound;
  a.pass = a.margin >= 0.0;
  a.witness_z = tr.z;
  a.witness_xs = tr.xs;
  a.note = std::move(note);
  return a;
}

inline Assertion scalar_check(std::string id, double value, double target,
                              double tol, std::string note = {}) {
  Assertion a;
  a.id = std::move(id);
  a.worst = std::abs(value - target);
  a.tolerance = tol;
  a.margin = tol - a.worst;
  a.pass = a.margin >= 0.0;
  a.witness_z = no_witness();
  a.note = std::move(note);
  return a;
}

inline void finish(SuiteReport& r,
                   const std::chrono::steady_clock::time_point& t0) {
  for (const auto& a : r.assertions) r.pass = r.pass && a.pass;
  r.runtime_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline SampleRow make_row(const Triple& t, const SymmetrizationResult& s) {
  SampleRow row;
  row.z = flatten(t);
  row.xs = t.xs;
  row.c_sq = s.c_sq;
  row.s_full_re = s.full.real();
  row.s_re = s.re_part;
  row.s_im = s.im_part;
  row.condition = s.condition;
  return row;
}

// |a - b| relative to the intrinsic scale of the computation. The term sum
// is included so that agreement checks stay meaningful at zero crossings,
// where a plain relative difference degenerates.
inline double scaled_diff(double a, double b, double term_scale) {
  const double d = std::max({std::abs(a), std::abs(b), term_scale});
  return d == 0.0 ? 0.0 : std::abs(a - b) / d;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// individual suites
// ---------------------------------------------------------------------------

// The three symmetrization identities of the universal Cauchy kernel:
// S[K0] = c^2 and each of S[Re K0], S[Im K0] equals c^2/2.
inline SuiteReport melnikov_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "melnikov";
  rep.samples = opt.n ? opt.n : 100000;
  rep.seed = opt.seed ? opt.seed : 7;

  SamplerConfig cfg;
  cfg.mode = SamplerConfig::Mode::UniformBox;
  cfg.seed = rep.seed;
  cfg.box_lo = 0.0;
  cfg.box_hi = 1.0;
  cfg.conditioning_floor = 1e-3;
  TripleSampler sampler(cfg);

  const KernelHandle k0 = KernelHandle::universal();
  detail::MaxTracker full_err, re_err, im_err;
  for (std::size_t i = 0; i < rep.samples; ++i) {
    const Triple t = sampler.next();
    const SymmetrizationResult s = symmetrize(k0, t);
    full_err.offer(std::abs(s.full - Complex(s.c_sq)) / s.c_sq, t);
    re_err.offer(std::abs(s.re_part - 0.5 * s.c_sq) / s.c_sq, t);
    im_err.offer(std::abs(s.im_part - 0.5 * s.c_sq) / s.c_sq, t);
    if (opt.sample_sink) opt.sample_sink(detail::make_row(t, s));
  }
  rep.assertions.push_back(detail::upper_bound("full_vs_csq", full_err, 1e-9,
                                               "relative error of S[K0] against c^2"));
  rep.assertions.push_back(detail::upper_bound("re_vs_half_csq", re_err, 1e-9,
                                               "relative error of S[Re K0] against c^2/2"));
  rep.assertions.push_back(detail::upper_bound("im_vs_half_csq", im_err, 1e-9,
                                               "relative error of S[Im K0] against c^2/2"));
  detail::finish(rep, t0);
  return rep;
}

// S[K_h] = c^2 for any phase h, constant or not.
inline SuiteReport phase_universality_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "phase_universality";
  const std::size_t n = opt.n ? opt.n : 10000;
  rep.seed = opt.seed ? opt.seed : 11;
  rep.samples = 3 * n;

  const std::pair<const char*, PhaseFunction> phases[] = {
      {"constant", PhaseFunction::constant(0.7)},
      {"graph_extension", graph_phase(CurveSpec::parabola(1.0))},
      {"sinusoidal", PhaseFunction::custom([](Complex w) {
         return 0.7 * std::sin(2.0 * w.real()) + 0.3 * std::cos(w.imag());
       })}};

  std::uint64_t seed = rep.seed;
  for (const auto& [name, h] : phases) {
    SamplerConfig cfg;
    cfg.mode = SamplerConfig::Mode::UniformBox;
    cfg.seed = seed++;
    cfg.box_lo = -1.0;
    cfg.box_hi = 1.0;
    cfg.conditioning_floor = 1e-3;
    TripleSampler sampler(cfg);

    const KernelHandle kh = KernelHandle::phase(h);
    detail::MaxTracker err;
    for (std::size_t i = 0; i < n; ++i) {
      const Triple t = sampler.next();
      const SymmetrizationResult s = symmetrize(kh, t);
      err.offer(std::abs(s.full - Complex(s.c_sq)) / s.c_sq, t);
      if (opt.sample_sink) opt.sample_sink(detail::make_row(t, s));
    }
    rep.assertions.push_back(detail::upper_bound(
        std::string("full_vs_csq_") + name, err, 1e-9,
        "relative error of S[K_h] against c^2, phase: " + std::string(name)));
  }
  detail::finish(rep, t0);
  return rep;
}

// Agreement of the three routes to the squared Menger curvature, plus the
// frozen spot value at (0, 1, i).
inline SuiteReport menger_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "menger";
  const std::size_t n = opt.n ? opt.n : 10000;
  rep.seed = opt.seed ? opt.seed : 101;
  rep.samples = 2 * n;

  {
    SamplerConfig cfg;
    cfg.mode = SamplerConfig::Mode::UniformBox;
    cfg.seed = rep.seed;
    cfg.box_lo = -1.0;
    cfg.box_hi = 1.0;
    cfg.conditioning_floor = 1e-3;
    TripleSampler sampler(cfg);
    detail::MaxTracker err;
    for (std::size_t i = 0; i < n; ++i) {
      const Triple t = sampler.next();
      const double by_area = menger_curvature_sq(t);
      const double by_circle = menger_circumradius_sq(t);
      err.offer(std::abs(by_area - by_circle) / std::max(by_area, by_circle), t);
      if (opt.sample_sink) {
        SampleRow row;
        row.z = detail::flatten(t);
        row.c_sq = by_area;
        row.s_full_re = row.s_re = row.s_im = detail::kNaN;  // not computed here
        row.condition = classify_conditioning(t);
        opt.sample_sink(row);
      }
    }
    rep.assertions.push_back(detail::upper_bound(
        "area_vs_circumradius", err, 1e-9,
        "relative gap between the area formula and the circumradius route"));
  }
  {
    SamplerConfig cfg;
    cfg.mode = SamplerConfig::Mode::OnCurve;
    cfg.seed = rep.seed + 1;
    cfg.curve = CurveSpec::parabola(1.0);
    cfg.interval = {-3.0, 3.0};
    cfg.conditioning_floor = 1e-3;
    TripleSampler sampler(cfg);
    detail::MaxTracker err;
    for (std::size_t i = 0; i < n; ++i) {
      const Triple t = sampler.next();
      const auto& xs = *t.xs;
      const double by_area = menger_curvature_sq(t);
      const double by_circle = menger_circumradius_sq(t);
      const double by_graph = menger_graph_sq(*cfg.curve, xs[0], xs[1], xs[2]);
      const double hi = std::max({by_area, by_circle, by_graph});
      const double lo = std::min({by_area, by_circle, by_graph});
      err.offer((hi - lo) / hi, t);
    }
    rep.assertions.push_back(detail::upper_bound(
        "graph_formula_agreement", err, 1e-9,
        "worst pairwise gap among area, circumradius and on-curve formulas"));
  }
  rep.assertions.push_back(detail::scalar_check(
      "spot_unit_right_triangle",
      menger_curvature_sq(Triple({0, 0}, {1, 0}, {0, 1})), 2.0, 1e-12,
      "c^2(0, 1, i) = 2"));
  detail::finish(rep, t0);
  return rep;
}

// The graph closed forms against the literal permutation sums, on curves.
inline SuiteReport graph_forms_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "graph_forms";
  const std::size_t n = opt.n ? opt.n : 10000;
  rep.seed = opt.seed ? opt.seed : 201;

  struct Case {
    const char* name;
    CurveSpec spec;
    Interval interval;
  };
  const Case cases[] = {
      {"parabola_1", CurveSpec::parabola(1.0), {-3.0, 3.0}},
      {"parabola_half", CurveSpec::parabola(0.5), {-3.0, 3.0}},
      {"cubic", CurveSpec::cubic(), {-2.0, 2.0}},
  };

  std::uint64_t seed = rep.seed;
  for (const auto& c : cases) {
    SamplerConfig cfg;
    cfg.mode = SamplerConfig::Mode::OnCurve;
    cfg.seed = seed++;
    cfg.curve = c.spec;
    cfg.interval = c.interval;
    cfg.conditioning_floor = 1e-3;
    TripleSampler sampler(cfg);

    const KernelHandle kg = KernelHandle::restricted(c.spec);
    detail::MaxTracker re_err, im_err;
    for (std::size_t i = 0; i < n; ++i) {
      const Triple t = sampler.next();
      const auto& xs = *t.xs;
      const SymmetrizationResult s = symmetrize(kg, t);
      const auto re_terms = s_re_graph_terms(c.spec, xs);
      const auto im_terms = s_im_graph_terms(c.spec, xs);
      const double re_scale =
          std::abs(re_terms[0]) + std::abs(re_terms[1]) + std::abs(re_terms[2]);
      const double im_scale =
          std::abs(im_terms[0]) + std::abs(im_terms[1]) + std::abs(im_terms[2]);
      re_err.offer(detail::scaled_diff(re_terms[0] + re_terms[1] + re_terms[2],
                                       s.re_part, re_scale),
                   t);
      im_err.offer(detail::scaled_diff(im_terms[0] + im_terms[1] + im_terms[2],
                                       s.im_part, im_scale),
                   t);
      if (opt.sample_sink) opt.sample_sink(detail::make_row(t, s));
    }
    rep.samples += n;
    rep.assertions.push_back(detail::upper_bound(
        std::string("re_closed_form_") + c.name, re_err, 1e-10,
        "closed form vs permutation sum for the real part"));
    rep.assertions.push_back(detail::upper_bound(
        std::string("im_closed_form_") + c.name, im_err, 1e-10,
        "closed form vs permutation sum for the imaginary part"));
  }
  detail::finish(rep, t0);
  return rep;
}

// Global bounds for a curve with Lipschitz slope, here the parabola with
// A'' = 2 (M = 2): |S[Re]| <= (3/2) M^2, c^2 <= 8 M^2, |S[Im]| <= (19/2) M^2.
inline SuiteReport global_bounds_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "global_bounds";
  rep.samples = opt.n ? opt.n : 100000;
  rep.seed = opt.seed ? opt.seed : 301;

  const CurveSpec spec = CurveSpec::parabola(1.0);
  const double M = lipschitz_of_derivative(spec, {-10.0, 10.0});

  SamplerConfig cfg;
  cfg.mode = SamplerConfig::Mode::OnCurve;
  cfg.seed = rep.seed;
  cfg.curve = spec;
  cfg.interval = {-10.0, 10.0};
  TripleSampler sampler(cfg);

  const KernelHandle kg = KernelHandle::restricted(spec);
  detail::MaxTracker re_abs, im_abs, csq;
  for (std::size_t i = 0; i < rep.samples; ++i) {
    const Triple t = sampler.next();
    const SymmetrizationResult s = symmetrize(kg, t);
    re_abs.offer(std::abs(s.re_part), t);
    im_abs.offer(std::abs(s.im_part), t);
    csq.offer(s.c_sq, t);
    if (opt.sample_sink) opt.sample_sink(detail::make_row(t, s));
  }
  rep.assertions.push_back(detail::upper_bound(
      "re_bound", re_abs, 1.5 * M * M, "|S[Re]| against (3/2) M^2 with M = 2"));
  rep.assertions.push_back(detail::upper_bound(
      "csq_bound", csq, 8.0 * M * M, "c^2 against 8 M^2 with M = 2"));
  rep.assertions.push_back(detail::upper_bound(
      "im_bound", im_abs, (8.0 + 1.5) * M * M, "|S[Im]| against (19/2) M^2 with M = 2"));
  detail::finish(rep, t0);
  return rep;
}

// Fixed concavity makes every vertex term of S[Re] nonnegative. Checked on
// two parabolas and on the cosh graph; the per-term gate is scaled by the
// term's own rounding magnitude.
inline SuiteReport positivity_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "positivity";
  const std::size_t n = opt.n ? opt.n : 100000;
  rep.seed = opt.seed ? opt.seed : 401;

  struct Case {
    const char* name;
    CurveSpec spec;
    Interval interval;
  };
  const Case cases[] = {
      {"parabola_half", CurveSpec::parabola(0.5), {-10.0, 10.0}},
      {"parabola_1", CurveSpec::parabola(1.0), {-10.0, 10.0}},
      {"cosh", CurveSpec::cosh_graph(), {-3.0, 3.0}},
  };

  std::uint64_t seed = rep.seed;
  for (const auto& c : cases) {
    SamplerConfig cfg;
    cfg.mode = SamplerConfig::Mode::OnCurve;
    cfg.seed = seed++;
    cfg.curve = c.spec;
    cfg.interval = c.interval;
    TripleSampler sampler(cfg);

    detail::MinTracker sum_min, term_min;
    for (std::size_t i = 0; i < n; ++i) {
      const Triple t = sampler.next();
      const auto& xs = *t.xs;
      const auto terms = s_re_graph_terms(c.spec, xs);
      const auto scales = s_re_graph_term_scales(c.spec, xs);
      sum_min.offer(terms[0] + terms[1] + terms[2], t);
      for (int j = 0; j < 3; ++j) {
        term_min.offer(terms[j] / std::max(scales[j], 1e-300), t);
      }
      if (opt.sample_sink) {
        SampleRow row;
        row.z = detail::flatten(t);
        row.xs = t.xs;
        row.c_sq = menger_curvature_sq(t);
        row.s_re = terms[0] + terms[1] + terms[2];
        row.s_im = s_im_graph(c.spec, xs);
        row.s_full_re = row.s_re + row.s_im;
        row.condition = classify_conditioning(t);
        opt.sample_sink(row);
      }
    }
    rep.samples += n;
    rep.assertions.push_back(detail::lower_bound(
        std::string("s_re_nonnegative_") + c.name, sum_min, -1e-12,
        "minimum sampled S[Re] on a fixed-concavity curve"));
    rep.assertions.push_back(detail::lower_bound(
        std::string("per_term_nonnegative_") + c.name, term_min, -1e-12,
        "minimum vertex term, scaled by its rounding magnitude"));
  }
  detail::finish(rep, t0);
  return rep;
}

// Local behaviour near a point of nonzero curvature: c^2 approaches the
// squared pointwise curvature and the real/imaginary split approaches
// (3/2, -1/2), with deviations shrinking as the window shrinks.
inline SuiteReport local_limit_suite(const CurveSpec& spec, double x0,
                                     const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  if (second_derivative(spec, x0) == 0.0) {
    throw std::invalid_argument("local limit requires nonzero curvature at the center");
  }
  SuiteReport rep;
  rep.suite = "local_limit";
  const std::size_t n = opt.n ? opt.n : 20000;
  rep.seed = opt.seed ? opt.seed : 501;

  const double kappa = curve_data(spec, x0).curvature;
  const double kappa_sq = kappa * kappa;
  const std::array<double, 3> deltas = {1e-1, 1e-2, 1e-3};
  const KernelHandle kg = KernelHandle::restricted(spec);

  std::array<double, 3> dev_csq{}, dev_re{}, dev_im{};
  std::array<Assertion, 3> last_window;
  detail::MaxTracker ratio_re_dev, ratio_im_dev;  // tracked on the middle window

  std::uint64_t seed = rep.seed;
  for (int d = 0; d < 3; ++d) {
    SamplerConfig cfg;
    cfg.mode = SamplerConfig::Mode::ShrinkingWindow;
    cfg.seed = seed++;
    cfg.curve = spec;
    cfg.center = x0;
    cfg.delta = deltas[d];
    // Im K_Gamma grows like 1/(x - y), so the cancelling products in its
    // permutation sum reach 1/sep^2 when a whole triple clusters at the
    // separation floor; below ~1e-2 of the window their ulp granularity
    // drowns the O(delta) deviations being measured.
    cfg.min_separation_factor = 1e-2;
    TripleSampler sampler(cfg);

    detail::MaxTracker c_dev, re_dev, im_dev;
    for (std::size_t i = 0; i < n; ++i) {
      const Triple t = sampler.next();
      const SymmetrizationResult s = symmetrize(kg, t);
      c_dev.offer(std::abs(s.c_sq - kappa_sq), t);
      re_dev.offer(std::abs(s.re_part - 1.5 * s.c_sq), t);
      im_dev.offer(std::abs(s.im_part + 0.5 * s.c_sq), t);
      if (d == 1) {
        ratio_re_dev.offer(std::abs(s.re_part / s.c_sq - 1.5), t);
        ratio_im_dev.offer(std::abs(s.im_part / s.c_sq + 0.5), t);
      }
      if (opt.sample_sink) opt.sample_sink(detail::make_row(t, s));
    }
    rep.samples += n;
    dev_csq[d] = c_dev.value;
    dev_re[d] = re_dev.value;
    dev_im[d] = im_dev.value;
    if (d == 2) {
      last_window = {detail::upper_bound("csq_dev_smallest_window", c_dev, 1e-2,
                                         "max |c^2 - kappa0^2| at delta = 1e-3"),
                     detail::upper_bound("re_dev_smallest_window", re_dev, 1e-2,
                                         "max |S[Re] - (3/2) c^2| at delta = 1e-3"),
                     detail::upper_bound("im_dev_smallest_window", im_dev, 1e-2,
                                         "max |S[Im] + (1/2) c^2| at delta = 1e-3")};
    }
  }

  auto decreasing = [&](const char* id, const std::array<double, 3>& dev) {
    Assertion a;
    a.id = id;
    a.worst = std::min(dev[0] - dev[1], dev[1] - dev[2]);
    a.tolerance = 0.0;
    a.margin = a.worst;
    a.pass = a.margin > 0.0;
    a.witness_z = detail::no_witness();
    a.note = "window maxima " + format_g17(dev[0]) + ", " + format_g17(dev[1]) +
             ", " + format_g17(dev[2]) + " must strictly decrease";
    return a;
  };
  rep.assertions.push_back(decreasing("csq_dev_decreasing", dev_csq));
  rep.assertions.push_back(decreasing("re_dev_decreasing", dev_re));
  rep.assertions.push_back(decreasing("im_dev_decreasing", dev_im));
  for (auto& a : last_window) rep.assertions.push_back(std::move(a));
  rep.assertions.push_back(detail::upper_bound(
      "ratio_re_window", ratio_re_dev, 1.0,
      "|S[Re]/c^2 - 3/2| on the mid window, half-curvature tolerance"));
  rep.assertions.push_back(detail::upper_bound(
      "ratio_im_window", ratio_im_dev, 1.0,
      "|S[Im]/c^2 + 1/2| on the mid window, half-curvature tolerance"));
  detail::finish(rep, t0);
  return rep;
}

inline SuiteReport local_limit_suite(const SuiteOptions& opt = {}) {
  return local_limit_suite(CurveSpec::parabola(0.5), 0.0, opt);
}

// Positive symmetrized imaginary part on a convex parabola: spot value
// 1/40 at the symmetric triple with lambda = 2, positivity at lambda = 10,
// and the closed-form profile against the permutation sum along a sweep.
inline SuiteReport example_42_suite([[maybe_unused]] const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "example_42";
  const CurveSpec spec = CurveSpec::parabola(0.5);

  // profile of S[Im] at the symmetric triple (-lambda, 0, lambda)
  auto closed_form = [](double l) {
    const double l2 = l * l;
    return 32.0 / (l2 * (4.0 + l2)) *
           ((2.0 + l2) / (8.0 * (1.0 + l2)) - 1.0 / (4.0 + l2));
  };

  const double spot = s_im_graph(spec, {-2.0, 0.0, 2.0});
  rep.assertions.push_back(
      detail::scalar_check("spot_lambda_2", spot, 0.025, 1e-10,
                           "S[Im] at the symmetric triple, lambda = 2"));
  rep.assertions.push_back(detail::scalar_check(
      "spot_closed_form", closed_form(2.0), 0.025, 1e-10, "closed form at lambda = 2"));

  const Triple t2 = Triple::on_curve(spec, -2.0, 0.0, 2.0);
  const SymmetrizationResult s2 = symmetrize(KernelHandle::restricted(spec), t2);
  rep.assertions.push_back(detail::scalar_check(
      "spot_permutation_sum", s2.im_part, 0.025, 1e-10,
      "direct permutation sum at lambda = 2"));

  detail::MaxTracker sweep_err;
  for (double l : {0.5, 1.0, 2.0, 3.0, 5.0, 10.0}) {
    const Triple t = Triple::on_curve(spec, -l, 0.0, l);
    sweep_err.offer(detail::scaled_diff(s_im_graph(spec, {-l, 0.0, l}),
                                        closed_form(l), 0.0),
                    t);
    rep.samples++;
  }
  rep.assertions.push_back(detail::upper_bound(
      "closed_form_sweep", sweep_err, 1e-10,
      "closed-form profile vs graph evaluation over the lambda sweep"));

  detail::MinTracker positive_far;
  const Triple t10 = Triple::on_curve(spec, -10.0, 0.0, 10.0);
  positive_far.offer(s_im_graph(spec, {-10.0, 0.0, 10.0}), t10);
  Assertion pos;
  pos.id = "positive_at_lambda_10";
  pos.worst = positive_far.value;
  pos.tolerance = 0.0;
  pos.margin = positive_far.value;
  pos.pass = positive_far.value > 0.0;
  pos.witness_z = positive_far.z;
  pos.witness_xs = positive_far.xs;
  pos.note = "S[Im] > 0 at the wide symmetric triple";
  rep.assertions.push_back(pos);

  detail::finish(rep, t0);
  return rep;
}

// Negative symmetrized real part on the cubic, where concavity changes:
// the middle vertex term is negative for every parameter pair, and it wins
// for widely asymmetric triples.
inline SuiteReport example_43_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "example_43";
  rep.seed = opt.seed ? opt.seed : 601;
  const std::size_t n_pairs = opt.n ? opt.n : 100;
  const CurveSpec spec = CurveSpec::cubic();
  const KernelHandle kg = KernelHandle::restricted(spec);

  {
    const std::array<double, 3> xs = {-1.0, 0.0, 100.0};
    const auto terms = s_re_graph_terms(spec, xs);
    const Triple t = Triple::on_curve(spec, xs[0], xs[1], xs[2]);
    detail::MinTracker neg;
    neg.offer(terms[0] + terms[1] + terms[2], t);
    Assertion a;
    a.id = "negative_at_wide_triple";
    a.worst = neg.value;
    a.tolerance = 0.0;
    a.margin = -neg.value;
    a.pass = neg.value < 0.0;
    a.witness_z = neg.z;
    a.witness_xs = neg.xs;
    a.note = "S[Re] < 0 at abscissas (-1, 0, 100)";
    rep.assertions.push_back(a);
  }

  DeterministicRng rng(rep.seed);
  detail::MaxTracker middle_term_sign, sum_err;
  for (std::size_t i = 0; i < n_pairs; ++i) {
    const double a = rng.uniform(0.05, 5.0);
    const double l = rng.uniform(0.05, 50.0);
    const std::array<double, 3> xs = {-a, 0.0, l};
    const Triple t = Triple::on_curve(spec, xs[0], xs[1], xs[2]);
    const auto terms = s_re_graph_terms(spec, xs);
    middle_term_sign.offer(terms[1], t);  // must stay negative
    const SymmetrizationResult s = symmetrize(kg, t);
    const double scale =
        std::abs(terms[0]) + std::abs(terms[1]) + std::abs(terms[2]);
    sum_err.offer(
        detail::scaled_diff(terms[0] + terms[1] + terms[2], s.re_part, scale), t);
    rep.samples++;
  }
  Assertion mid;
  mid.id = "middle_term_negative";
  mid.worst = middle_term_sign.value;
  mid.tolerance = 0.0;
  mid.margin = -middle_term_sign.value;
  mid.pass = middle_term_sign.value < 0.0;
  mid.witness_z = middle_term_sign.z;
  mid.witness_xs = middle_term_sign.xs;
  mid.note = "largest middle vertex term over the sampled parameter pairs";
  rep.assertions.push_back(mid);
  rep.assertions.push_back(detail::upper_bound(
      "decomposition_matches_sum", sum_err, 1e-10,
      "vertex decomposition equals the permutation sum"));
  detail::finish(rep, t0);
  return rep;
}

// Collapse of relative boundedness on the bump curve: along a family whose
// middle point flattens into the chord, |S[Re]| / c^2 grows without bound.
inline SuiteReport example_41_suite([[maybe_unused]] const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "example_41";
  const CurveSpec spec = CurveSpec::bump_sine();
  const KernelHandle kg = KernelHandle::restricted(spec);

  std::array<double, 4> ratios{};
  std::string trace;
  for (int k = 2; k <= 5; ++k) {
    const double lambda = 0.5 - std::pow(10.0, -k);
    const Triple t = Triple::on_curve(spec, 0.0, lambda, 1.0);
    const SymmetrizationResult s = symmetrize(kg, t);
    ratios[k - 2] = std::abs(s.re_part) / s.c_sq;
    trace += (trace.empty() ? "" : ", ") + format_g17(ratios[k - 2]);
    rep.samples++;
  }

  Assertion growth;
  growth.id = "ratio_growth_per_step";
  growth.worst = std::min({ratios[1] / ratios[0], ratios[2] / ratios[1],
                           ratios[3] / ratios[2]});
  growth.tolerance = 10.0;
  growth.margin = growth.worst - 10.0;
  growth.pass = growth.margin >= 0.0;
  growth.witness_z = detail::no_witness();
  growth.note = "ratios along the flattening family: " + trace;
  rep.assertions.push_back(growth);

  Assertion final_size;
  final_size.id = "ratio_exceeds_1e3";
  final_size.worst = ratios[3];
  final_size.tolerance = 1e3;
  final_size.margin = ratios[3] - 1e3;
  final_size.pass = final_size.margin > 0.0;
  final_size.witness_z = detail::no_witness();
  final_size.note = "|S[Re]| / c^2 at the tightest family member";
  rep.assertions.push_back(final_size);
  detail::finish(rep, t0);
  return rep;
}

// Sharpness of the Lipschitz-slope bound on the cubic: a two-sided family
// of triples keeps S[Re] above a fixed multiple of the squared local
// Lipschitz constant.
inline SuiteReport lemma16_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "lemma16";
  rep.seed = opt.seed ? opt.seed : 701;
  const std::size_t n_pairs = opt.n ? opt.n : 100;
  const CurveSpec spec = CurveSpec::cubic();
  const double c0 = 1.0 / (24.0 * 25.0 * 41.0);

  DeterministicRng rng(rep.seed);
  detail::MinTracker margin_min;
  for (std::size_t i = 0; i < n_pairs; ++i) {
    const double alpha = rng.uniform(0.5, 1.0);
    const double beta = rng.uniform(0.5, 1.0);
    for (double eps : {0.01, 0.05, 0.1}) {
      const std::array<double, 3> xs = {-eps * alpha, 0.0, eps * beta};
      const double m_eps = lipschitz_of_derivative(spec, {-eps, eps});
      const double bound = c0 * m_eps * m_eps;
      const Triple t = Triple::on_curve(spec, xs[0], xs[1], xs[2]);
      margin_min.offer(s_re_graph(spec, xs) - bound, t);
      rep.samples++;
    }
  }
  rep.assertions.push_back(detail::lower_bound(
      "lower_bound_margin", margin_min, 0.0,
      "S[Re] minus the guaranteed multiple of the squared local Lipschitz constant"));
  detail::finish(rep, t0);
  return rep;
}

// The remainder functional vanishes and the dual functional equals one
// exactly when the phase is constant; a genuinely varying phase drives both
// out of every bound and pushes 1/2 +- R_h through zero.
inline SuiteReport trichotomy_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "trichotomy";
  const std::size_t n = opt.n ? opt.n : 1000;
  rep.seed = opt.seed ? opt.seed : 801;

  {
    SamplerConfig cfg;
    cfg.mode = SamplerConfig::Mode::UniformBox;
    cfg.seed = rep.seed;
    cfg.box_lo = -2.0;
    cfg.box_hi = 2.0;
    cfg.conditioning_floor = 5e-2;
    TripleSampler sampler(cfg);
    const PhaseFunction h = PhaseFunction::constant(0.37);
    detail::MaxTracker r_abs, h_gap;
    for (std::size_t i = 0; i < n; ++i) {
      const Triple t = sampler.next();
      r_abs.offer(std::abs(remainder_rh(h, t).via_formula), t);
      h_gap.offer(std::abs(h_functional(h, t).via_formula - 1.0), t);
      rep.samples++;
    }
    rep.assertions.push_back(detail::upper_bound(
        "constant_phase_remainder_vanishes", r_abs, 1e-12, "max |R_h| for constant h"));
    rep.assertions.push_back(detail::upper_bound(
        "constant_phase_dual_is_one", h_gap, 1e-12, "max |H - 1| for constant h"));
  }

  {
    SamplerConfig cfg;
    cfg.mode = SamplerConfig::Mode::UniformBox;
    cfg.seed = rep.seed + 1;
    cfg.box_lo = -2.0;
    cfg.box_hi = 2.0;
    cfg.conditioning_floor = 2e-3;
    TripleSampler sampler(cfg);
    const PhaseFunction h = PhaseFunction::custom([](Complex w) {
      return 0.4 * std::sin(1.3 * w.real()) + 0.6 * std::cos(0.7 * w.imag());
    });
    detail::MaxTracker r_gap, h_gap;
    for (std::size_t i = 0; i < n; ++i) {
      const Triple t = sampler.next();
      const RemainderReport rr = remainder_rh(h, t);
      const RemainderReport hh = h_functional(h, t);
      r_gap.offer(std::abs(rr.via_formula - rr.via_identity) /
                      std::max(1.0, std::abs(rr.via_formula)),
                  t);
      h_gap.offer(std::abs(hh.via_formula - hh.via_identity) /
                      std::max(1.0, std::abs(hh.via_formula)),
                  t);
      rep.samples++;
    }
    rep.assertions.push_back(detail::upper_bound(
        "remainder_formula_vs_identity", r_gap, 1e-8,
        "closed form vs permutation-sum route for R_h, varying phase"));
    rep.assertions.push_back(detail::upper_bound(
        "dual_formula_vs_identity", h_gap, 1e-8,
        "closed form vs permutation-sum route for H, varying phase"));
  }

  {
    const CurveSpec bump = CurveSpec::bump_sine();
    const PhaseFunction h = graph_phase(bump);
    const Triple flat = Triple::on_curve(bump, 0.0, 0.5 - 1e-4, 1.0);
    const Triple local = Triple::on_curve(bump, 0.48, 0.50, 0.52);
    const double r_flat = remainder_rh(h, flat).via_formula;
    const double r_local = remainder_rh(h, local).via_formula;
    const double h_flat = h_functional(h, flat).via_formula;

    auto witness = [](std::string id, double value, bool pass, const Triple& t,
                      std::string note) {
      Assertion a;
      a.id = std::move(id);
      a.worst = value;
      a.tolerance = 0.0;
      a.margin = pass ? std::abs(value) : -std::abs(value);
      a.pass = pass;
      a.witness_z = detail::flatten(t);
      a.witness_xs = t.xs;
      a.note = std::move(note);
      return a;
    };
    rep.assertions.push_back(witness("remainder_unbounded", r_flat,
                                     std::abs(r_flat) > 1e3, flat,
                                     "|R_h| beyond 1e3 for the graph phase"));
    rep.assertions.push_back(witness("half_plus_negative_witness", 0.5 + r_flat,
                                     0.5 + r_flat < 0.0, flat,
                                     "1/2 + R_h < 0 on the flattening family"));
    rep.assertions.push_back(witness("half_minus_positive_witness", 0.5 - r_flat,
                                     0.5 - r_flat > 0.0, flat,
                                     "1/2 - R_h > 0 on the flattening family"));
    rep.assertions.push_back(witness("half_plus_positive_witness", 0.5 + r_local,
                                     0.5 + r_local > 0.0, local,
                                     "1/2 + R_h > 0 near the curved reference point"));
    rep.assertions.push_back(witness("half_minus_negative_witness", 0.5 - r_local,
                                     0.5 - r_local < 0.0, local,
                                     "1/2 - R_h < 0 near the curved reference point"));
    rep.assertions.push_back(witness("dual_unbounded", h_flat,
                                     std::abs(h_flat - 1.0) > 1e3, flat,
                                     "|H - 1| beyond 1e3 for the graph phase"));
    rep.samples += 2;
  }
  detail::finish(rep, t0);
  return rep;
}

// The skew form of the restricted kernel cancels its singularity: exactly
// zero on lines, and settling toward the diagonal on the parabola while the
// kernel itself blows up like 1/h.
inline SuiteReport kerzman_stein_suite(const SuiteOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "kerzman_stein";
  rep.seed = opt.seed ? opt.seed : 901;

  {
    const CurveSpec spec = CurveSpec::parabola(1.0);
    const double x0 = 0.3;
    std::array<double, 6> values{};
    std::array<double, 3> quotients{};
    std::string trace;
    for (int k = 1; k <= 6; ++k) {
      const double h = std::pow(10.0, -k);
      const double v = std::abs(eval_kerzman_stein(spec, x0 + h, x0));
      values[k - 1] = v;
      if (k >= 4) quotients[k - 4] = v / ((x0 + h) - x0);
      trace += (trace.empty() ? "" : ", ") + format_g17(v);
      rep.samples++;
    }
    const double vmax = *std::max_element(values.begin(), values.end());

    Assertion bounded;
    bounded.id = "diagonal_approach_bounded";
    bounded.worst = vmax;
    bounded.tolerance = 1.0;
    bounded.margin = 1.0 - vmax;
    bounded.pass = bounded.margin >= 0.0;
    bounded.witness_z = detail::no_witness();
    bounded.note = "|A(x0+h, x0)| along h = 1e-1 .. 1e-6: " + trace;
    rep.assertions.push_back(bounded);

    Assertion settle;
    settle.id = "diagonal_approach_settles";
    settle.worst = (*std::max_element(values.begin() + 3, values.end()) -
                    *std::min_element(values.begin() + 3, values.end())) /
                   vmax;
    settle.tolerance = 0.10;
    settle.margin = 0.10 - settle.worst;
    settle.pass = settle.margin >= 0.0;
    settle.witness_z = detail::no_witness();
    settle.note = "spread of the last three values against the overall scale";
    rep.assertions.push_back(settle);

    Assertion quotient;
    quotient.id = "difference_quotient_converges";
    const double qmax = *std::max_element(quotients.begin(), quotients.end());
    const double qmin = *std::min_element(quotients.begin(), quotients.end());
    quotient.worst = (qmax - qmin) / qmax;
    quotient.tolerance = 0.10;
    quotient.margin = 0.10 - quotient.worst;
    quotient.pass = quotient.margin >= 0.0;
    quotient.witness_z = detail::no_witness();
    quotient.note = "|A(x0+h, x0)| / h over the last three steps: " +
                    format_g17(quotients[0]) + ", " + format_g17(quotients[1]) +
                    ", " + format_g17(quotients[2]);
    rep.assertions.push_back(quotient);
  }

  {
    const CurveSpec line = CurveSpec::line(0.5, 0.1);
    DeterministicRng rng(rep.seed);
    detail::MaxTracker line_max;
    for (int i = 0; i < 100; ++i) {
      double x = rng.uniform(-5.0, 5.0);
      double y = rng.uniform(-5.0, 5.0);
      if (std::abs(x - y) < 1e-2) y += (y >= x ? 1.0 : -1.0) * 1e-2;
      const Triple t = Triple::on_curve(line, x, y, 7.0);
      line_max.offer(std::abs(eval_kerzman_stein(line, x, y)), t);
      rep.samples++;
    }
    rep.assertions.push_back(detail::upper_bound(
        "line_vanishes", line_max, 1e-13, "skew form on a slanted line"));
  }
  detail::finish(rep, t0);
  return rep;
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "melnikov",     "phase_universality", "menger",     "graph_forms",
      "global_bounds", "positivity",        "local_limit", "example_41",
      "example_42",   "example_43",         "lemma16",    "trichotomy",
      "kerzman_stein"};
  return ids;
}

inline SuiteReport run_suite(const std::string& id, const SuiteOptions& opt = {}) {
  if (id == "melnikov") return melnikov_suite(opt);
  if (id == "phase_universality") return phase_universality_suite(opt);
  if (id == "menger") return menger_suite(opt);
  if (id == "graph_forms") return graph_forms_suite(opt);
  if (id == "global_bounds") return global_bounds_suite(opt);
  if (id == "positivity") return positivity_suite(opt);
  if (id == "local_limit") return local_limit_suite(opt);
  if (id == "example_41") return example_41_suite(opt);
  if (id == "example_42") return example_42_suite(opt);
  if (id == "example_43") return example_43_suite(opt);
  if (id == "lemma16") return lemma16_suite(opt);
  if (id == "trichotomy") return trichotomy_suite(opt);
  if (id == "kerzman_stein") return kerzman_stein_suite(opt);
  throw std::invalid_argument("unknown suite '" + id + "'");
}

// --- serialization ---

inline std::string to_json_line(const SuiteReport& r, const Assertion& a) {
  JsonLine line;
  line.field("suite", r.suite)
      .field("assertion", a.id)
      .field("pass", a.pass)
      .field("worst", a.worst)
      .field("tolerance", a.tolerance)
      .field("margin", a.margin)
      .field("witness_z", a.witness_z);
  if (a.witness_xs) line.field("witness_xs", *a.witness_xs);
  if (!a.note.empty()) line.field("note", a.note);
  return line.str();
}

inline std::string suite_header_line(const SuiteReport& r) {
  JsonLine line;
  line.field("suite", r.suite)
      .field("pass", r.pass)
      .field("samples", r.samples)
      .field("seed", static_cast<std::uint64_t>(r.seed))
      .field("runtime_sec", r.runtime_sec);
  return line.str();
}

inline void write_suite_jsonl(std::ostream& os, const SuiteReport& r) {
  os << suite_header_line(r) << '\n';
  for (const auto& a : r.assertions) os << to_json_line(r, a) << '\n';
}

// All numeric content except the wall-clock runtime, for byte-identity
// comparisons between repeated runs.
inline std::string numeric_fingerprint(const SuiteReport& r) {
  std::string out = r.suite + ";samples=" + std::to_string(r.samples) +
                    ";seed=" + std::to_string(r.seed);
  for (const auto& a : r.assertions) {
    out += '\n' + to_json_line(r, a);
  }
  return out;
}

}  // namespace curvesym
