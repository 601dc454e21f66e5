//
// sampler.hpp: seeded, reproducible triple generation for the verification
// suites. Identical seed and configuration produce an identical stream on
// every platform, so reports can be compared byte for byte.
//
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>

#include "curvesym/curve.hpp"
#include "curvesym/geometry.hpp"

namespace curvesym {

// mt19937_64 drives everything; doubles are derived from the raw 64-bit
// output directly instead of std::uniform_real_distribution, whose mapping
// is implementation defined.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 eng_;
};

struct SamplerConfig {
  enum class Mode { UniformBox, OnCurve, ShrinkingWindow };

  Mode mode = Mode::UniformBox;
  std::uint64_t seed = 1;
  // UniformBox: points in [box_lo, box_hi]^2
  double box_lo = 0.0, box_hi = 1.0;
  // OnCurve: abscissas in [interval.lo, interval.hi]
  std::optional<CurveSpec> curve;
  Interval interval{0.0, 1.0};
  // ShrinkingWindow: abscissas in (center - delta, center + delta)
  double center = 0.0, delta = 0.1;

  // rejection thresholds
  double min_separation_factor = 1e-6;  // of the sampling width
  double conditioning_floor = 0.0;      // on relative area; 0 accepts everything non-collinear
};

class TripleSampler {
 public:
  explicit TripleSampler(SamplerConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) {
    if (cfg_.mode != SamplerConfig::Mode::UniformBox && !cfg_.curve) {
      throw std::invalid_argument("on-curve sampling needs a curve");
    }
  }

  const SamplerConfig& config() const { return cfg_; }

  Triple next() {
    for (int attempt = 0; attempt < 100000; ++attempt) {
      std::optional<Triple> t = draw();
      if (!t) continue;
      if (t->min_pairwise_distance() < min_separation()) continue;
      if (relative_area(*t) <= cfg_.conditioning_floor) continue;
      return *t;
    }
    throw std::runtime_error("triple sampler failed to satisfy the rejection thresholds");
  }

 private:
  double width() const {
    switch (cfg_.mode) {
      case SamplerConfig::Mode::UniformBox: return cfg_.box_hi - cfg_.box_lo;
      case SamplerConfig::Mode::OnCurve: return cfg_.interval.width();
      case SamplerConfig::Mode::ShrinkingWindow: return 2.0 * cfg_.delta;
    }
    return 1.0;
  }

  double min_separation() const { return cfg_.min_separation_factor * width(); }

  std::optional<Triple> draw() {
    switch (cfg_.mode) {
      case SamplerConfig::Mode::UniformBox: {
        std::array<Complex, 3> z;
        for (auto& p : z) {
          const double re = rng_.uniform(cfg_.box_lo, cfg_.box_hi);
          const double im = rng_.uniform(cfg_.box_lo, cfg_.box_hi);
          p = {re, im};
        }
        if (z[0] == z[1] || z[0] == z[2] || z[1] == z[2]) return std::nullopt;
        return Triple(z[0], z[1], z[2]);
      }
      case SamplerConfig::Mode::OnCurve: {
        const auto xs = draw_abscissas(cfg_.interval.lo, cfg_.interval.hi);
        if (!xs) return std::nullopt;
        return Triple::on_curve(*cfg_.curve, (*xs)[0], (*xs)[1], (*xs)[2]);
      }
      case SamplerConfig::Mode::ShrinkingWindow: {
        const auto xs = draw_abscissas(cfg_.center - cfg_.delta, cfg_.center + cfg_.delta);
        if (!xs) return std::nullopt;
        return Triple::on_curve(*cfg_.curve, (*xs)[0], (*xs)[1], (*xs)[2]);
      }
    }
    return std::nullopt;
  }

  std::optional<std::array<double, 3>> draw_abscissas(double lo, double hi) {
    std::array<double, 3> xs{rng_.uniform(lo, hi), rng_.uniform(lo, hi),
                             rng_.uniform(lo, hi)};
    const double sep = min_separation();
    if (std::abs(xs[0] - xs[1]) < sep || std::abs(xs[0] - xs[2]) < sep ||
        std::abs(xs[1] - xs[2]) < sep) {
      return std::nullopt;
    }
    return xs;
  }

  SamplerConfig cfg_;
  DeterministicRng rng_;
};

}  // namespace curvesym
