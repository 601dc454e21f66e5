//
// kernels.hpp: point evaluation of the Cauchy-type kernels. All variants
// drop the 1/(2 pi) normalization, so the symmetrized forms relate to the
// squared Menger curvature without constant factors.
//
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <stdexcept>
#include <variant>

#include "curvesym/curve.hpp"
#include "curvesym/geometry.hpp"

namespace curvesym {

// Real-valued phase over the plane. The graph extension of a curve is
// constant along vertical lines and restricts to the curve's tangent phase.
struct PhaseFunction {
  enum class Kind { Constant, GraphExtension, Custom };

  Kind kind = Kind::Constant;
  double value = 0.0;
  std::shared_ptr<const CurveSpec> curve;
  std::function<double(Complex)> fn;

  double operator()(Complex w) const {
    switch (kind) {
      case Kind::Constant: return value;
      case Kind::GraphExtension:
        return tangent_phase_from_slope(slope_at(*curve, w.real()));
      case Kind::Custom: return fn(w);
    }
    throw std::logic_error("unreachable");
  }

  static PhaseFunction constant(double v) {
    PhaseFunction p;
    p.kind = Kind::Constant;
    p.value = v;
    return p;
  }
  static PhaseFunction custom(std::function<double(Complex)> f) {
    PhaseFunction p;
    p.kind = Kind::Custom;
    p.fn = std::move(f);
    return p;
  }
};

namespace detail {
inline void require_distinct(Complex w, Complex z) {
  if (w == z) throw std::invalid_argument("kernel arguments must be distinct");
}
}  // namespace detail

// 1/(w - z)
inline Complex eval_k0(Complex w, Complex z) {
  detail::require_distinct(w, z);
  return 1.0 / (w - z);
}

// (A'(x) - i) / [ s(x) ((x - y) + i (A(x) - A(y))) ] for abscissas x, y.
inline Complex eval_k_gamma(const CurveSpec& spec, double x, double y) {
  if (x == y) throw std::invalid_argument("coincident abscissas");
  const double ap = slope_at(spec, x);
  const double s = std::hypot(1.0, ap);
  const Complex dz(x - y, height_diff(spec, x, y));
  return Complex(ap, -1.0) / (s * dz);
}

// e^{i h(w)} / (w - z)
inline Complex eval_k_h(const PhaseFunction& h, Complex w, Complex z) {
  detail::require_distinct(w, z);
  return std::polar(1.0, h(w)) / (w - z);
}

// dual kernel: e^{-i h(z)} / (conj z - conj w)
inline Complex eval_k_h_star(const PhaseFunction& h, Complex w, Complex z) {
  detail::require_distinct(w, z);
  return std::polar(1.0, -h(z)) / (std::conj(z) - std::conj(w));
}

// Vertical-line-constant extension of the curve's tangent phase; restricting
// the resulting kernel to the curve reproduces eval_k_gamma.
inline PhaseFunction graph_phase(const CurveSpec& spec) {
  PhaseFunction p;
  p.kind = PhaseFunction::Kind::GraphExtension;
  p.curve = std::make_shared<const CurveSpec>(spec);
  return p;
}

// K_Gamma(w, z) - conj(K_Gamma(z, w)) at curve abscissas; vanishes on lines
// and stays smooth across the diagonal on curved graphs.
inline Complex eval_kerzman_stein(const CurveSpec& spec, double x, double y) {
  return eval_k_gamma(spec, x, y) - std::conj(eval_k_gamma(spec, y, x));
}

// --- kernel selection for the symmetrization driver ---

struct UniversalKernel {};
struct RestrictedKernel {
  CurveSpec spec;
};
struct PhaseKernel {
  PhaseFunction h;
};
struct DualPhaseKernel {
  PhaseFunction h;
};
struct KerzmanSteinKernel {
  CurveSpec spec;
};

struct KernelHandle {
  std::variant<UniversalKernel, RestrictedKernel, PhaseKernel, DualPhaseKernel,
               KerzmanSteinKernel>
      variant;

  static KernelHandle universal() { return {UniversalKernel{}}; }
  static KernelHandle restricted(CurveSpec spec) { return {RestrictedKernel{std::move(spec)}}; }
  static KernelHandle phase(PhaseFunction h) { return {PhaseKernel{std::move(h)}}; }
  static KernelHandle dual_phase(PhaseFunction h) { return {DualPhaseKernel{std::move(h)}}; }
  static KernelHandle kerzman_stein(CurveSpec spec) { return {KerzmanSteinKernel{std::move(spec)}}; }

  bool needs_abscissas() const {
    return std::holds_alternative<RestrictedKernel>(variant) ||
           std::holds_alternative<KerzmanSteinKernel>(variant);
  }

  // kernel value at the (i, j) pair of the triple, i != j
  Complex evaluate(const Triple& t, int i, int j) const {
    return std::visit(
        [&](const auto& k) -> Complex {
          using T = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<T, UniversalKernel>) {
            return eval_k0(t[i], t[j]);
          } else if constexpr (std::is_same_v<T, RestrictedKernel>) {
            const auto& xs = require_xs(t);
            return eval_k_gamma(k.spec, xs[i], xs[j]);
          } else if constexpr (std::is_same_v<T, PhaseKernel>) {
            return eval_k_h(k.h, t[i], t[j]);
          } else if constexpr (std::is_same_v<T, DualPhaseKernel>) {
            return eval_k_h_star(k.h, t[i], t[j]);
          } else {
            const auto& xs = require_xs(t);
            return eval_kerzman_stein(k.spec, xs[i], xs[j]);
          }
        },
        variant);
  }

 private:
  static const std::array<double, 3>& require_xs(const Triple& t) {
    if (!t.xs) throw std::invalid_argument("restricted kernel needs curve abscissas");
    return *t.xs;
  }
};

}  // namespace curvesym
