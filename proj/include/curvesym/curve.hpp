//
// curve.hpp: plane curves given as graphs y = A(x) over an open interval,
// with evaluators for A and its first three derivatives, plus the derived
// pointwise data (speed, signed curvature, tangent phase).
//
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "curvesym/jet.hpp"

namespace curvesym {

using Complex = std::complex<double>;

enum class CurveKind { Line, Parabola, Cubic, BumpSine, Custom };

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x > lo && x < hi; }
  bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }
  double width() const { return hi - lo; }
};

using ScalarFn = std::function<double(double)>;

// A graph curve y = A(x), x in an open interval. Built-in kinds carry their
// parameters; Custom carries closed-form evaluators (A required, derivatives
// optional with a finite-difference fallback).
struct CurveSpec {
  CurveKind kind = CurveKind::Line;
  double slope = 0.0;       // Line: A(x) = slope*x + intercept
  double intercept = 0.0;
  double coefficient = 1.0; // Parabola: A(x) = coefficient * x^2
  Interval domain{};
  std::string label;        // optional name for Custom kinds
  ScalarFn fA, fA1, fA2, fA3;

  static CurveSpec line(double m = 0.0, double b = 0.0) {
    CurveSpec s;
    s.kind = CurveKind::Line;
    s.slope = m;
    s.intercept = b;
    return s;
  }
  static CurveSpec parabola(double a) {
    CurveSpec s;
    s.kind = CurveKind::Parabola;
    s.coefficient = a;
    return s;
  }
  static CurveSpec cubic() {
    CurveSpec s;
    s.kind = CurveKind::Cubic;
    return s;
  }
  static CurveSpec bump_sine() {
    CurveSpec s;
    s.kind = CurveKind::BumpSine;
    s.domain = {-1.0, 2.0};
    return s;
  }
  static CurveSpec custom(std::string name, ScalarFn A, ScalarFn A1 = {},
                          ScalarFn A2 = {}, ScalarFn A3 = {},
                          Interval dom = {}) {
    CurveSpec s;
    s.kind = CurveKind::Custom;
    s.label = std::move(name);
    s.fA = std::move(A);
    s.fA1 = std::move(A1);
    s.fA2 = std::move(A2);
    s.fA3 = std::move(A3);
    s.domain = dom;
    return s;
  }
  // Convex reference curve used alongside the parabolas.
  static CurveSpec cosh_graph() {
    return custom(
        "cosh", [](double x) { return std::cosh(x); },
        [](double x) { return std::sinh(x); },
        [](double x) { return std::cosh(x); },
        [](double x) { return std::sinh(x); });
  }
};

struct CurvePointData {
  double x = 0.0;
  double height = 0.0;     // A(x)
  double slope = 0.0;      // A'(x)
  double speed = 1.0;      // sqrt(1 + A'(x)^2)
  double curvature = 0.0;  // A''(x) / speed^3, signed
  double phase = 0.0;      // continuous angle with e^{i phase} = (A'(x) - i)/speed
};

namespace detail {

// Smooth transition: 0 for t <= 0, 1 for t >= 1, C-infinity throughout.
// Built from f(t) = exp(-1/t). The clamps below only cut values that
// underflow to zero in double precision anyway; they avoid inf/0 artifacts.
inline Jet3 smooth_step(const Jet3& t) {
  if (t.f <= 1e-3) return Jet3::constant(0.0);
  if (t.f >= 1.0 - 1e-3) return Jet3::constant(1.0);
  const Jet3 fpos = exp(Jet3::constant(-1.0) / t);
  const Jet3 fneg = exp(Jet3::constant(-1.0) / (1.0 - t));
  return fpos / (fpos + fneg);
}

// Plateau bump: identically 1 on [0.3, 0.7], supported in (0.1, 0.9).
inline Jet3 plateau(const Jet3& x) {
  return smooth_step((x - Jet3::constant(0.1)) / Jet3::constant(0.2)) *
         smooth_step((Jet3::constant(0.9) - x) / Jet3::constant(0.2));
}

// Profile of the BumpSine curve: A(x) = chi(x) sin(2 pi x) with
// chi(x) = (1/(2 pi) + (x - 1/2)) * plateau(x), so that chi(1/2) = 1/(2 pi)
// and chi'(1/2) = 1.
inline Jet3 bump_sine_jet(double x) {
  static const double kInvTwoPi = 1.0 / (2.0 * M_PI);
  const Jet3 xj = Jet3::variable(x);
  const Jet3 chi = (Jet3::constant(kInvTwoPi) + (xj - Jet3::constant(0.5))) * plateau(xj);
  return chi * sin(Jet3::constant(2.0 * M_PI) * xj);
}

inline double fd_step(double x) { return std::max(1e-5, 1e-5 * std::abs(x)); }

inline double fd_slope(const ScalarFn& A, double x) {
  const double h = fd_step(x);
  return (-A(x + 2 * h) + 8 * A(x + h) - 8 * A(x - h) + A(x - 2 * h)) / (12 * h);
}

inline double fd_second(const ScalarFn& A, double x) {
  const double h = fd_step(x);
  return (-A(x + 2 * h) + 16 * A(x + h) - 30 * A(x) + 16 * A(x - h) - A(x - 2 * h)) /
         (12 * h * h);
}

// The third derivative needs a much wider step: eps/h^3 roundoff would
// swamp the value at the step used for the lower orders.
inline double fd_third(const ScalarFn& A, double x) {
  const double h = std::max(1e-3, 1e-3 * std::abs(x));
  return (A(x - 3 * h) - 8 * A(x - 2 * h) + 13 * A(x - h) - 13 * A(x + h) +
          8 * A(x + 2 * h) - A(x + 3 * h)) /
         (8 * h * h * h);
}

inline void require_interior(const CurveSpec& spec, double x) {
  if (!spec.domain.contains(x)) {
    std::ostringstream os;
    os << "abscissa " << x << " outside open domain (" << spec.domain.lo << ", "
       << spec.domain.hi << ")";
    throw std::domain_error(os.str());
  }
}

}  // namespace detail

inline double height(const CurveSpec& spec, double x) {
  detail::require_interior(spec, x);
  switch (spec.kind) {
    case CurveKind::Line: return spec.slope * x + spec.intercept;
    case CurveKind::Parabola: return spec.coefficient * x * x;
    case CurveKind::Cubic: return x * x * x;
    case CurveKind::BumpSine: return detail::bump_sine_jet(x).f;
    case CurveKind::Custom: return spec.fA(x);
  }
  throw std::logic_error("unreachable");
}

inline double slope_at(const CurveSpec& spec, double x) {
  detail::require_interior(spec, x);
  switch (spec.kind) {
    case CurveKind::Line: return spec.slope;
    case CurveKind::Parabola: return 2.0 * spec.coefficient * x;
    case CurveKind::Cubic: return 3.0 * x * x;
    case CurveKind::BumpSine: return detail::bump_sine_jet(x).f1;
    case CurveKind::Custom:
      return spec.fA1 ? spec.fA1(x) : detail::fd_slope(spec.fA, x);
  }
  throw std::logic_error("unreachable");
}

inline double second_derivative(const CurveSpec& spec, double x) {
  detail::require_interior(spec, x);
  switch (spec.kind) {
    case CurveKind::Line: return 0.0;
    case CurveKind::Parabola: return 2.0 * spec.coefficient;
    case CurveKind::Cubic: return 6.0 * x;
    case CurveKind::BumpSine: return detail::bump_sine_jet(x).f2;
    case CurveKind::Custom:
      return spec.fA2 ? spec.fA2(x) : detail::fd_second(spec.fA, x);
  }
  throw std::logic_error("unreachable");
}

inline double third_derivative(const CurveSpec& spec, double x) {
  detail::require_interior(spec, x);
  switch (spec.kind) {
    case CurveKind::Line:
    case CurveKind::Parabola: return 0.0;
    case CurveKind::Cubic: return 6.0;
    case CurveKind::BumpSine: return detail::bump_sine_jet(x).f3;
    case CurveKind::Custom:
      return spec.fA3 ? spec.fA3(x) : detail::fd_third(spec.fA, x);
  }
  throw std::logic_error("unreachable");
}

// A(x) - A(y), factored for the built-in kinds so that nearby abscissas do
// not lose the leading digits of the difference.
inline double height_diff(const CurveSpec& spec, double x, double y) {
  detail::require_interior(spec, x);
  detail::require_interior(spec, y);
  switch (spec.kind) {
    case CurveKind::Line: return spec.slope * (x - y);
    case CurveKind::Parabola: return spec.coefficient * (x - y) * (x + y);
    case CurveKind::Cubic: return (x - y) * (x * x + x * y + y * y);
    default: return height(spec, x) - height(spec, y);
  }
}

inline Complex point_at(const CurveSpec& spec, double x) {
  return {x, height(spec, x)};
}

// The phase is the argument of (A'(x) - i)/speed. Its imaginary part is
// strictly negative, so the principal branch is itself continuous in x and
// no unwrapping correction is ever required. Values lie in (-pi, 0).
inline double tangent_phase_from_slope(double slope) {
  return std::atan2(-1.0, slope);
}

inline CurvePointData curve_data(const CurveSpec& spec, double x) {
  CurvePointData d;
  d.x = x;
  d.height = height(spec, x);
  d.slope = slope_at(spec, x);
  d.speed = std::hypot(1.0, d.slope);
  d.curvature = second_derivative(spec, x) / (d.speed * d.speed * d.speed);
  d.phase = tangent_phase_from_slope(d.slope);
  return d;
}

// Supremum of |A''| over the interval. Closed form where the kind permits,
// otherwise the max over n uniformly spaced samples.
inline double lipschitz_of_derivative(const CurveSpec& spec, Interval interval,
                                      std::size_t n = 10001) {
  if (!(interval.lo < interval.hi)) throw std::invalid_argument("empty interval");
  if (n < 2) throw std::invalid_argument("need at least two samples");
  switch (spec.kind) {
    case CurveKind::Line: return 0.0;
    case CurveKind::Parabola: return 2.0 * std::abs(spec.coefficient);
    case CurveKind::Cubic:
      if (!interval.finite()) throw std::domain_error("unbounded |A''| on infinite interval");
      return 6.0 * std::max(std::abs(interval.lo), std::abs(interval.hi));
    default: {
      if (!interval.finite())
        throw std::domain_error("sampled bound requires a finite interval");
      double m = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        double x = interval.lo + t * interval.width();
        // stay interior to the curve domain
        x = std::min(std::max(x, std::nextafter(interval.lo, interval.hi)),
                     std::nextafter(interval.hi, interval.lo));
        m = std::max(m, std::abs(second_derivative(spec, x)));
      }
      return m;
    }
  }
}

// --- plain-text records (used by the CLI config format) ---

inline std::string format_interval_bound(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

inline std::map<std::string, std::string> to_record(const CurveSpec& spec) {
  std::map<std::string, std::string> r;
  auto num = [](double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  };
  switch (spec.kind) {
    case CurveKind::Line:
      r["kind"] = "line";
      r["slope"] = num(spec.slope);
      r["intercept"] = num(spec.intercept);
      break;
    case CurveKind::Parabola:
      r["kind"] = "parabola";
      r["coefficient"] = num(spec.coefficient);
      break;
    case CurveKind::Cubic: r["kind"] = "cubic"; break;
    case CurveKind::BumpSine: r["kind"] = "bumpsine"; break;
    case CurveKind::Custom:
      if (spec.label.empty())
        throw std::invalid_argument("custom curve without a registered name is not serializable");
      r["kind"] = spec.label;
      break;
  }
  r["domain_lo"] = format_interval_bound(spec.domain.lo);
  r["domain_hi"] = format_interval_bound(spec.domain.hi);
  return r;
}

inline double parse_interval_bound(const std::string& s) {
  if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return std::stod(s);
}

// Shorthand strings: line[:m[,b]] | parabola:<a> | cubic | bumpsine | cosh
inline CurveSpec parse_curve(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (name == "line") {
    double m = 0.0, b = 0.0;
    if (!args.empty()) {
      const auto comma = args.find(',');
      m = std::stod(args.substr(0, comma));
      if (comma != std::string::npos) b = std::stod(args.substr(comma + 1));
    }
    return CurveSpec::line(m, b);
  }
  if (name == "parabola") {
    if (args.empty()) throw std::invalid_argument("parabola needs a coefficient, e.g. parabola:0.5");
    return CurveSpec::parabola(std::stod(args));
  }
  if (name == "cubic") return CurveSpec::cubic();
  if (name == "bumpsine") return CurveSpec::bump_sine();
  if (name == "cosh") return CurveSpec::cosh_graph();
  throw std::invalid_argument("unknown curve '" + text + "'");
}

inline CurveSpec from_record(const std::map<std::string, std::string>& r) {
  const auto kind_it = r.find("kind");
  if (kind_it == r.end()) throw std::invalid_argument("curve record lacks 'kind'");
  CurveSpec spec;
  const std::string& kind = kind_it->second;
  auto get = [&r](const char* key, double fallback) {
    const auto it = r.find(key);
    return it == r.end() ? fallback : std::stod(it->second);
  };
  if (kind == "line") {
    spec = CurveSpec::line(get("slope", 0.0), get("intercept", 0.0));
  } else if (kind == "parabola") {
    spec = CurveSpec::parabola(get("coefficient", 1.0));
  } else if (kind == "cubic") {
    spec = CurveSpec::cubic();
  } else if (kind == "bumpsine") {
    spec = CurveSpec::bump_sine();
  } else if (kind == "cosh") {
    spec = CurveSpec::cosh_graph();
  } else {
    throw std::invalid_argument("unknown curve kind '" + kind + "'");
  }
  if (auto it = r.find("domain_lo"); it != r.end()) spec.domain.lo = parse_interval_bound(it->second);
  if (auto it = r.find("domain_hi"); it != r.end()) spec.domain.hi = parse_interval_bound(it->second);
  return spec;
}

}  // namespace curvesym
