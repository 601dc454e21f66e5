//
// geometry.hpp: triangle data and Menger curvature for three-tuples of
// plane points, plus the admissible vertex ordering used by the remainder
// functionals.
//
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

#include "curvesym/curve.hpp"

namespace curvesym {

// Three pairwise-distinct plane points. When they lie on a declared curve
// the abscissas are carried along so restricted kernels can be evaluated.
struct Triple {
  Complex z1, z2, z3;
  std::optional<std::array<double, 3>> xs;

  Triple(Complex a, Complex b, Complex c, double separation_floor = 0.0)
      : z1(a), z2(b), z3(c) {
    const double m = min_pairwise_distance();
    if (!(m > separation_floor)) {
      throw std::invalid_argument("triple points must be pairwise distinct");
    }
  }

  static Triple on_curve(const CurveSpec& spec, double u, double x, double v,
                         double separation_floor = 0.0) {
    Triple t(point_at(spec, u), point_at(spec, x), point_at(spec, v),
             separation_floor);
    t.xs = {u, x, v};
    return t;
  }

  Complex operator[](int i) const { return i == 0 ? z1 : (i == 1 ? z2 : z3); }

  double min_pairwise_distance() const {
    return std::min({std::abs(z1 - z2), std::abs(z1 - z3), std::abs(z2 - z3)});
  }
};

// Side j is opposite vertex j; angles in radians.
struct TriangleStats {
  std::array<double, 3> side{};   // l1 = |z2 z3|, l2 = |z1 z3|, l3 = |z1 z2|
  std::array<double, 3> angle{};
  double area = 0.0;
  int orientation = 0;  // +1 ccw, -1 cw, 0 collinear
};

namespace detail {

// twice the signed area
inline double cross2(const Triple& t) {
  const Complex u = t.z2 - t.z1;
  const Complex v = t.z3 - t.z1;
  return u.real() * v.imag() - u.imag() * v.real();
}

inline double angle_from_sides(double opposite, double b, double c) {
  const double r = (b * b + c * c - opposite * opposite) / (2.0 * b * c);
  return std::acos(std::clamp(r, -1.0, 1.0));
}

}  // namespace detail

inline TriangleStats triangle_stats(const Triple& t) {
  TriangleStats s;
  s.side = {std::abs(t.z2 - t.z3), std::abs(t.z1 - t.z3), std::abs(t.z1 - t.z2)};
  const double cr = detail::cross2(t);
  s.area = 0.5 * std::abs(cr);
  s.orientation = cr > 0.0 ? 1 : (cr < 0.0 ? -1 : 0);
  // law of cosines with clamping keeps degenerate inputs finite
  s.angle = {detail::angle_from_sides(s.side[0], s.side[1], s.side[2]),
             detail::angle_from_sides(s.side[1], s.side[0], s.side[2]),
             detail::angle_from_sides(s.side[2], s.side[0], s.side[1])};
  return s;
}

// 2 Area / max side^2, a scale-free degeneracy measure.
inline double relative_area(const Triple& t) {
  const double l = std::max({std::abs(t.z1 - t.z2), std::abs(t.z1 - t.z3),
                             std::abs(t.z2 - t.z3)});
  return std::abs(detail::cross2(t)) / (l * l);
}

inline bool is_collinear(const Triple& t, double tol = 1e-12) {
  return relative_area(t) <= tol;
}

enum class Conditioning { WellConditioned, IllConditioned, Collinear };

inline Conditioning classify_conditioning(const Triple& t,
                                          double collinear_tol = 1e-12,
                                          double ill_tol = 1e-6) {
  const double r = relative_area(t);
  if (r <= collinear_tol) return Conditioning::Collinear;
  if (r <= ill_tol) return Conditioning::IllConditioned;
  return Conditioning::WellConditioned;
}

// Squared Menger curvature: (4 Area / (l1 l2 l3))^2, zero iff collinear.
inline double menger_curvature_sq(const Triple& t) {
  const double cr = detail::cross2(t);
  if (cr == 0.0) return 0.0;
  const double L1 = std::norm(t.z2 - t.z3);
  const double L2 = std::norm(t.z1 - t.z3);
  const double L3 = std::norm(t.z1 - t.z2);
  return 4.0 * (cr * cr) / (L1 * L2 * L3);
}

// Independent route to the same quantity: intersect two perpendicular
// bisectors to get the circumcenter, then square the reciprocal radius.
inline double menger_circumradius_sq(const Triple& t) {
  const Complex a = t.z2 - t.z1;
  const Complex b = t.z3 - t.z1;
  const double d = 2.0 * (a.real() * b.imag() - a.imag() * b.real());
  if (d == 0.0) return 0.0;
  const double na = std::norm(a), nb = std::norm(b);
  const double ux = (b.imag() * na - a.imag() * nb) / d;
  const double uy = (a.real() * nb - b.real() * na) / d;
  return 1.0 / (ux * ux + uy * uy);
}

// Same quantity from curve data alone, for abscissas (u, x, v) on the graph:
// numerator 4 [A(u)(x-v) + A(x)(v-u) + A(v)(u-x)]^2 over the product of the
// squared side lengths.
inline double menger_graph_sq(const CurveSpec& spec, double u, double x, double v) {
  if (u == x || x == v || u == v) throw std::invalid_argument("coincident abscissas");
  const double Au = height(spec, u), Ax = height(spec, x), Av = height(spec, v);
  const double num = Au * (x - v) + Ax * (v - u) + Av * (u - x);
  auto side_sq = [&](double p, double q, double Ap, double Aq) {
    const double dx = p - q, dy = Ap - Aq;
    return dx * dx + dy * dy;
  };
  const double Lu = side_sq(v, x, Av, Ax);
  const double Lx = side_sq(v, u, Av, Au);
  const double Lv = side_sq(x, u, Ax, Au);
  return 4.0 * num * num / (Lu * Lx * Lv);
}

// Reorder a non-collinear triple as (a, b, c) so that the foot of the
// altitude from c lies strictly inside the segment [a, b] and the triangle
// is counterclockwise. Taking (a, b) to be a longest side guarantees the
// interior-foot condition; a swap fixes the orientation.
inline Triple admissible_order(const Triple& t) {
  if (triangle_stats(t).orientation == 0) {
    throw std::invalid_argument("admissible order undefined for collinear points");
  }
  const std::array<double, 3> opp = {std::abs(t.z2 - t.z3), std::abs(t.z1 - t.z3),
                                     std::abs(t.z1 - t.z2)};
  const int apex =
      static_cast<int>(std::max_element(opp.begin(), opp.end()) - opp.begin());
  const int i = (apex + 1) % 3;
  const int j = (apex + 2) % 3;

  std::array<int, 3> order{i, j, apex};
  const Complex a = t[order[0]], b = t[order[1]], c = t[order[2]];
  const Complex u = b - a, v = c - a;
  if (u.real() * v.imag() - u.imag() * v.real() < 0.0) std::swap(order[0], order[1]);

  Triple out(t[order[0]], t[order[1]], t[order[2]]);
  if (t.xs) {
    out.xs = {{(*t.xs)[order[0]], (*t.xs)[order[1]], (*t.xs)[order[2]]}};
  }
  return out;
}

// Check both admissibility conditions directly (used by tests and by the
// remainder functionals' validation paths).
inline bool is_admissible_order(const Triple& t) {
  const Complex u = t.z2 - t.z1;
  const Complex v = t.z3 - t.z1;
  if (u.real() * v.imag() - u.imag() * v.real() <= 0.0) return false;
  const double proj = (v.real() * u.real() + v.imag() * u.imag()) / std::norm(u);
  return proj > 0.0 && proj < 1.0;
}

}  // namespace curvesym
