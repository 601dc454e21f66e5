//
// symmetry.hpp: the six-permutation symmetrized form of a kernel, its
// real/imaginary split, the closed forms for graph curves, and the
// remainder functionals attached to phase kernels.
//
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "curvesym/geometry.hpp"
#include "curvesym/kernels.hpp"

namespace curvesym {

struct SymmetrizationResult {
  Complex full{};       // sum over all six permutations, real-valued in exact arithmetic
  double re_part = 0.0; // symmetrization of Re K
  double im_part = 0.0; // symmetrization of Im K
  double c_sq = 0.0;    // squared Menger curvature of the triple
  Conditioning condition = Conditioning::WellConditioned;
};

// Literal permutation sum. This is deliberately the unoptimized form so it
// can serve as the reference for every closed-form route.
inline SymmetrizationResult symmetrize(const KernelHandle& k, const Triple& t) {
  Complex K[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) K[i][j] = k.evaluate(t, i, j);

  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  SymmetrizationResult r;
  for (const auto& p : perms) {
    r.full += K[p[0]][p[1]] * std::conj(K[p[0]][p[2]]);
  }
  for (int j = 0; j < 3; ++j) {
    const int a = (j + 1) % 3, b = (j + 2) % 3;
    r.re_part += 2.0 * K[j][a].real() * K[j][b].real();
    r.im_part += 2.0 * K[j][a].imag() * K[j][b].imag();
  }
  r.c_sq = menger_curvature_sq(t);
  r.condition = classify_conditioning(t);
  return r;
}

namespace detail {

struct GraphTripleData {
  std::array<double, 3> x{}, A{}, A1{}, s2{};
  std::array<double, 3> side_sq{};  // side opposite each vertex
};

inline GraphTripleData graph_triple_data(const CurveSpec& spec,
                                          const std::array<double, 3>& xs) {
  if (xs[0] == xs[1] || xs[1] == xs[2] || xs[0] == xs[2])
    throw std::invalid_argument("coincident abscissas");
  GraphTripleData d;
  for (int i = 0; i < 3; ++i) {
    d.x[i] = xs[i];
    d.A[i] = height(spec, xs[i]);
    d.A1[i] = slope_at(spec, xs[i]);
    d.s2[i] = 1.0 + d.A1[i] * d.A1[i];
  }
  for (int j = 0; j < 3; ++j) {
    const int a = (j + 1) % 3, b = (j + 2) % 3;
    const double dx = d.x[a] - d.x[b];
    const double dy = height_diff(spec, d.x[a], d.x[b]);
    d.side_sq[j] = dx * dx + dy * dy;
  }
  return d;
}

}  // namespace detail

// Per-vertex terms of the graph closed form for the symmetrized real part:
// term_j = 2 [A'(x_j)(x_j-x_k) - (A_j-A_k)] [A'(x_j)(x_j-x_l) - (A_j-A_l)]
//          / (s^2(x_j) l_k^2 l_l^2).
// Their sum equals the permutation sum of Re K_Gamma.
inline std::array<double, 3> s_re_graph_terms(const CurveSpec& spec,
                                              const std::array<double, 3>& xs) {
  const auto d = detail::graph_triple_data(spec, xs);
  std::array<double, 3> terms{};
  for (int j = 0; j < 3; ++j) {
    const int a = (j + 1) % 3, b = (j + 2) % 3;
    const double Pa = d.A1[j] * (d.x[j] - d.x[a]) - height_diff(spec, d.x[j], d.x[a]);
    const double Pb = d.A1[j] * (d.x[j] - d.x[b]) - height_diff(spec, d.x[j], d.x[b]);
    terms[j] = 2.0 * Pa * Pb / (d.s2[j] * d.side_sq[a] * d.side_sq[b]);
  }
  return terms;
}

inline std::array<double, 3> s_im_graph_terms(const CurveSpec& spec,
                                              const std::array<double, 3>& xs) {
  const auto d = detail::graph_triple_data(spec, xs);
  std::array<double, 3> terms{};
  for (int j = 0; j < 3; ++j) {
    const int a = (j + 1) % 3, b = (j + 2) % 3;
    const double Qa = (d.x[a] - d.x[j]) + d.A1[j] * height_diff(spec, d.x[a], d.x[j]);
    const double Qb = (d.x[b] - d.x[j]) + d.A1[j] * height_diff(spec, d.x[b], d.x[j]);
    terms[j] = 2.0 * Qa * Qb / (d.s2[j] * d.side_sq[a] * d.side_sq[b]);
  }
  return terms;
}

// Magnitude against which rounding error in each vertex term should be
// judged: the same quotient with the cancelling differences replaced by
// magnitude sums. A term computed as exactly zero still gets a positive
// scale whenever the inputs are nonzero.
inline std::array<double, 3> s_re_graph_term_scales(const CurveSpec& spec,
                                                    const std::array<double, 3>& xs) {
  const auto d = detail::graph_triple_data(spec, xs);
  std::array<double, 3> scales{};
  for (int j = 0; j < 3; ++j) {
    const int a = (j + 1) % 3, b = (j + 2) % 3;
    const double Sa = std::abs(d.A1[j] * (d.x[j] - d.x[a])) +
                      std::abs(height_diff(spec, d.x[j], d.x[a]));
    const double Sb = std::abs(d.A1[j] * (d.x[j] - d.x[b])) +
                      std::abs(height_diff(spec, d.x[j], d.x[b]));
    scales[j] = 2.0 * Sa * Sb / (d.s2[j] * d.side_sq[a] * d.side_sq[b]);
  }
  return scales;
}

inline double s_re_graph(const CurveSpec& spec, const std::array<double, 3>& xs) {
  const auto t = s_re_graph_terms(spec, xs);
  return t[0] + t[1] + t[2];
}

inline double s_im_graph(const CurveSpec& spec, const std::array<double, 3>& xs) {
  const auto t = s_im_graph_terms(spec, xs);
  return t[0] + t[1] + t[2];
}

struct RemainderReport {
  double r_h = std::numeric_limits<double>::quiet_NaN();
  double h_val = std::numeric_limits<double>::quiet_NaN();
  double via_formula = 0.0;
  double via_identity = 0.0;
  double alpha21 = 0.0;  // principal argument of z2 - z1 after reordering
};

namespace detail {

inline double reduce_angle(double a) { return std::remainder(a, 2.0 * M_PI); }

inline void require_usable_c_sq(const Triple& t, double c_sq) {
  const double l = std::max({std::abs(t.z1 - t.z2), std::abs(t.z1 - t.z3),
                             std::abs(t.z2 - t.z3)});
  if (!(c_sq >= 1e-14 / (l * l))) {
    throw std::invalid_argument("triple too close to collinear for the identity route");
  }
}

}  // namespace detail

// Closed form for the remainder, evaluated on a triple that is already in
// admissible order. Any valid admissible labeling yields the same value.
inline double remainder_formula_on(const PhaseFunction& h, const Triple& a,
                                   double* alpha21_out = nullptr) {
  const TriangleStats st = triangle_stats(a);
  const double l1 = st.side[0], l2 = st.side[1], l3 = st.side[2];
  const double pref = l1 * l2 * l3 / ((4.0 * st.area) * (4.0 * st.area));
  const double alpha21 = std::arg(a.z2 - a.z1);
  if (alpha21_out) *alpha21_out = alpha21;
  auto shifted = [&](Complex z) { return detail::reduce_angle(2.0 * h(z) - 2.0 * alpha21); };
  const double bracket =
      l1 * std::cos(detail::reduce_angle(shifted(a.z1) - st.angle[0])) +
      l2 * std::cos(detail::reduce_angle(shifted(a.z2) + st.angle[1])) -
      l3 * std::cos(detail::reduce_angle(shifted(a.z3) + st.angle[1] - st.angle[0]));
  return pref * bracket;
}

// Closed form for the dual-kernel ratio on an admissible ordering.
inline double h_formula_on(const PhaseFunction& h, const Triple& a) {
  const TriangleStats st = triangle_stats(a);
  const double l1 = st.side[0], l2 = st.side[1], l3 = st.side[2];
  const double pref = 2.0 * l1 * l2 * l3 / ((4.0 * st.area) * (4.0 * st.area));
  const double h1 = h(a.z1), h2 = h(a.z2), h3 = h(a.z3);
  const double bracket =
      l1 * std::cos(detail::reduce_angle(h2 - h3 + st.angle[0])) +
      l2 * std::cos(detail::reduce_angle(h1 - h3 - st.angle[1])) +
      l3 * std::cos(detail::reduce_angle(h1 - h2 + st.angle[2]));
  return pref * bracket;
}

// Deviation of the symmetrized real part of a phase kernel from the balanced
// half split: S[Re K_h] = c^2 (1/2 + R_h). The closed form is evaluated on
// an admissible reordering; the identity route recovers the same number from
// the permutation sum.
inline RemainderReport remainder_rh(const PhaseFunction& h, const Triple& t) {
  RemainderReport rep;
  rep.via_formula = remainder_formula_on(h, admissible_order(t), &rep.alpha21);
  const SymmetrizationResult s = symmetrize(KernelHandle::phase(h), t);
  detail::require_usable_c_sq(t, s.c_sq);
  rep.via_identity = s.re_part / s.c_sq - 0.5;
  rep.r_h = rep.via_formula;
  return rep;
}

// Ratio S[K_h*] / c^2; identically 1 exactly when the phase is constant.
inline RemainderReport h_functional(const PhaseFunction& h, const Triple& t) {
  const Triple a = admissible_order(t);
  RemainderReport rep;
  rep.alpha21 = std::arg(a.z2 - a.z1);
  rep.via_formula = h_formula_on(h, a);
  const SymmetrizationResult s = symmetrize(KernelHandle::dual_phase(h), t);
  detail::require_usable_c_sq(t, s.c_sq);
  rep.via_identity = s.full.real() / s.c_sq;
  rep.h_val = rep.via_formula;
  return rep;
}

}  // namespace curvesym
