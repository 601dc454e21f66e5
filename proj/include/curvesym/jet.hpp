//
// jet.hpp: truncated Taylor arithmetic carrying a value and its first three
// derivatives. Used to get exact derivatives of curve profiles built from
// smooth bump functions, where hand-written chain rules get unwieldy.
//
#pragma once

#include <cmath>

namespace curvesym {

struct Jet3 {
  double f = 0.0;   // value
  double f1 = 0.0;  // first derivative
  double f2 = 0.0;  // second derivative
  double f3 = 0.0;  // third derivative

  static Jet3 variable(double x) { return {x, 1.0, 0.0, 0.0}; }
  static Jet3 constant(double c) { return {c, 0.0, 0.0, 0.0}; }
};

inline Jet3 operator+(const Jet3& a, const Jet3& b) {
  return {a.f + b.f, a.f1 + b.f1, a.f2 + b.f2, a.f3 + b.f3};
}

inline Jet3 operator-(const Jet3& a, const Jet3& b) {
  return {a.f - b.f, a.f1 - b.f1, a.f2 - b.f2, a.f3 - b.f3};
}

inline Jet3 operator-(const Jet3& a) { return {-a.f, -a.f1, -a.f2, -a.f3}; }

inline Jet3 operator*(const Jet3& a, const Jet3& b) {
  return {a.f * b.f,
          a.f1 * b.f + a.f * b.f1,
          a.f2 * b.f + 2.0 * a.f1 * b.f1 + a.f * b.f2,
          a.f3 * b.f + 3.0 * a.f2 * b.f1 + 3.0 * a.f1 * b.f2 + a.f * b.f3};
}

inline Jet3 operator*(double c, const Jet3& a) { return Jet3::constant(c) * a; }
inline Jet3 operator+(double c, const Jet3& a) { return Jet3::constant(c) + a; }
inline Jet3 operator-(double c, const Jet3& a) { return Jet3::constant(c) - a; }

// Solve q*b = a order by order.
inline Jet3 operator/(const Jet3& a, const Jet3& b) {
  Jet3 q;
  q.f = a.f / b.f;
  q.f1 = (a.f1 - q.f * b.f1) / b.f;
  q.f2 = (a.f2 - 2.0 * q.f1 * b.f1 - q.f * b.f2) / b.f;
  q.f3 = (a.f3 - 3.0 * q.f2 * b.f1 - 3.0 * q.f1 * b.f2 - q.f * b.f3) / b.f;
  return q;
}

inline Jet3 exp(const Jet3& a) {
  const double e = std::exp(a.f);
  return {e,
          a.f1 * e,
          (a.f2 + a.f1 * a.f1) * e,
          (a.f3 + 3.0 * a.f1 * a.f2 + a.f1 * a.f1 * a.f1) * e};
}

inline Jet3 sin(const Jet3& a) {
  const double s = std::sin(a.f), c = std::cos(a.f);
  return {s,
          a.f1 * c,
          a.f2 * c - a.f1 * a.f1 * s,
          (a.f3 - a.f1 * a.f1 * a.f1) * c - 3.0 * a.f1 * a.f2 * s};
}

inline Jet3 cos(const Jet3& a) {
  const double s = std::sin(a.f), c = std::cos(a.f);
  return {c,
          -a.f1 * s,
          -a.f2 * s - a.f1 * a.f1 * c,
          -(a.f3 - a.f1 * a.f1 * a.f1) * s - 3.0 * a.f1 * a.f2 * c};
}

}  // namespace curvesym
