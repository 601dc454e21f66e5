#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "curvesym/kernels.hpp"
#include "curvesym/sampler.hpp"

using namespace curvesym;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
double rel_gap(Complex a, Complex b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}
}  // namespace

TEST_CASE("universal kernel") {
  CHECK(eval_k0({1, 0}, {0, 0}) == Complex(1, 0));
  CHECK(eval_k0({0, 1}, {0, 0}) == Complex(0, -1));
  CHECK(eval_k0({0, 0}, {1, 0}) == Complex(-1, 0));
  CHECK_THROWS_AS(eval_k0({1, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("restricted kernel on graphs") {
  SECTION("horizontal line") {
    CHECK(eval_k_gamma(CurveSpec::line(), 1.0, 0.0) == Complex(0, -1));
  }
  SECTION("half parabola at (1, 0)") {
    const Complex v = eval_k_gamma(CurveSpec::parabola(0.5), 1.0, 0.0);
    CHECK_THAT(v.real(), WithinRel(std::sqrt(2.0) / 5.0, 1e-14));
    CHECK_THAT(v.imag(), WithinRel(-3.0 * std::sqrt(2.0) / 5.0, 1e-14));
  }
  SECTION("real and imaginary quotient forms") {
    DeterministicRng rng(3);
    const CurveSpec spec = CurveSpec::parabola(0.5);
    for (int i = 0; i < 200; ++i) {
      const double x = rng.uniform(-3, 3), y = rng.uniform(-3, 3);
      if (std::abs(x - y) < 1e-3) continue;
      const Complex v = eval_k_gamma(spec, x, y);
      const double ap = slope_at(spec, x);
      const double s = std::hypot(1.0, ap);
      const double dist2 = std::norm(point_at(spec, x) - point_at(spec, y));
      const double re = (ap * (x - y) - (height(spec, x) - height(spec, y))) / (s * dist2);
      const double im = ((y - x) + ap * (height(spec, y) - height(spec, x))) / (s * dist2);
      CHECK_THAT(v.real(), WithinAbs(re, 1e-12 * (1 + std::abs(re))));
      CHECK_THAT(v.imag(), WithinAbs(im, 1e-12 * (1 + std::abs(im))));
    }
  }
  SECTION("errors") {
    CHECK_THROWS_AS(eval_k_gamma(CurveSpec::parabola(1.0), 0.3, 0.3),
                    std::invalid_argument);
    CHECK_THROWS_AS(eval_k_gamma(CurveSpec::bump_sine(), 2.5, 0.0),
                    std::domain_error);
  }
}

TEST_CASE("phase kernel family") {
  DeterministicRng rng(7);
  const PhaseFunction zero = PhaseFunction::constant(0.0);
  const PhaseFunction quarter = PhaseFunction::constant(M_PI_2);
  for (int i = 0; i < 20; ++i) {
    const Complex w(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const Complex z(rng.uniform(-2, 2), rng.uniform(-2, 2));
    if (std::abs(w - z) < 1e-6) continue;
    CHECK(eval_k_h(zero, w, z) == eval_k0(w, z));  // e^{i0} multiplies exactly
    CHECK(rel_gap(eval_k_h(quarter, w, z), Complex(0, 1) * eval_k0(w, z)) < 1e-15);
  }
  CHECK(eval_k_h_star(zero, {1, 0}, {0, 0}) == Complex(-1, 0));
  CHECK_THROWS_AS(eval_k_h(zero, {1, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("phase kernels keep the universal modulus") {
  DeterministicRng rng(11);
  const PhaseFunction h = PhaseFunction::custom(
      [](Complex w) { return std::sin(3.0 * w.real()) - w.imag(); });
  for (int i = 0; i < 500; ++i) {
    const Complex w(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const Complex z(rng.uniform(-2, 2), rng.uniform(-2, 2));
    if (std::abs(w - z) < 1e-6) continue;
    CHECK_THAT(std::abs(eval_k_h(h, w, z)), WithinRel(std::abs(eval_k0(w, z)), 1e-13));
    CHECK(rel_gap(eval_k_h_star(h, w, z), std::conj(eval_k_h(h, z, w))) < 1e-13);
  }
}

TEST_CASE("graph phase extension") {
  SECTION("line gives the constant quarter-turn phase") {
    const PhaseFunction h = graph_phase(CurveSpec::line());
    CHECK(h(Complex(0.3, 9.0)) == -M_PI_2);
    CHECK(h(Complex(-5.0, -2.0)) == -M_PI_2);
  }
  SECTION("restriction to the curve reproduces the restricted kernel") {
    const CurveSpec spec = CurveSpec::parabola(0.5);
    const PhaseFunction h = graph_phase(spec);
    DeterministicRng rng(13);
    for (int i = 0; i < 100; ++i) {
      const double x = rng.uniform(-3, 3), y = rng.uniform(-3, 3);
      if (std::abs(x - y) < 1e-3) continue;
      const Complex on_curve = eval_k_h(h, point_at(spec, x), point_at(spec, y));
      CHECK(rel_gap(on_curve, eval_k_gamma(spec, x, y)) < 1e-12);
    }
  }
  SECTION("vertical-line constancy and continuity") {
    const PhaseFunction h = graph_phase(CurveSpec::cubic());
    CHECK(h(Complex(1.0, -7.0)) == h(Complex(1.0, 42.0)));
    double prev = h(Complex(-3.0, 0.0));
    for (int i = 1; i <= 300; ++i) {
      const double x = -3.0 + 6.0 * i / 300.0;
      const double cur = h(Complex(x, 0.0));
      CHECK(std::abs(cur - prev) < M_PI);
      prev = cur;
    }
  }
}

TEST_CASE("skew form of the restricted kernel") {
  SECTION("vanishes identically on lines") {
    DeterministicRng rng(17);
    const CurveSpec line = CurveSpec::line(0.0, 0.0);
    const CurveSpec slanted = CurveSpec::line(1.7, -0.4);
    for (int i = 0; i < 200; ++i) {
      const double x = rng.uniform(-4, 4);
      double y = rng.uniform(-4, 4);
      if (std::abs(x - y) < 1e-2) y += 0.5;
      CHECK(std::abs(eval_kerzman_stein(line, x, y)) <= 1e-15);
      CHECK(std::abs(eval_kerzman_stein(slanted, x, y)) <= 1e-13);
    }
  }
  SECTION("skew symmetry") {
    DeterministicRng rng(19);
    const CurveSpec spec = CurveSpec::parabola(1.0);
    for (int i = 0; i < 200; ++i) {
      const double x = rng.uniform(-2, 2);
      double y = rng.uniform(-2, 2);
      if (std::abs(x - y) < 1e-3) y += 0.1;
      const Complex a = eval_kerzman_stein(spec, x, y);
      const Complex b = eval_kerzman_stein(spec, y, x);
      CHECK(std::abs(a + std::conj(b)) <=
            1e-13 * std::max(1.0, std::abs(a)));
    }
  }
  SECTION("stays bounded toward the diagonal on the parabola") {
    const CurveSpec spec = CurveSpec::parabola(1.0);
    double prev = 0.0;
    for (int k = 1; k <= 6; ++k) {
      const double h = std::pow(10.0, -k);
      const double v = std::abs(eval_kerzman_stein(spec, 0.3 + h, 0.3));
      CHECK(v < 0.1);
      if (k > 1) CHECK(v < prev);  // decays toward the diagonal value
      prev = v;
    }
  }
}

TEST_CASE("kernel handle dispatch") {
  const CurveSpec spec = CurveSpec::parabola(0.5);
  const Triple on = Triple::on_curve(spec, -1.0, 0.2, 1.3);
  const Triple off(Complex(0, 0), Complex(1, 0), Complex(0, 1));

  CHECK(KernelHandle::universal().evaluate(off, 0, 1) == eval_k0({0, 0}, {1, 0}));
  CHECK(KernelHandle::restricted(spec).evaluate(on, 0, 2) ==
        eval_k_gamma(spec, -1.0, 1.3));
  CHECK(KernelHandle::kerzman_stein(spec).evaluate(on, 1, 0) ==
        eval_kerzman_stein(spec, 0.2, -1.0));
  CHECK_THROWS_AS(KernelHandle::restricted(spec).evaluate(off, 0, 1),
                  std::invalid_argument);
  CHECK(KernelHandle::restricted(spec).needs_abscissas());
  CHECK_FALSE(KernelHandle::universal().needs_abscissas());
}
