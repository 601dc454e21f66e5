#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "curvesym/curve.hpp"
#include "curvesym/sampler.hpp"
#include "oracles.hpp"

using namespace curvesym;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("point evaluation on the built-in curves") {
  CHECK(point_at(CurveSpec::parabola(0.5), 1.0) == Complex(1.0, 0.5));
  CHECK(point_at(CurveSpec::cubic(), 2.0) == Complex(2.0, 8.0));

  const Complex bump_mid = point_at(CurveSpec::bump_sine(), 0.5);
  CHECK(bump_mid.real() == 0.5);
  CHECK_THAT(bump_mid.imag(), WithinAbs(0.0, 1e-15));

  CHECK(point_at(CurveSpec::line(2.0, -1.0), 3.0) == Complex(3.0, 5.0));
}

TEST_CASE("pointwise curve data") {
  SECTION("parabola vertex") {
    const auto d = curve_data(CurveSpec::parabola(0.5), 0.0);
    CHECK(d.slope == 0.0);
    CHECK(d.speed == 1.0);
    CHECK_THAT(d.curvature, WithinRel(1.0, 1e-15));
    CHECK_THAT(d.phase, WithinAbs(-M_PI_2, 1e-15));
  }
  SECTION("cubic at x = 1") {
    const auto d = curve_data(CurveSpec::cubic(), 1.0);
    CHECK(d.slope == 3.0);
    CHECK_THAT(d.speed, WithinRel(std::sqrt(10.0), 1e-15));
    CHECK_THAT(d.curvature, WithinRel(6.0 / std::pow(10.0, 1.5), 1e-14));
  }
  SECTION("bump curve at the half point") {
    const auto d = curve_data(CurveSpec::bump_sine(), 0.5);
    CHECK_THAT(d.slope, WithinAbs(-1.0, 1e-14));
    CHECK_THAT(d.speed, WithinRel(std::sqrt(2.0), 1e-14));
    CHECK(d.curvature < 0.0);  // A'' = -4 pi chi'(1/2) there
    CHECK_THAT(second_derivative(CurveSpec::bump_sine(), 0.5),
               WithinRel(-4.0 * M_PI, 1e-10));
  }
}

TEST_CASE("domain checks") {
  const CurveSpec bump = CurveSpec::bump_sine();
  CHECK_THROWS_AS(height(bump, -1.0), std::domain_error);
  CHECK_THROWS_AS(curve_data(bump, 2.5), std::domain_error);
  CHECK_NOTHROW(height(bump, 1.999));
  CHECK_NOTHROW(height(CurveSpec::parabola(1.0), 1e9));
}

TEST_CASE("slope bound over an interval") {
  CHECK(lipschitz_of_derivative(CurveSpec::line(3.0, 1.0), {-1e9, 1e9}) == 0.0);
  CHECK(lipschitz_of_derivative(CurveSpec::parabola(1.0), Interval{}) == 2.0);
  CHECK(lipschitz_of_derivative(CurveSpec::cubic(), {-0.25, 0.25}) == 1.5);
  CHECK(lipschitz_of_derivative(CurveSpec::cubic(), {-0.1, 0.3}) == 6.0 * 0.3);

  const double bump_bound =
      lipschitz_of_derivative(CurveSpec::bump_sine(), {0.0, 1.0}, 2001);
  CHECK(bump_bound > 4.0 * M_PI - 1.0);
  CHECK(std::isfinite(bump_bound));

  CHECK_THROWS_AS(lipschitz_of_derivative(CurveSpec::cubic(), {1.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(lipschitz_of_derivative(CurveSpec::cubic(), Interval{}),
                  std::domain_error);
  CHECK_THROWS_AS(lipschitz_of_derivative(CurveSpec::bump_sine(), {0.0, 1.0}, 1),
                  std::invalid_argument);
}

TEST_CASE("speed, phase and curvature invariants on sampled points") {
  const CurveSpec curves[] = {CurveSpec::line(0.7, 0.2), CurveSpec::parabola(1.0),
                              CurveSpec::cubic(), CurveSpec::bump_sine(),
                              CurveSpec::cosh_graph()};
  for (const auto& spec : curves) {
    const double lo = spec.kind == CurveKind::BumpSine ? -0.9 : -3.0;
    const double hi = spec.kind == CurveKind::BumpSine ? 1.9 : 3.0;
    double prev_phase = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double x = lo + (hi - lo) * i / 400.0;
      const auto d = curve_data(spec, x);
      REQUIRE(d.speed >= 1.0);
      // e^{i phase} must be the unit vector (A' - i)/speed
      const Complex unit = std::polar(1.0, d.phase);
      CHECK_THAT(std::abs(unit), WithinAbs(1.0, 1e-12));
      CHECK_THAT(unit.real(), WithinAbs(d.slope / d.speed, 1e-12));
      CHECK_THAT(unit.imag(), WithinAbs(-1.0 / d.speed, 1e-12));
      const double a2 = second_derivative(spec, x);
      if (std::abs(a2) > 1e-9) {
        CHECK(std::signbit(d.curvature) == std::signbit(a2));
      }
      if (i > 0) CHECK(std::abs(d.phase - prev_phase) < M_PI);
      prev_phase = d.phase;
    }
  }
}

TEST_CASE("central differences agree with the supplied derivatives") {
  const double h = 1e-5;
  for (double x : {-1.7, -0.3, 0.0, 0.4, 2.2}) {
    const double fd_p = oracles::central_slope(CurveSpec::parabola(0.5), x, h);
    CHECK_THAT(fd_p, WithinAbs(slope_at(CurveSpec::parabola(0.5), x), 20 * h * h));
    const double fd_c = oracles::central_slope(CurveSpec::cubic(), x, h);
    CHECK_THAT(fd_c, WithinAbs(slope_at(CurveSpec::cubic(), x), 20 * h * h));
  }
}

TEST_CASE("third derivative of the bump profile matches differentiated curvature data") {
  // central difference of A'' exercises the full jet chain (quotients,
  // exponentials, products, sine) through the plateau transition region
  const CurveSpec bump = CurveSpec::bump_sine();
  const double h = 1e-5;
  for (double x : {0.15, 0.25, 0.5, 0.62, 0.85}) {
    const double fd = (second_derivative(bump, x + h) - second_derivative(bump, x - h)) / (2 * h);
    const double exact = third_derivative(bump, x);
    CHECK_THAT(fd, WithinAbs(exact, 1e-3 * (1.0 + std::abs(exact))));
  }
  CHECK(third_derivative(CurveSpec::cubic(), 0.7) == 6.0);
  CHECK(third_derivative(CurveSpec::parabola(2.0), 0.7) == 0.0);
  CHECK(third_derivative(CurveSpec::line(1.0, 0.0), 0.7) == 0.0);
}

TEST_CASE("custom curve with missing derivative evaluators falls back to stencils") {
  const CurveSpec bare = CurveSpec::custom("bare", [](double x) { return std::cosh(x); });
  for (double x : {-1.3, 0.2, 1.7}) {
    CHECK_THAT(slope_at(bare, x), WithinRel(std::sinh(x) + 1e-30, 1e-8));
    CHECK_THAT(second_derivative(bare, x), WithinRel(std::cosh(x), 1e-5));
    CHECK_THAT(third_derivative(bare, x), WithinAbs(std::sinh(x), 2e-4));
  }
}

TEST_CASE("factored height differences match the plain ones") {
  DeterministicRng rng(5);
  const CurveSpec curves[] = {CurveSpec::line(1.3, -0.4), CurveSpec::parabola(0.7),
                              CurveSpec::cubic()};
  for (const auto& spec : curves) {
    for (int i = 0; i < 200; ++i) {
      const double x = rng.uniform(-4.0, 4.0);
      const double y = rng.uniform(-4.0, 4.0);
      const double plain = height(spec, x) - height(spec, y);
      CHECK_THAT(height_diff(spec, x, y), WithinAbs(plain, 1e-12 * (1.0 + std::abs(plain))));
    }
  }
}

TEST_CASE("curve records round-trip") {
  const CurveSpec specs[] = {CurveSpec::line(0.5, 0.1), CurveSpec::parabola(0.25),
                             CurveSpec::cubic(), CurveSpec::bump_sine(),
                             CurveSpec::cosh_graph()};
  for (const auto& spec : specs) {
    const CurveSpec back = from_record(to_record(spec));
    CHECK(back.kind == spec.kind);
    for (double x : {-0.4, 0.3}) {
      if (spec.domain.contains(x)) CHECK(height(back, x) == height(spec, x));
    }
  }
  CHECK_THROWS_AS(from_record({{"kind", "sphere"}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve("parabola"), std::invalid_argument);
  CHECK(parse_curve("parabola:0.5").coefficient == 0.5);
  CHECK(parse_curve("line:2,1").slope == 2.0);
  CHECK(parse_curve("cosh").label == "cosh");
}
