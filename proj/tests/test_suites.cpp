#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "curvesym/suites.hpp"

using namespace curvesym;

TEST_CASE("every registered suite passes at reduced sample counts") {
  SuiteOptions opt;
  opt.n = 1500;
  for (const auto& id : suite_ids()) {
    const SuiteReport r = run_suite(id, opt);
    INFO("suite " << id);
    for (const auto& a : r.assertions) {
      INFO("assertion " << a.id << " worst " << a.worst << " tol " << a.tolerance);
      CHECK(a.pass);
    }
    CHECK(r.pass);
    CHECK(r.samples > 0);
  }
}

TEST_CASE("the registry is closed and spells the expected ids") {
  const std::vector<std::string> expected = {
      "melnikov",      "phase_universality", "menger",      "graph_forms",
      "global_bounds", "positivity",         "local_limit", "example_41",
      "example_42",    "example_43",         "lemma16",     "trichotomy",
      "kerzman_stein"};
  CHECK(suite_ids() == expected);
  for (const auto& id : expected) CHECK_NOTHROW(run_suite(id, SuiteOptions(200)));
  CHECK_THROWS_AS(run_suite("not_a_suite"), std::invalid_argument);
}

TEST_CASE("local limit refuses centers with vanishing concavity") {
  CHECK_THROWS_AS(local_limit_suite(CurveSpec::line(0.3, 0.0), 0.0, SuiteOptions(100)),
                  std::invalid_argument);
  CHECK_THROWS_AS(local_limit_suite(CurveSpec::cubic(), 0.0, SuiteOptions(100)),
                  std::invalid_argument);
  CHECK_NOTHROW(local_limit_suite(CurveSpec::cubic(), 1.0, SuiteOptions(100)));
}

TEST_CASE("worst-case witnesses re-evaluate to the recorded value") {
  SECTION("melnikov") {
    const SuiteReport r = melnikov_suite(SuiteOptions(4000));
    for (const auto& a : r.assertions) {
      const Triple t({a.witness_z[0], a.witness_z[1]},
                     {a.witness_z[2], a.witness_z[3]},
                     {a.witness_z[4], a.witness_z[5]});
      const auto s = symmetrize(KernelHandle::universal(), t);
      double again = 0.0;
      if (a.id == "full_vs_csq") again = std::abs(s.full - Complex(s.c_sq)) / s.c_sq;
      if (a.id == "re_vs_half_csq") again = std::abs(s.re_part - 0.5 * s.c_sq) / s.c_sq;
      if (a.id == "im_vs_half_csq") again = std::abs(s.im_part - 0.5 * s.c_sq) / s.c_sq;
      CHECK(std::abs(again - a.worst) <= 1e-12 * std::max(1.0, a.worst));
    }
  }
  SECTION("global bounds") {
    const SuiteReport r = global_bounds_suite(SuiteOptions(4000));
    const CurveSpec spec = CurveSpec::parabola(1.0);
    for (const auto& a : r.assertions) {
      REQUIRE(a.witness_xs.has_value());
      const auto& xs = *a.witness_xs;
      const Triple t = Triple::on_curve(spec, xs[0], xs[1], xs[2]);
      const auto s = symmetrize(KernelHandle::restricted(spec), t);
      double again = 0.0;
      if (a.id == "re_bound") again = std::abs(s.re_part);
      if (a.id == "csq_bound") again = s.c_sq;
      if (a.id == "im_bound") again = std::abs(s.im_part);
      CHECK(std::abs(again - a.worst) <= 1e-12 * std::max(1.0, a.worst));
    }
  }
}

TEST_CASE("suite reports are reproducible byte for byte") {
  const std::string a = numeric_fingerprint(melnikov_suite(SuiteOptions(3000, 15)));
  const std::string b = numeric_fingerprint(melnikov_suite(SuiteOptions(3000, 15)));
  CHECK(a == b);
  const std::string c = numeric_fingerprint(melnikov_suite(SuiteOptions(3000, 16)));
  CHECK(a != c);
}

TEST_CASE("JSON-lines serialization shape") {
  const SuiteReport r = menger_suite(SuiteOptions(300));
  std::ostringstream os;
  write_suite_jsonl(os, r);
  const std::string text = os.str();
  CHECK(text.find("{\"suite\":\"menger\",\"pass\":") == 0);
  // one line per assertion plus the header
  const auto lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == static_cast<long>(r.assertions.size()) + 1);
  CHECK(text.find("\"assertion\":\"spot_unit_right_triangle\"") != std::string::npos);
}

TEST_CASE("csv sink receives sampled rows") {
  std::size_t rows = 0;
  SuiteOptions opt;
  opt.n = 500;
  opt.sample_sink = [&rows](const SampleRow&) { ++rows; };
  melnikov_suite(opt);
  CHECK(rows == 500);

  std::ostringstream os;
  SampleRow row;
  row.z = {0, 0, 1, 0, 0, 1};
  row.c_sq = 2.0;
  row.s_full_re = 2.0;
  row.s_re = 1.0;
  row.s_im = 1.0;
  write_sample_csv_row(os, row);
  CHECK(os.str().find(",well-conditioned") != std::string::npos);
}
