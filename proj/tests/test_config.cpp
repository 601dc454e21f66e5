#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "curvesym/config.hpp"
#include "curvesym/report.hpp"
#include "curvesym/sampler.hpp"

using namespace curvesym;

TEST_CASE("key-value parsing") {
  std::istringstream is(
      "# run configuration\n"
      "suite = melnikov\n"
      "n= 100000   # inline comment\n"
      "  seed =7\n"
      "\n"
      "curve = parabola:0.5\n");
  const KeyValues kv = parse_key_values(is);
  CHECK(kv.at("suite") == "melnikov");
  CHECK(kv.at("n") == "100000");
  CHECK(kv.at("seed") == "7");
  CHECK(kv.at("curve") == "parabola:0.5");
  CHECK(kv.size() == 4);
}

TEST_CASE("malformed lines are rejected with the line number") {
  std::istringstream is("suite = ok\nnonsense line\n");
  try {
    parse_key_values(is);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("overrides win over file values") {
  const KeyValues file = {{"n", "1000"}, {"seed", "1"}};
  const KeyValues cli = {{"seed", "9"}};
  const KeyValues merged = merge_config(file, cli);
  CHECK(merged.at("n") == "1000");
  CHECK(merged.at("seed") == "9");
}

TEST_CASE("config echo is a single JSON object") {
  const std::string echo = config_echo_json({{"suite", "melnikov"}, {"n", "10"}});
  CHECK(echo == "{\"config\":{\"n\":\"10\",\"suite\":\"melnikov\"}}");
}

TEST_CASE("seventeen significant digits round-trip doubles exactly") {
  DeterministicRng rng(123);
  for (int i = 0; i < 5000; ++i) {
    const double x = std::ldexp(rng.uniform(-1.0, 1.0), static_cast<int>(rng.uniform(-300, 300)));
    const double back = std::strtod(format_g17(x).c_str(), nullptr);
    REQUIRE(back == x);
  }
  CHECK(format_g17(0.025) == "0.025000000000000001");
}

TEST_CASE("json escaping") {
  CHECK(json_escape("a\"b\\c\nd") == "a\\\"b\\\\c\\nd");
  JsonLine line;
  line.field("note", "x \"quoted\"").field("value", 0.5);
  CHECK(line.str() == "{\"note\":\"x \\\"quoted\\\"\",\"value\":0.5}");
}
