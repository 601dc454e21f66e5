//
// search.hpp: extremal-configuration search over abscissa triples. A seeded
// stratified grid scan locates promising cells; pattern descent with a
// shrinking step refines the best of them. No gradients are used, since the
// objectives have poles along the coincidence diagonals.
//
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "curvesym/curve.hpp"
#include "curvesym/geometry.hpp"
#include "curvesym/report.hpp"
#include "curvesym/sampler.hpp"
#include "curvesym/symmetry.hpp"

namespace curvesym {

enum class SearchObjective { MinReRatio, MaxImRatio, MinRe };

inline const char* objective_name(SearchObjective o) {
  switch (o) {
    case SearchObjective::MinReRatio: return "min-re-ratio";
    case SearchObjective::MaxImRatio: return "max-im-ratio";
    case SearchObjective::MinRe: return "min-re";
  }
  return "?";
}

inline SearchObjective parse_objective(const std::string& s) {
  if (s == "min-re-ratio") return SearchObjective::MinReRatio;
  if (s == "max-im-ratio") return SearchObjective::MaxImRatio;
  if (s == "min-re") return SearchObjective::MinRe;
  throw std::invalid_argument("unknown objective '" + s + "'");
}

struct SearchRegion {
  double lo = -50.0;
  double hi = 50.0;
};

struct RatioSearchReport {
  std::string objective;
  double best = 0.0;             // in the objective's natural sense
  std::array<double, 3> xs{};    // witness abscissas
  std::size_t evaluations = 0;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::vector<double> restart_trace;  // best value after each refinement restart
};

namespace detail {

struct ObjectiveFn {
  const CurveSpec* spec;
  SearchObjective kind;
  double sep_floor;

  // Returns the value to minimize; +inf marks invalid configurations.
  double operator()(const std::array<double, 3>& xs) const {
    if (std::abs(xs[0] - xs[1]) < sep_floor || std::abs(xs[1] - xs[2]) < sep_floor ||
        std::abs(xs[0] - xs[2]) < sep_floor) {
      return std::numeric_limits<double>::infinity();
    }
    switch (kind) {
      case SearchObjective::MinRe: return s_re_graph(*spec, xs);
      case SearchObjective::MinReRatio: {
        const double c2 = menger_graph_sq(*spec, xs[0], xs[1], xs[2]);
        if (!(c2 > 1e-30)) return std::numeric_limits<double>::infinity();
        return s_re_graph(*spec, xs) / c2;
      }
      case SearchObjective::MaxImRatio: {
        const double c2 = menger_graph_sq(*spec, xs[0], xs[1], xs[2]);
        if (!(c2 > 1e-30)) return std::numeric_limits<double>::infinity();
        return -s_im_graph(*spec, xs) / c2;
      }
    }
    return std::numeric_limits<double>::infinity();
  }

  double natural(double minimized) const {
    return kind == SearchObjective::MaxImRatio ? -minimized : minimized;
  }
};

}  // namespace detail

inline RatioSearchReport extremal_ratio(const CurveSpec& spec,
                                        SearchObjective objective,
                                        SearchRegion region, std::size_t budget,
                                        std::uint64_t seed = 1) {
  if (budget == 0) throw std::invalid_argument("search budget must be positive");
  if (!(region.lo < region.hi)) throw std::invalid_argument("degenerate search region");

  const double width = region.hi - region.lo;
  const detail::ObjectiveFn f{&spec, objective, 1e-9 * width};

  RatioSearchReport rep;
  rep.objective = objective_name(objective);
  rep.budget = budget;
  rep.seed = seed;

  struct Candidate {
    double value = std::numeric_limits<double>::infinity();
    std::array<double, 3> xs{};
  };

  // stratified scan: one seeded point per grid cell
  const std::size_t grid_budget = std::max<std::size_t>(1, budget / 2);
  const std::size_t n = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::cbrt(static_cast<double>(grid_budget))));
  DeterministicRng rng(seed);
  std::vector<Candidate> top;
  auto offer_top = [&top](const Candidate& c) {
    top.push_back(c);
    std::sort(top.begin(), top.end(),
              [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
    if (top.size() > 8) top.resize(8);
  };

  const double cell = width / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::array<double, 3> xs = {
            region.lo + (static_cast<double>(i) + rng.uniform01()) * cell,
            region.lo + (static_cast<double>(j) + rng.uniform01()) * cell,
            region.lo + (static_cast<double>(k) + rng.uniform01()) * cell};
        const double v = f(xs);
        ++rep.evaluations;
        if (std::isfinite(v)) offer_top({v, xs});
      }
    }
  }

  if (top.empty()) {
    // pathological region; fall back to the center
    top.push_back({f({region.lo + 0.3 * width, region.lo + 0.5 * width,
                      region.lo + 0.7 * width}),
                   {region.lo + 0.3 * width, region.lo + 0.5 * width,
                    region.lo + 0.7 * width}});
    ++rep.evaluations;
  }

  // pattern descent from the best grid cells
  const std::size_t restarts = std::min<std::size_t>(3, top.size());
  Candidate best = top.front();
  for (std::size_t r = 0; r < restarts; ++r) {
    Candidate cur = top[r];
    double step = cell;
    const std::size_t share = (budget - std::min(budget, rep.evaluations)) /
                              std::max<std::size_t>(1, restarts - r);
    std::size_t used = 0;
    while (step > 1e-12 * width && used < share) {
      Candidate trial = cur;
      for (int axis = 0; axis < 3 && used < share; ++axis) {
        for (double dir : {+1.0, -1.0}) {
          std::array<double, 3> xs = cur.xs;
          xs[axis] = std::clamp(xs[axis] + dir * step, region.lo, region.hi);
          const double v = f(xs);
          ++rep.evaluations;
          ++used;
          if (v < trial.value) trial = {v, xs};
          if (used >= share) break;
        }
      }
      if (trial.value < cur.value) {
        cur = trial;
      } else {
        step *= 0.5;
      }
    }
    if (cur.value < best.value) best = cur;
    rep.restart_trace.push_back(f.natural(cur.value));
  }

  rep.best = f.natural(best.value);
  rep.xs = best.xs;
  return rep;
}

inline std::string to_json_line(const RatioSearchReport& r) {
  JsonLine line;
  line.field("objective", r.objective)
      .field("best", r.best)
      .field("witness_xs", r.xs)
      .field("evaluations", r.evaluations)
      .field("budget", r.budget)
      .field("seed", static_cast<std::uint64_t>(r.seed));
  std::string trace = "[";
  for (std::size_t i = 0; i < r.restart_trace.size(); ++i) {
    if (i) trace += ',';
    trace += format_g17(r.restart_trace[i]);
  }
  trace += ']';
  line.raw("restart_trace", trace);
  return line.str();
}

}  // namespace curvesym
