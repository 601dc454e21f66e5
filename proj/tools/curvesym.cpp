//
// curvesym: command-line front end. Verification suites, reproduction of
// the worked extremal families, and counterexample search, with seeded
// reproducible reports in JSON-lines and CSV.
//
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "curvesym/curvesym.hpp"

namespace cs = curvesym;
namespace fs = std::filesystem;

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  cs::KeyValues file_config;
  cs::KeyValues resolved;

  void load() {
    if (!config_path.empty()) file_config = cs::load_config_file(config_path);
    if (out_dir.empty()) {
      if (const char* env = std::getenv("CURVESYM_OUT")) out_dir = env;
      if (out_dir.empty()) {
        const auto it = file_config.find("out");
        if (it != file_config.end()) out_dir = it->second;
      }
    }
    if (!out_dir.empty()) resolved["out"] = out_dir;
  }

  // command-line flags override file values; both end up in the echo
  std::string option(const std::string& key, const std::string& cli_value,
                     const std::string& fallback) {
    std::string v = cli_value;
    if (v.empty()) {
      const auto it = file_config.find(key);
      v = it != file_config.end() ? it->second : fallback;
    }
    if (!v.empty()) resolved[key] = v;
    return v;
  }

  fs::path resolve_output(const std::string& name) const {
    fs::path p(name);
    if (!out_dir.empty() && p.is_relative()) return fs::path(out_dir) / p;
    return p;
  }
};

cs::PhaseFunction parse_phase(const std::string& text,
                              const std::optional<cs::CurveSpec>& curve) {
  if (text.rfind("const:", 0) == 0) {
    return cs::PhaseFunction::constant(std::stod(text.substr(6)));
  }
  if (text == "graph") {
    if (!curve) throw CLI::ValidationError("--phase graph needs --curve");
    return cs::graph_phase(*curve);
  }
  if (text == "sin") {
    return cs::PhaseFunction::custom([](cs::Complex w) {
      return 0.7 * std::sin(2.0 * w.real()) + 0.3 * std::cos(w.imag());
    });
  }
  throw CLI::ValidationError("unknown phase '" + text + "' (const:<v> | graph | sin)");
}

void print_symmetrization(const cs::SymmetrizationResult& s) {
  std::cout << "c_sq      = " << cs::format_g17(s.c_sq) << "\n"
            << "S[K]      = " << cs::format_g17(s.full.real()) << " + "
            << cs::format_g17(s.full.imag()) << "i\n"
            << "S[Re K]   = " << cs::format_g17(s.re_part) << "\n"
            << "S[Im K]   = " << cs::format_g17(s.im_part) << "\n";
  if (s.c_sq > 0.0) {
    std::cout << "re ratio  = " << cs::format_g17(s.re_part / s.c_sq) << "\n"
              << "im ratio  = " << cs::format_g17(s.im_part / s.c_sq) << "\n";
  }
  std::cout << "condition = " << cs::conditioning_name(s.condition) << "\n";
}

int run_verify(CommonArgs& common, const std::string& suite_arg,
               const std::string& n_arg, const std::string& seed_arg,
               const std::string& report_arg, const std::string& csv_arg) {
  const std::string suite = common.option("suite", suite_arg, "all");
  const std::string n_str = common.option("n", n_arg, "");
  const std::string seed_str = common.option("seed", seed_arg, "");
  const std::string report_path = common.option("report", report_arg, "");
  const std::string csv_path = common.option("csv", csv_arg, "");
  common.resolved["command"] = "verify";

  cs::SuiteOptions opt;
  if (!n_str.empty()) opt.n = std::stoull(n_str);
  if (!seed_str.empty()) opt.seed = std::stoull(seed_str);

  std::ofstream csv_file;
  if (!csv_path.empty()) {
    csv_file.open(common.resolve_output(csv_path));
    if (!csv_file) throw CLI::ValidationError("cannot open CSV path " + csv_path);
    csv_file << cs::kSampleCsvHeader << '\n';
    opt.sample_sink = [&csv_file](const cs::SampleRow& row) {
      cs::write_sample_csv_row(csv_file, row);
    };
  }

  std::vector<std::string> ids;
  if (suite == "all") {
    ids = cs::suite_ids();
  } else {
    ids.push_back(suite);
  }

  std::ostream* os = &std::cout;
  std::ofstream report_file;
  if (!report_path.empty()) {
    report_file.open(common.resolve_output(report_path));
    if (!report_file) throw CLI::ValidationError("cannot open report path " + report_path);
    os = &report_file;
  }

  *os << cs::config_echo_json(common.resolved) << '\n';
  bool all_pass = true;
  for (const auto& id : ids) {
    const cs::SuiteReport rep = cs::run_suite(id, opt);
    cs::write_suite_jsonl(*os, rep);
    all_pass = all_pass && rep.pass;
    std::cerr << (rep.pass ? "[pass] " : "[FAIL] ") << rep.suite << " ("
              << rep.assertions.size() << " assertions, "
              << cs::format_g17(rep.runtime_sec) << " s)\n";
    if (!rep.pass) {
      for (const auto& a : rep.assertions) {
        if (!a.pass) std::cerr << "       failing assertion: " << a.id << "\n";
      }
    }
  }
  return all_pass ? 0 : 1;
}

int run_reproduce(CommonArgs& common, const std::string& example_arg,
                  const std::string& lambda_arg, const std::string& a_arg) {
  const std::string example = common.option("example", example_arg, "");
  common.resolved["command"] = "reproduce";
  if (example == "4.2") {
    const double lambda = std::stod(common.option("lambda", lambda_arg, "2"));
    const cs::CurveSpec spec = cs::CurveSpec::parabola(0.5);
    const double l2 = lambda * lambda;
    const double closed = 32.0 / (l2 * (4.0 + l2)) *
                          ((2.0 + l2) / (8.0 * (1.0 + l2)) - 1.0 / (4.0 + l2));
    const double graph = cs::s_im_graph(spec, {-lambda, 0.0, lambda});
    const cs::Triple t = cs::Triple::on_curve(spec, -lambda, 0.0, lambda);
    const auto s = cs::symmetrize(cs::KernelHandle::restricted(spec), t);
    std::cout << "symmetric triple on the half parabola, lambda = "
              << cs::format_g17(lambda) << "\n"
              << "S[Im] closed form      = " << cs::format_g17(closed) << "\n"
              << "S[Im] graph evaluation = " << cs::format_g17(graph) << "\n"
              << "S[Im] permutation sum  = " << cs::format_g17(s.im_part) << "\n";
    return 0;
  }
  if (example == "4.3") {
    const double lambda = std::stod(common.option("lambda", lambda_arg, "100"));
    const double a = std::stod(common.option("a", a_arg, "1"));
    const cs::CurveSpec spec = cs::CurveSpec::cubic();
    const std::array<double, 3> xs = {-a, 0.0, lambda};
    const auto terms = cs::s_re_graph_terms(spec, xs);
    const cs::Triple t = cs::Triple::on_curve(spec, xs[0], xs[1], xs[2]);
    const auto s = cs::symmetrize(cs::KernelHandle::restricted(spec), t);
    std::cout << "cubic triple at abscissas (-a, 0, lambda), a = "
              << cs::format_g17(a) << ", lambda = " << cs::format_g17(lambda) << "\n"
              << "vertex terms I, II, III = " << cs::format_g17(terms[0]) << ", "
              << cs::format_g17(terms[1]) << ", " << cs::format_g17(terms[2]) << "\n"
              << "I + II + III            = "
              << cs::format_g17(terms[0] + terms[1] + terms[2]) << "\n"
              << "S[Re] permutation sum   = " << cs::format_g17(s.re_part) << "\n";
    return 0;
  }
  if (example == "4.1") {
    const cs::CurveSpec spec = cs::CurveSpec::bump_sine();
    const auto kg = cs::KernelHandle::restricted(spec);
    std::cout << "flattening family on the bump curve: ratio |S[Re]| / c^2\n";
    for (int k = 2; k <= 5; ++k) {
      const double lambda = 0.5 - std::pow(10.0, -k);
      const cs::Triple t = cs::Triple::on_curve(spec, 0.0, lambda, 1.0);
      const auto s = cs::symmetrize(kg, t);
      std::cout << "lambda = 1/2 - 1e-" << k << ":  ratio = "
                << cs::format_g17(std::abs(s.re_part) / s.c_sq) << "\n";
    }
    return 0;
  }
  throw CLI::ValidationError("unknown example '" + example + "' (4.1 | 4.2 | 4.3)");
}

int run_extremal(CommonArgs& common, const std::string& curve_arg,
                 const std::string& objective_arg, const std::string& budget_arg,
                 const std::string& seed_arg, const std::string& region_arg,
                 const std::string& report_arg) {
  const std::string curve_str = common.option("curve", curve_arg, "parabola:0.5");
  const std::string obj_str = common.option("objective", objective_arg, "min-re-ratio");
  const std::string budget_str = common.option("budget", budget_arg, "1000000");
  const std::string seed_str = common.option("seed", seed_arg, "1");
  const std::string region_str = common.option("region", region_arg, "-50,50");
  const std::string report_path = common.option("report", report_arg, "");
  common.resolved["command"] = "extremal";

  const cs::CurveSpec spec = cs::parse_curve(curve_str);
  const auto comma = region_str.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--region expects lo,hi");
  cs::SearchRegion region{std::stod(region_str.substr(0, comma)),
                          std::stod(region_str.substr(comma + 1))};

  const auto rep = cs::extremal_ratio(spec, cs::parse_objective(obj_str), region,
                                      std::stoull(budget_str), std::stoull(seed_str));

  std::cout << "objective   = " << rep.objective << "\n"
            << "best value  = " << cs::format_g17(rep.best) << "\n"
            << "witness xs  = " << cs::format_g17(rep.xs[0]) << ", "
            << cs::format_g17(rep.xs[1]) << ", " << cs::format_g17(rep.xs[2]) << "\n"
            << "evaluations = " << rep.evaluations << " of " << rep.budget << "\n";

  if (!report_path.empty()) {
    std::ofstream f(common.resolve_output(report_path));
    if (!f) throw CLI::ValidationError("cannot open report path " + report_path);
    f << cs::config_echo_json(common.resolved) << '\n' << cs::to_json_line(rep) << '\n';
  }
  return 0;
}

int run_eval(CommonArgs& common, const std::string& curve_arg,
             const std::string& kernel_arg, std::vector<double> xs,
             std::vector<double> points, std::vector<double> pair,
             const std::string& phase_arg) {
  const std::string kernel = common.option("kernel", kernel_arg, "");
  common.resolved["command"] = "eval";
  std::optional<cs::CurveSpec> curve;
  const std::string curve_str = common.option("curve", curve_arg, "");
  if (!curve_str.empty()) curve = cs::parse_curve(curve_str);

  if (!pair.empty()) {
    if (!curve) throw CLI::ValidationError("--pair needs --curve");
    const std::string k = kernel.empty() ? "ks" : kernel;
    cs::Complex v;
    if (k == "ks") {
      v = cs::eval_kerzman_stein(*curve, pair[0], pair[1]);
    } else if (k == "kgamma") {
      v = cs::eval_k_gamma(*curve, pair[0], pair[1]);
    } else {
      throw CLI::ValidationError("--pair supports kernels kgamma | ks");
    }
    std::cout << k << "(" << cs::format_g17(pair[0]) << ", " << cs::format_g17(pair[1])
              << ") = " << cs::format_g17(v.real()) << " + " << cs::format_g17(v.imag())
              << "i\n";
    return 0;
  }

  cs::KernelHandle handle = cs::KernelHandle::universal();
  std::optional<cs::Triple> triple;
  if (!xs.empty()) {
    if (!curve) throw CLI::ValidationError("--xs needs --curve");
    triple = cs::Triple::on_curve(*curve, xs[0], xs[1], xs[2]);
    const std::string k = kernel.empty() ? "kgamma" : kernel;
    if (k == "kgamma") {
      handle = cs::KernelHandle::restricted(*curve);
    } else if (k == "ks") {
      handle = cs::KernelHandle::kerzman_stein(*curve);
    } else if (k == "kh") {
      handle = cs::KernelHandle::phase(parse_phase(
          common.option("phase", phase_arg, "graph"), curve));
    } else {
      throw CLI::ValidationError("with --xs use kernels kgamma | ks | kh");
    }
  } else if (!points.empty()) {
    triple = cs::Triple(cs::Complex(points[0], points[1]),
                        cs::Complex(points[2], points[3]),
                        cs::Complex(points[4], points[5]));
    const std::string k = kernel.empty() ? "k0" : kernel;
    if (k == "k0") {
      handle = cs::KernelHandle::universal();
    } else if (k == "kh") {
      handle = cs::KernelHandle::phase(parse_phase(
          common.option("phase", phase_arg, "const:0"), curve));
    } else if (k == "khstar") {
      handle = cs::KernelHandle::dual_phase(parse_phase(
          common.option("phase", phase_arg, "const:0"), curve));
    } else {
      throw CLI::ValidationError("with --points use kernels k0 | kh | khstar");
    }
  } else {
    throw CLI::ValidationError("eval needs --xs (with --curve), --points, or --pair");
  }

  print_symmetrization(cs::symmetrize(handle, *triple));
  return 0;
}

int run_curves(const std::string& curve_arg, std::vector<double> at) {
  if (curve_arg.empty()) {
    std::cout << "built-in curve shorthands:\n"
              << "  line[:m[,b]]    straight line, slope m, intercept b\n"
              << "  parabola:<a>    a x^2\n"
              << "  cubic           x^3\n"
              << "  bumpsine        compactly supported sine profile on (-1, 2)\n"
              << "  cosh            hyperbolic cosine graph\n";
    return 0;
  }
  const cs::CurveSpec spec = cs::parse_curve(curve_arg);
  for (const auto& [k, v] : cs::to_record(spec)) std::cout << k << " = " << v << "\n";
  for (double x : at) {
    const auto d = cs::curve_data(spec, x);
    std::cout << "x = " << cs::format_g17(x) << ": A = " << cs::format_g17(d.height)
              << ", A' = " << cs::format_g17(d.slope)
              << ", speed = " << cs::format_g17(d.speed)
              << ", curvature = " << cs::format_g17(d.curvature)
              << ", phase = " << cs::format_g17(d.phase) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-point kernel symmetrization laboratory"};
  app.require_subcommand(1);

  CommonArgs common;
  app.add_option("--config", common.config_path, "key = value configuration file");
  app.add_option("--out", common.out_dir, "output directory (or CURVESYM_OUT)");

  std::string suite, n_str, seed_str, report, csv;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "suite id or 'all'");
  verify->add_option("--n", n_str, "sample count override");
  verify->add_option("--seed", seed_str, "seed override");
  verify->add_option("--report", report, "JSON-lines report path");
  verify->add_option("--csv", csv, "bulk-sample CSV path");

  std::string example, lambda_str, a_str;
  auto* reproduce = app.add_subcommand("reproduce", "reproduce a worked extremal family");
  reproduce->add_option("--example", example, "family id: 4.1 | 4.2 | 4.3");
  reproduce->add_option("--lambda", lambda_str, "family parameter");
  reproduce->add_option("--a", a_str, "second family parameter (4.3)");

  std::string curve, objective, budget, region;
  auto* extremal = app.add_subcommand("extremal", "extremal-configuration search");
  extremal->add_option("--curve", curve, "curve shorthand");
  extremal->add_option("--objective", objective, "min-re-ratio | max-im-ratio | min-re");
  extremal->add_option("--budget", budget, "objective evaluation budget");
  extremal->add_option("--seed", seed_str, "search seed");
  extremal->add_option("--region", region, "abscissa box lo,hi");
  extremal->add_option("--report", report, "JSON-lines report path");

  std::string eval_kernel, phase;
  std::vector<double> xs, points, pair;
  auto* eval = app.add_subcommand("eval", "evaluate a symmetrization at one triple");
  eval->add_option("--curve", curve, "curve shorthand");
  eval->add_option("--kernel", eval_kernel, "k0 | kgamma | kh | khstar | ks");
  eval->add_option("--xs", xs, "three curve abscissas")->expected(3);
  eval->add_option("--points", points, "three points, re/im interleaved")->expected(6);
  eval->add_option("--pair", pair, "two abscissas for pair kernels")->expected(2);
  eval->add_option("--phase", phase, "phase for kh/khstar: const:<v> | graph | sin");

  std::vector<double> at;
  auto* curves = app.add_subcommand("curves", "list curve kinds or probe one");
  curves->add_option("--curve", curve, "curve shorthand to probe");
  curves->add_option("--x", at, "abscissas to print curve data at");

  CLI11_PARSE(app, argc, argv);

  try {
    common.load();
    if (verify->parsed()) return run_verify(common, suite, n_str, seed_str, report, csv);
    if (reproduce->parsed()) return run_reproduce(common, example, lambda_str, a_str);
    if (extremal->parsed())
      return run_extremal(common, curve, objective, budget, seed_str, region, report);
    if (eval->parsed())
      return run_eval(common, curve, eval_kernel, xs, points, pair, phase);
    if (curves->parsed()) return run_curves(curve, at);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
