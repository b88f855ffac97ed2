#include "recten/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "recten/bounds.hpp"
#include "recten/error.hpp"
#include "recten/inclusion.hpp"
#include "recten/io.hpp"
#include "recten/oracle.hpp"
#include "recten/random.hpp"
#include "recten/report.hpp"

namespace recten {

namespace {

struct RunConfig {
  std::string tensor_path;
  std::string subset;
  std::string method = "psi";
  std::string format = "text";
  std::string objective = "min-phi";
  std::string values_path;
  std::string out_path;
  double tolerance = kDefaultTolerance;
  double oracle_tol = 1e-10;
  long max_iter = 10000;
  int restarts = 4;
  std::uint64_t seed = 42;
  unsigned threads = 1;
  int max_n = kDefaultEnumerationCap;
  // random helper
  Shape shape{2, 2, 3, 3};
  double density = 1.0;
  double max_value = 10.0;
  bool allow_negative = false;
};

unsigned default_threads() {
  if (const char* env = std::getenv("RECTEN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

OutputFormat format_of(const RunConfig& cfg) {
  const auto f = parse_format(cfg.format);
  if (!f) throw ValidationError(fmt::format("unknown output format \"{}\"", cfg.format));
  return *f;
}

IndexSubset subset_of(const RunConfig& cfg, const RectangularTensor& a) {
  if (cfg.subset.empty()) throw SubsetError("this command needs --s, e.g. --s 3 or --s 1,2");
  return parse_subset(cfg.subset, a.n());
}

void check_tolerances(const RunConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) throw DomainError("--tol must be positive");
  if (!(cfg.oracle_tol > 0.0)) throw DomainError("--oracle-tol must be positive");
}

std::string execute(const std::string& command, const RunConfig& cfg) {
  check_tolerances(cfg);
  if (command == "random") {
    RandomSpec spec{cfg.shape, cfg.density, cfg.max_value, cfg.allow_negative};
    return serialize_tensor(random_tensor(spec, cfg.seed));
  }

  const RectangularTensor a = load_tensor(cfg.tensor_path);
  if (command == "info") return render_info(a, format_of(cfg));
  if (command == "bounds") return render_bounds(bounds_report(a, subset_of(cfg, a)), format_of(cfg));
  if (command == "inclusion") {
    SetMethod method;
    if (cfg.method == "psi")
      method = SetMethod::psi;
    else if (cfg.method == "upsilon")
      method = SetMethod::upsilon;
    else
      throw ValidationError(fmt::format("unknown --method \"{}\" (psi or upsilon)", cfg.method));
    return render_inclusion(inclusion_set(a, subset_of(cfg, a), method), format_of(cfg));
  }
  if (command == "lambda-max") {
    OracleOptions opts{cfg.oracle_tol, cfg.max_iter, cfg.restarts, cfg.seed, cfg.threads};
    return render_pair(power_lambda_max(a, opts), format_of(cfg));
  }
  if (command == "verify") {
    if (cfg.values_path.empty()) throw ValidationError("verify needs --values <file>");
    const std::vector<double> values = parse_candidates(read_file(cfg.values_path));
    return render_verification(verify_inclusion(a, values, subset_of(cfg, a), cfg.tolerance), format_of(cfg));
  }
  if (command == "sweep-s") {
    const auto objective = parse_objective(cfg.objective);
    if (!objective) throw ValidationError(fmt::format("unknown --objective \"{}\"", cfg.objective));
    return render_sweep(sweep_subsets(a, *objective, {cfg.max_n, cfg.threads}), format_of(cfg));
  }
  if (command == "plot") {
    const IndexSubset s = subset_of(cfg, a);
    std::vector<double> values;
    if (!cfg.values_path.empty()) values = parse_candidates(read_file(cfg.values_path));
    return render_svg(upsilon_set(a, s), psi_set(a, s), values);
  }
  throw ValidationError(fmt::format("unknown command \"{}\"", command));
}

int report_error(std::ostream& err, ErrorCategory category, std::string_view kind, std::string_view message) {
  err << "error: category=" << to_string(category) << " kind=" << kind << "\n" << message << "\n";
  switch (category) {
    case ErrorCategory::validation:
      return kExitValidation;
    case ErrorCategory::numeric:
      return kExitNumeric;
    case ErrorCategory::capacity:
      return kExitCapacity;
  }
  return kExitValidation;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.threads = default_threads();

  CLI::App app{"S-type singular value inclusion sets and bounds for rectangular tensors", "recten"};
  app.require_subcommand(1);

  auto add_tensor = [&](CLI::App* sub) {
    sub->add_option("tensor", cfg.tensor_path, "Tensor JSON file")->required();
    sub->add_option("--format,-f", cfg.format, "text | json | csv");
  };
  auto add_subset = [&](CLI::App* sub) {
    sub->add_option("--s", cfg.subset, "Comma-separated 1-based subset S");
  };
  auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--oracle-tol", cfg.oracle_tol, "Power iteration tolerance")->capture_default_str();
    sub->add_option("--max-iter", cfg.max_iter, "Iteration cap per start")->capture_default_str();
    sub->add_option("--restarts", cfg.restarts, "Number of starts")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Seed for restart vectors")->capture_default_str();
  };
  app.add_option("--threads", cfg.threads, "Worker threads (default: RECTEN_THREADS or 1)");
  app.add_option("--tol", cfg.tolerance, "Additive tolerance for membership checks")->capture_default_str();
  app.add_option("--out,-o", cfg.out_path, "Write the report to this file instead of stdout");

  CLI::App* info = app.add_subcommand("info", "Dimensions, nonzero count, row/column sums");
  add_tensor(info);
  CLI::App* bounds = app.add_subcommand("bounds", "Yang-Qi, L/U and Theta/Phi bounds for one subset");
  add_tensor(bounds);
  add_subset(bounds);
  CLI::App* inclusion = app.add_subcommand("inclusion", "Per-pair disks of an inclusion set");
  add_tensor(inclusion);
  add_subset(inclusion);
  inclusion->add_option("--method", cfg.method, "psi | upsilon")->capture_default_str();
  CLI::App* lambda = app.add_subcommand("lambda-max", "Largest singular value by power iteration");
  add_tensor(lambda);
  add_oracle(lambda);
  CLI::App* verify = app.add_subcommand("verify", "Check candidate singular values against both sets");
  add_tensor(verify);
  add_subset(verify);
  verify->add_option("--values", cfg.values_path, "File with one candidate per line");
  CLI::App* sweep = app.add_subcommand("sweep-s", "Search all partitions for the best bounds");
  add_tensor(sweep);
  sweep->add_option("--objective", cfg.objective, "min-phi | max-theta | min-width")->capture_default_str();
  sweep->add_option("--max-n", cfg.max_n, "Enumeration cap on n")->capture_default_str();
  sweep->add_option("--s", cfg.subset, "Ignored");
  CLI::App* plot = app.add_subcommand("plot", "SVG of both inclusion sets");
  plot->add_option("tensor", cfg.tensor_path, "Tensor JSON file")->required();
  add_subset(plot);
  plot->add_option("--values", cfg.values_path, "Real singular values to mark");
  CLI::App* random = app.add_subcommand("random", "Emit a seeded random tensor file");
  random->add_option("--p", cfg.shape.p)->capture_default_str();
  random->add_option("--q", cfg.shape.q)->capture_default_str();
  random->add_option("--m", cfg.shape.m)->capture_default_str();
  random->add_option("--n", cfg.shape.n)->capture_default_str();
  random->add_option("--density", cfg.density)->capture_default_str();
  random->add_option("--max-value", cfg.max_value)->capture_default_str();
  random->add_flag("--signed", cfg.allow_negative, "Draw signs uniformly");
  random->add_option("--seed", cfg.seed)->capture_default_str();

  // Subcommand-level copies of the global options so they may follow the
  // subcommand name.
  for (CLI::App* sub : {info, bounds, inclusion, lambda, verify, sweep, plot, random}) {
    sub->add_option("--threads", cfg.threads);
    sub->add_option("--tol", cfg.tolerance);
    sub->add_option("--out,-o", cfg.out_path);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, ErrorCategory::validation, "usage", e.what());
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const std::string report = execute(command, cfg);
    if (cfg.out_path.empty()) {
      out << report;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw ValidationError(fmt::format("cannot write {}", cfg.out_path));
      file << report;
    }
  } catch (const Error& e) {
    return report_error(err, e.category(), e.kind(), e.what());
  }
  return kExitOk;
}

}  // namespace recten
