// cyclebound: cycle counts, spectral cycle bounds and the odd-power sphere
// maximization from the command line.
//
// Exit codes: 0 ok, 1 parse/validation, 2 resource guard, 3 convergence,
// 4 verify check failed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclebound/errors.hpp"
#include "cyclebound/report.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitResource = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitVerifyFailed = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cyclebound::ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle counting and spectral cycle bounds for simple graphs"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  cyclebound::AnalyzeOptions analyze_opts;
  std::string analyze_format = "json";
  auto* analyze = app.add_subcommand("analyze", "Count cycles and evaluate bounds for edge-list graphs");
  analyze->add_option("input", inputs, "Edge-list file(s); '-' reads standard input")->required();
  analyze->add_option("--k", analyze_opts.lengths, "Cycle lengths (>= 3)")->delimiter(',')->capture_default_str();
  analyze->add_flag("--exact,!--no-exact", analyze_opts.exact, "Compute exact counts by enumeration");
  analyze->add_flag("--spectrum", analyze_opts.include_spectrum, "Include the adjacency spectrum");
  analyze->add_option("--format", analyze_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  analyze->add_option("--tol", analyze_opts.tol, "Floating-point check tolerance")->capture_default_str();

  std::size_t n = 0;
  unsigned q = 0;
  std::size_t restarts = 0;
  std::uint64_t extremal_seed = 0;
  std::string extremal_format = "json";
  auto* extremal = app.add_subcommand("extremal", "Maximize sum x_i^q on the zero-sum unit sphere");
  extremal->add_option("--n", n, "Dimension (>= 2)")->required();
  extremal->add_option("--q", q, "Odd power (>= 3)")->required();
  extremal->add_option("--numeric-restarts", restarts, "Numeric cross-check restarts")->capture_default_str();
  extremal->add_option("--seed", extremal_seed, "Seed for numeric restarts")->capture_default_str();
  extremal->add_option("--format", extremal_format, "Output format")->check(CLI::IsMember({"json"}));

  cyclebound::VerifyOptions verify_opts;
  std::string verify_format = "json";
  auto* verify = app.add_subcommand("verify", "Run every verification sweep");
  verify->add_option("--max-v", verify_opts.max_vertices, "Largest sweep graph order (<= 7)")
      ->capture_default_str();
  verify->add_option("--seed", verify_opts.seed, "Seed for sampled corpora")->capture_default_str();
  verify->add_option("--format", verify_format, "Output format")->check(CLI::IsMember({"json"}));
  // Negative control: scales the Holder constant so the bound-chain suites fail.
  verify->add_option("--fault-holder-scale", verify_opts.holder_constant_scale)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitValidation;
  }

  try {
    if (*analyze) {
      std::vector<cyclebound::AnalysisReport> reports;
      for (const auto& path : inputs) {
        const auto g = cyclebound::parse_edge_list(read_input(path));
        reports.push_back(cyclebound::analyze(g, path, analyze_opts));
      }
      if (analyze_format == "csv") {
        std::cout << cyclebound::to_csv(reports);
      } else if (reports.size() == 1) {
        std::cout << cyclebound::to_json(reports.front()).dump(2) << '\n';
      } else {
        nlohmann::ordered_json j;
        j["schema"] = cyclebound::kReportSchema;
        j["command"] = "analyze";
        j["reports"] = nlohmann::ordered_json::array();
        for (const auto& r : reports) j["reports"].push_back(cyclebound::to_json(r));
        std::cout << j.dump(2) << '\n';
      }
      return 0;
    }
    if (*extremal) {
      const auto r = cyclebound::extremal(n, q, restarts, extremal_seed);
      std::cout << cyclebound::to_json(r).dump(2) << '\n';
      return 0;
    }
    if (*verify) {
      const auto r = cyclebound::run_verify(verify_opts);
      std::cout << cyclebound::to_json(r).dump(2) << '\n';
      if (!r.all_as_expected()) {
        for (const auto& c : r.checks) {
          if (!c.as_expected()) std::cerr << "check failed: " << c.name << " (" << c.detail << ")\n";
        }
        return kExitVerifyFailed;
      }
      return 0;
    }
  } catch (const cyclebound::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const cyclebound::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const cyclebound::UndefinedAverageError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const cyclebound::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const cyclebound::ConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << '\n';
    return kExitConvergence;
  }
  return 0;
}
