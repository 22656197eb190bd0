#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclebound/bounds.hpp"
#include "cyclebound/counting.hpp"
#include "cyclebound/extremal.hpp"
#include "cyclebound/graph.hpp"
#include "cyclebound/spectral.hpp"
#include "cyclebound/verify.hpp"

namespace cyclebound {

inline constexpr const char* kReportSchema = "cyclebound-report/1";

struct AnalyzeOptions {
  std::vector<unsigned> lengths{3};
  bool exact = true;
  bool include_spectrum = false;
  double tol = 1e-9;
};

struct AnalysisReport {
  std::string source;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t degree_min = 0;
  std::size_t degree_max = 0;
  std::optional<Spectrum> spectrum;
  std::map<unsigned, ExactCount> traces;
  CycleCounts counts;
  std::vector<BoundReport> bounds;
  std::vector<Check> checks;
};

AnalysisReport analyze(const Graph& g, const std::string& source, const AnalyzeOptions& opts);

nlohmann::ordered_json to_json(const AnalysisReport& r);
nlohmann::ordered_json to_json(const Check& c);
nlohmann::ordered_json to_json(const VerifyReport& r);

/// One row per (graph, k) after a header line.
std::string to_csv(const std::vector<AnalysisReport>& reports);

struct ExtremalReport {
  std::size_t n = 0;
  unsigned q = 0;
  ConstrainedOptimum closed_form;
  double closed_form_residual = 0.0;
  std::vector<TwoLevelCandidate> candidates;
  std::optional<ConstrainedOptimum> numeric;
  std::size_t restarts = 0;
  std::uint64_t seed = 0;
};

ExtremalReport extremal(std::size_t n, unsigned q, std::size_t restarts, std::uint64_t seed);
nlohmann::ordered_json to_json(const ExtremalReport& r);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

}  // namespace cyclebound
