#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "interlock/cohesion.hpp"
#include "interlock/core.hpp"
#include "interlock/ingest.hpp"
#include "interlock/metrics.hpp"

namespace interlock {

inline constexpr const char* kReportSchema = "1";

enum class TableKind { kDegreeDistribution, kCentrality, kLineMultiplicity };

struct ReportOptions {
  ClosenessVariant closeness = ClosenessVariant::kReachable;
  DensityVariant density = DensityVariant::kLoopsAllowed;
  std::vector<int> slices;
};

/// Everything the analyze command emits, in vertex order.
struct AnalysisReport {
  std::string source;  // "affiliations", "one-mode" or "degree-table"
  ReportOptions options;
  std::optional<AffiliationStats> affiliation;
  NetworkAggregates aggregates;
  std::vector<std::string> labels;
  std::vector<std::string> names;
  std::vector<VertexMetrics> vertices;
  std::vector<std::string> extra_columns;
  std::vector<std::vector<std::string>> extra;
  DegreeDistribution degree_distribution;
  std::optional<LineMultiplicityDistribution> line_multiplicity;
  std::vector<SliceDecomposition> slices;
  std::vector<std::string> notes;
};

AnalysisReport build_report(const OneModeNetwork& net, const ReportOptions& opts,
                            std::optional<AffiliationStats> affiliation = std::nullopt);

/// Report for a bare degree sequence: path-based measures, line values and
/// slices are unavailable and stay empty.
AnalysisReport build_degree_report(const DegreeTable& table, const ReportOptions& opts);

/// The stable JSON form. `stats_only` keeps the aggregate blocks only.
nlohmann::ordered_json to_json(const AnalysisReport& report, bool stats_only = false);

/// Fixed-width plain-text table; reals with 3 decimals.
std::string render_table(const AnalysisReport& report, TableKind which);

/// One block per requested m-slice listing its weak components.
std::string render_slices(const AnalysisReport& report);

}  // namespace interlock
