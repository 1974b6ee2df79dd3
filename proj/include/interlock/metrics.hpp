#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "interlock/core.hpp"

// Centrality measures on the binary (unvalued) view of a one-mode network.
// Line values are ignored everywhere in this header.

namespace interlock {

enum class DensityVariant { kLoopsAllowed, kNoLoops };
enum class ClosenessVariant { kReachable, kComponentNormalized };

struct DegreeStats {
  double mean = 0.0;
  double median = 0.0;
  double sd_population = 0.0;
};

struct DegreeRow {
  std::size_t degree;
  std::size_t frequency;
  double relative;
  double cumulative;
};

struct DegreeDistribution {
  std::vector<DegreeRow> rows;
};

/// Competition ranks ("1224") of one vertex across the four measures.
struct Ranks {
  std::size_t degree = 0;
  std::size_t closeness = 0;
  std::size_t betweenness = 0;
};

struct VertexMetrics {
  std::size_t vertex = 0;
  std::size_t degree = 0;
  double normalized_degree = 0.0;
  std::optional<double> closeness;
  std::optional<double> betweenness;
  Ranks ranks;
};

struct NetworkAggregates {
  std::size_t n = 0;
  std::size_t m = 0;
  double density_no_loops = 0.0;
  double density_loops_allowed = 0.0;
  double mean_degree = 0.0;
  double median_degree = 0.0;
  double sd_degree_population = 0.0;
  std::optional<double> degree_centralization;
  std::optional<double> betweenness_centralization;
  std::optional<double> closeness_centralization;
  std::optional<std::size_t> component_count;
  std::size_t isolate_count = 0;
  /// Size of the connected subnetwork used for closeness centralization.
  std::optional<std::size_t> largest_component_size;
};

struct MetricsReport {
  NetworkAggregates aggregates;
  std::vector<VertexMetrics> vertices;
};

DegreeDistribution degree_distribution(std::span<const std::size_t> degrees);
DegreeDistribution degree_distribution(const OneModeNetwork& net);

/// Mean, median and population (divisor n) standard deviation.
/// Throws std::domain_error on an empty input.
DegreeStats degree_stats(std::span<const std::size_t> degrees);

/// Throws std::domain_error when n == 0.
double density(std::size_t n, std::size_t m, DensityVariant variant);
double density(const OneModeNetwork& net, DensityVariant variant);

/// BFS hop distances from `source`; std::nullopt marks unreachable vertices.
std::vector<std::optional<std::size_t>> geodesic_distances(const OneModeNetwork& net,
                                                           std::size_t source);
std::vector<std::optional<std::size_t>> geodesic_distances(const OneModeNetwork& net,
                                                           std::string_view source);

/// kReachable: r / sum of distances over the r reachable vertices.
/// kComponentNormalized: (r / (n - 1)) * (r / sum).
/// Both are 0 for an isolate.
double closeness_centrality(const OneModeNetwork& net, std::size_t vertex,
                            ClosenessVariant variant = ClosenessVariant::kReachable);
double closeness_centrality(const OneModeNetwork& net, std::string_view vertex,
                            ClosenessVariant variant = ClosenessVariant::kReachable);
std::vector<double> closeness_all(const OneModeNetwork& net,
                                  ClosenessVariant variant = ClosenessVariant::kReachable);

/// Raw pair-dependency sums over unordered pairs (s, t), s != v != t.
std::vector<double> betweenness_raw(const OneModeNetwork& net);

/// Raw scores scaled by 2 / ((n - 1)(n - 2)); all zero when n < 3.
std::vector<double> betweenness_centrality(const OneModeNetwork& net);

/// sum(d_max - d_i) / ((n - 1)(n - 2)). Throws std::domain_error when n < 3.
double degree_centralization(std::span<const std::size_t> degrees);

/// sum(B_max - B_i) / (n - 1) over normalized scores.
/// Throws std::domain_error when n < 3.
double betweenness_centralization(std::span<const double> normalized);

/// Freeman closeness centralization of the largest connected subnetwork
/// (first in vertex order on ties), using (n' - 1) / sum of distances.
/// Returns 0 when that subnetwork has fewer than 3 vertices.
double closeness_centralization(const OneModeNetwork& net);

/// Descending competition ranking: rank = 1 + number of strictly greater values.
std::vector<std::size_t> rank_competition(std::span<const double> values);
std::vector<std::size_t> rank_competition(std::span<const std::size_t> values);

struct MetricsOptions {
  ClosenessVariant closeness = ClosenessVariant::kReachable;
};

MetricsReport compute_metrics(const OneModeNetwork& net, const MetricsOptions& opts = {});

/// Degree-only view for when just a degree sequence is known; path-based
/// measures are left empty.
MetricsReport compute_degree_metrics(std::span<const std::size_t> degrees);

}  // namespace interlock
