#include "interlock/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "interlock/cohesion.hpp"

namespace interlock {

DegreeDistribution degree_distribution(std::span<const std::size_t> degrees) {
  std::map<std::size_t, std::size_t> freq;
  for (std::size_t d : degrees) ++freq[d];
  DegreeDistribution out;
  const double n = static_cast<double>(degrees.size());
  std::size_t running = 0;
  for (const auto& [degree, count] : freq) {
    running += count;
    out.rows.push_back({degree, count, count / n, running / n});
  }
  return out;
}

DegreeDistribution degree_distribution(const OneModeNetwork& net) {
  return degree_distribution(degrees(net));
}

DegreeStats degree_stats(std::span<const std::size_t> degrees) {
  if (degrees.empty()) throw std::domain_error("degree_stats of an empty degree multiset");
  const double n = static_cast<double>(degrees.size());
  const std::size_t sum = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});

  DegreeStats s;
  s.mean = static_cast<double>(sum) / n;

  std::vector<std::size_t> sorted(degrees.begin(), degrees.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  s.median = sorted.size() % 2 == 1
                 ? static_cast<double>(sorted[mid])
                 : (static_cast<double>(sorted[mid - 1]) + static_cast<double>(sorted[mid])) / 2.0;

  double ss = 0.0;
  for (std::size_t d : degrees) {
    const double diff = static_cast<double>(d) - s.mean;
    ss += diff * diff;
  }
  s.sd_population = std::sqrt(ss / n);
  return s;
}

double density(std::size_t n, std::size_t m, DensityVariant variant) {
  if (n == 0) throw std::domain_error("density of a network without vertices");
  const double lines = 2.0 * static_cast<double>(m);
  const double dn = static_cast<double>(n);
  if (variant == DensityVariant::kLoopsAllowed) return lines / (dn * dn);
  if (n == 1) return 0.0;
  return lines / (dn * (dn - 1.0));
}

double density(const OneModeNetwork& net, DensityVariant variant) {
  return density(net.vertex_count(), net.edge_count(), variant);
}

std::vector<std::optional<std::size_t>> geodesic_distances(const OneModeNetwork& net,
                                                           std::size_t source) {
  if (source >= net.vertex_count()) throw std::domain_error("source vertex out of range");
  std::vector<std::optional<std::size_t>> dist(net.vertex_count());
  std::queue<std::size_t> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (const Neighbor& nb : net.neighbors(v)) {
      if (!dist[nb.vertex]) {
        dist[nb.vertex] = *dist[v] + 1;
        queue.push(nb.vertex);
      }
    }
  }
  return dist;
}

std::vector<std::optional<std::size_t>> geodesic_distances(const OneModeNetwork& net,
                                                           std::string_view source) {
  return geodesic_distances(net, net.index_of(source));
}

double closeness_centrality(const OneModeNetwork& net, std::size_t vertex,
                            ClosenessVariant variant) {
  if (vertex >= net.vertex_count()) throw std::domain_error("vertex out of range");
  const auto dist = geodesic_distances(net, vertex);
  std::size_t reachable = 0;
  std::size_t total = 0;
  for (std::size_t u = 0; u < dist.size(); ++u) {
    if (u == vertex || !dist[u]) continue;
    ++reachable;
    total += *dist[u];
  }
  if (reachable == 0) return 0.0;
  const double r = static_cast<double>(reachable);
  const double base = r / static_cast<double>(total);
  if (variant == ClosenessVariant::kReachable) return base;
  return r / static_cast<double>(net.vertex_count() - 1) * base;
}

double closeness_centrality(const OneModeNetwork& net, std::string_view vertex,
                            ClosenessVariant variant) {
  return closeness_centrality(net, net.index_of(vertex), variant);
}

std::vector<double> closeness_all(const OneModeNetwork& net, ClosenessVariant variant) {
  std::vector<double> out(net.vertex_count());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = closeness_centrality(net, v, variant);
  return out;
}

std::vector<double> betweenness_raw(const OneModeNetwork& net) {
  const std::size_t n = net.vertex_count();
  std::vector<double> score(n, 0.0);

  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<long> dist(n);
  std::vector<std::size_t> order;
  order.reserve(n);

  for (std::size_t s = 0; s < n; ++s) {
    for (auto& p : preds) p.clear();
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1L);
    order.clear();

    sigma[s] = 1.0;
    dist[s] = 0;
    std::queue<std::size_t> queue;
    queue.push(s);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      order.push_back(v);
      for (const Neighbor& nb : net.neighbors(v)) {
        const std::size_t w = nb.vertex;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }

    // Dependencies are back-propagated in order of decreasing distance.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t w = *it;
      for (std::size_t v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) score[w] += delta[w];
    }
  }

  // Each unordered pair was counted once from either endpoint.
  for (double& x : score) x /= 2.0;
  return score;
}

std::vector<double> betweenness_centrality(const OneModeNetwork& net) {
  const std::size_t n = net.vertex_count();
  std::vector<double> score = betweenness_raw(net);
  if (n < 3) {
    std::fill(score.begin(), score.end(), 0.0);
    return score;
  }
  const double scale = 2.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  for (double& x : score) x *= scale;
  return score;
}

double degree_centralization(std::span<const std::size_t> degrees) {
  const std::size_t n = degrees.size();
  if (n < 3) throw std::domain_error("degree centralization needs at least 3 vertices");
  const std::size_t dmax = *std::max_element(degrees.begin(), degrees.end());
  std::size_t spread = 0;
  for (std::size_t d : degrees) spread += dmax - d;
  return static_cast<double>(spread) / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
}

double betweenness_centralization(std::span<const double> normalized) {
  const std::size_t n = normalized.size();
  if (n < 3) throw std::domain_error("betweenness centralization needs at least 3 vertices");
  const double bmax = *std::max_element(normalized.begin(), normalized.end());
  double spread = 0.0;
  for (double b : normalized) spread += bmax - b;
  return spread / static_cast<double>(n - 1);
}

double closeness_centralization(const OneModeNetwork& net) {
  const auto components = weak_components(net);
  if (components.empty()) return 0.0;
  const auto largest = std::max_element(
      components.begin(), components.end(),
      [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const std::size_t k = largest->size();
  if (k < 3) return 0.0;

  std::vector<double> closeness;
  closeness.reserve(k);
  for (std::size_t v : *largest) {
    const auto dist = geodesic_distances(net, v);
    std::size_t total = 0;
    for (std::size_t u : *largest) total += *dist[u];
    closeness.push_back(static_cast<double>(k - 1) / static_cast<double>(total));
  }
  const double cmax = *std::max_element(closeness.begin(), closeness.end());
  double spread = 0.0;
  for (double c : closeness) spread += cmax - c;
  const double dk = static_cast<double>(k);
  return spread * (2.0 * dk - 3.0) / ((dk - 1.0) * (dk - 2.0));
}

namespace {

template <typename T>
std::vector<std::size_t> rank_descending(std::span<const T> values) {
  std::vector<T> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<std::size_t> ranks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    // First position holding a value not greater than values[i].
    auto pos = std::lower_bound(sorted.begin(), sorted.end(), values[i], std::greater<>());
    ranks[i] = static_cast<std::size_t>(pos - sorted.begin()) + 1;
  }
  return ranks;
}

}  // namespace

std::vector<std::size_t> rank_competition(std::span<const double> values) {
  return rank_descending(values);
}

std::vector<std::size_t> rank_competition(std::span<const std::size_t> values) {
  return rank_descending(values);
}

namespace {

void fill_degree_part(std::span<const std::size_t> degs, MetricsReport& report) {
  NetworkAggregates& agg = report.aggregates;
  const std::size_t n = degs.size();
  const std::size_t sum = std::accumulate(degs.begin(), degs.end(), std::size_t{0});
  if (sum % 2 != 0) throw ValidationError("degree sum is odd; not a simple undirected graph");
  agg.n = n;
  agg.m = sum / 2;
  agg.isolate_count = static_cast<std::size_t>(std::count(degs.begin(), degs.end(), std::size_t{0}));
  if (n > 0) {
    agg.density_no_loops = density(n, agg.m, DensityVariant::kNoLoops);
    agg.density_loops_allowed = density(n, agg.m, DensityVariant::kLoopsAllowed);
    const DegreeStats stats = degree_stats(degs);
    agg.mean_degree = stats.mean;
    agg.median_degree = stats.median;
    agg.sd_degree_population = stats.sd_population;
  }
  if (n >= 3) agg.degree_centralization = degree_centralization(degs);

  const auto ranks = rank_competition(degs);
  report.vertices.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    VertexMetrics& vm = report.vertices[v];
    vm.vertex = v;
    vm.degree = degs[v];
    vm.normalized_degree = n >= 2 ? static_cast<double>(degs[v]) / static_cast<double>(n - 1) : 0.0;
    vm.ranks.degree = ranks[v];
  }
}

}  // namespace

MetricsReport compute_degree_metrics(std::span<const std::size_t> degrees) {
  MetricsReport report;
  fill_degree_part(degrees, report);
  return report;
}

MetricsReport compute_metrics(const OneModeNetwork& net, const MetricsOptions& opts) {
  MetricsReport report;
  const auto degs = degrees(net);
  fill_degree_part(degs, report);
  NetworkAggregates& agg = report.aggregates;

  const auto closeness = closeness_all(net, opts.closeness);
  const auto betweenness = betweenness_centrality(net);
  const auto closeness_ranks = rank_competition(std::span<const double>(closeness));
  const auto betweenness_ranks = rank_competition(std::span<const double>(betweenness));
  for (std::size_t v = 0; v < net.vertex_count(); ++v) {
    VertexMetrics& vm = report.vertices[v];
    vm.closeness = closeness[v];
    vm.betweenness = betweenness[v];
    vm.ranks.closeness = closeness_ranks[v];
    vm.ranks.betweenness = betweenness_ranks[v];
  }

  const auto components = weak_components(net);
  agg.component_count = components.size();
  std::size_t largest = 0;
  for (const auto& c : components) largest = std::max(largest, c.size());
  agg.largest_component_size = largest;
  if (net.vertex_count() >= 3) {
    agg.betweenness_centralization = betweenness_centralization(betweenness);
    agg.closeness_centralization = closeness_centralization(net);
  }
  return report;
}

}  // namespace interlock
