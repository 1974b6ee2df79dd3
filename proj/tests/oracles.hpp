#pragma once

// Brute-force reference computations for the property tests. Nothing here
// calls into the library's algorithms; only the data types are shared.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "interlock/core.hpp"

namespace interlock::oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(const OneModeNetwork& net) {
  Matrix adj(net.vertex_count(), std::vector<bool>(net.vertex_count(), false));
  for (const Edge& e : net.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  return adj;
}

/// Every simple path from s to t, each as a vertex sequence.
inline std::vector<std::vector<std::size_t>> simple_paths(const Matrix& adj, std::size_t s,
                                                          std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path{s};
  std::vector<bool> used(adj.size(), false);
  used[s] = true;
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    if (v == t) {
      out.push_back(path);
      return;
    }
    for (std::size_t w = 0; w < adj.size(); ++w) {
      if (!adj[v][w] || used[w]) continue;
      used[w] = true;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      used[w] = false;
    }
  };
  dfs(dfs, s);
  return out;
}

/// Shortest simple-path lengths; nullopt when no path exists.
inline std::vector<std::vector<std::optional<std::size_t>>> distances(const OneModeNetwork& net) {
  const auto adj = adjacency(net);
  const std::size_t n = adj.size();
  std::vector<std::vector<std::optional<std::size_t>>> d(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      for (const auto& p : simple_paths(adj, s, t)) {
        const std::size_t len = p.size() - 1;
        if (!d[s][t] || len < *d[s][t]) d[s][t] = len;
      }
    }
  }
  return d;
}

/// Raw betweenness: over unordered pairs {s, t} not containing v, the share
/// of shortest s-t paths that pass through v.
inline std::vector<double> betweenness_raw(const OneModeNetwork& net) {
  const auto adj = adjacency(net);
  const std::size_t n = adj.size();
  std::vector<double> score(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      auto paths = simple_paths(adj, s, t);
      if (paths.empty()) continue;
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (const auto& p : paths) best = std::min(best, p.size());
      std::vector<std::vector<std::size_t>> geodesics;
      for (auto& p : paths) {
        if (p.size() == best) geodesics.push_back(std::move(p));
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        std::size_t through = 0;
        for (const auto& g : geodesics) {
          if (std::find(g.begin() + 1, g.end() - 1, v) != g.end() - 1) ++through;
        }
        score[v] += static_cast<double>(through) / static_cast<double>(geodesics.size());
      }
    }
  }
  return score;
}

/// r / sum(d) over reachable vertices, from the oracle distance matrix.
inline std::vector<double> closeness_reachable(const OneModeNetwork& net) {
  const auto d = distances(net);
  std::vector<double> out(d.size(), 0.0);
  for (std::size_t v = 0; v < d.size(); ++v) {
    std::size_t r = 0, sum = 0;
    for (std::size_t u = 0; u < d.size(); ++u) {
      if (u != v && d[v][u]) {
        ++r;
        sum += *d[v][u];
      }
    }
    if (r > 0) out[v] = static_cast<double>(r) / static_cast<double>(sum);
  }
  return out;
}

/// Reflexive-transitive closure of adjacency (Warshall).
inline Matrix reachability(const OneModeNetwork& net) {
  Matrix r = adjacency(net);
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

/// Event-pair intersections computed element by element.
struct PairCount {
  std::size_t e;
  std::size_t f;
  int shared;
};

inline std::vector<PairCount> event_pair_intersections(const std::vector<std::set<std::string>>& boards) {
  std::vector<PairCount> out;
  for (std::size_t e = 0; e < boards.size(); ++e) {
    for (std::size_t f = e + 1; f < boards.size(); ++f) {
      int shared = 0;
      for (const std::string& a : boards[e]) {
        for (const std::string& b : boards[f]) {
          if (a == b) ++shared;
        }
      }
      if (shared > 0) out.push_back({e, f, shared});
    }
  }
  return out;
}

// --- generators -------------------------------------------------------------

/// G(n, p) with integer line values in [1, max_value].
inline OneModeNetwork random_graph(std::mt19937& rng, std::size_t n, double p, int max_value = 1) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> value(1, max_value);
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back({"v" + std::to_string(i), std::nullopt});
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j, value(rng)});
  return OneModeNetwork(std::move(vertices), std::move(edges));
}

struct RandomBoards {
  std::vector<std::string> events;
  std::vector<std::set<std::string>> boards;
  /// (event, actor) rows in insertion order, duplicates possible.
  std::vector<std::pair<std::string, std::string>> rows;
};

inline RandomBoards random_boards(std::mt19937& rng, std::size_t max_events, std::size_t max_actors) {
  std::uniform_int_distribution<std::size_t> ne(1, max_events), na(1, max_actors);
  const std::size_t events = ne(rng), actors = na(rng);
  std::uniform_int_distribution<std::size_t> pick_e(0, events - 1), pick_a(0, actors - 1);
  std::uniform_int_distribution<std::size_t> count(0, events * 3);
  RandomBoards out;
  for (std::size_t e = 0; e < events; ++e) out.events.push_back("J" + std::to_string(e));
  out.boards.resize(events);
  const std::size_t rows = count(rng);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t e = pick_e(rng);
    const std::string a = "a" + std::to_string(pick_a(rng));
    out.boards[e].insert(a);
    out.rows.emplace_back(out.events[e], a);
  }
  return out;
}

}  // namespace interlock::oracle
