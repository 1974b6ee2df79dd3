#include "interlock/cohesion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace interlock {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller index becomes the root so roots are first members.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

LineMultiplicityDistribution line_multiplicity_distribution(const OneModeNetwork& net) {
  LineMultiplicityDistribution out;
  out.total = net.edge_count();
  for (const Edge& e : net.edges()) out.max_value = std::max(out.max_value, e.value);
  std::vector<std::size_t> freq(static_cast<std::size_t>(out.max_value) + 1, 0);
  for (const Edge& e : net.edges()) ++freq[static_cast<std::size_t>(e.value)];
  for (int v = 1; v <= out.max_value; ++v) {
    const std::size_t f = freq[static_cast<std::size_t>(v)];
    out.rows.push_back({v, f, static_cast<double>(f) / static_cast<double>(out.total)});
  }
  return out;
}

OneModeNetwork m_slice(const OneModeNetwork& net, int m) {
  if (m < 1) throw std::domain_error("m-slice threshold must be at least 1");
  std::vector<Edge> kept;
  std::copy_if(net.edges().begin(), net.edges().end(), std::back_inserter(kept),
               [m](const Edge& e) { return e.value >= m; });
  return OneModeNetwork(net.vertices(), std::move(kept));
}

std::vector<std::vector<std::size_t>> weak_components(const OneModeNetwork& net) {
  const std::size_t n = net.vertex_count();
  DisjointSets sets(n);
  for (const Edge& e : net.edges()) sets.unite(e.u, e.v);

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (slot[root] == n) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

ComponentSummary component_summary(const OneModeNetwork& net,
                                   std::span<const std::size_t> component,
                                   DensityVariant variant) {
  std::vector<bool> inside(net.vertex_count(), false);
  for (std::size_t v : component) {
    if (v >= net.vertex_count()) throw std::domain_error("component vertex not in network");
    inside[v] = true;
  }
  ComponentSummary s;
  s.members.assign(component.begin(), component.end());
  std::sort(s.members.begin(), s.members.end());
  s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
  s.size = s.members.size();
  for (const Edge& e : net.edges()) {
    if (inside[e.u] && inside[e.v]) ++s.edge_count;
  }
  if (s.size > 0) s.density = density(s.size, s.edge_count, variant);
  return s;
}

SliceDecomposition slice_decomposition(const OneModeNetwork& net, int m, DensityVariant variant) {
  SliceDecomposition out;
  out.threshold = m;
  out.sliced = m_slice(net, m);
  for (const auto& members : weak_components(out.sliced)) {
    out.components.push_back(component_summary(out.sliced, members, variant));
  }
  return out;
}

}  // namespace interlock
