#include "interlock/projection.hpp"

#include <map>
#include <utility>

namespace interlock {

namespace {

// Counts co-occurrences of "target" vertices through the shared "via" side:
// every via-node contributes 1 to each unordered pair of its targets.
std::vector<Edge> count_pairs(std::size_t vias, auto&& targets_of_via) {
  std::map<std::pair<std::size_t, std::size_t>, int> counts;
  for (std::size_t x = 0; x < vias; ++x) {
    std::span<const std::size_t> list = targets_of_via(x);
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        auto key = std::minmax(list[i], list[j]);
        ++counts[{key.first, key.second}];
      }
    }
  }
  std::vector<Edge> edges;
  edges.reserve(counts.size());
  for (const auto& [key, value] : counts) edges.push_back({key.first, key.second, value});
  return edges;
}

}  // namespace

OneModeNetwork project_events(const TwoModeNetwork& net) {
  std::vector<Vertex> vertices;
  vertices.reserve(net.event_count());
  for (const EventId& e : net.events()) vertices.push_back({e.id, e.label});
  auto edges = count_pairs(net.actor_count(), [&](std::size_t a) { return net.events_of(a); });
  return OneModeNetwork(std::move(vertices), std::move(edges));
}

OneModeNetwork project_actors(const TwoModeNetwork& net) {
  std::vector<Vertex> vertices;
  vertices.reserve(net.actor_count());
  for (const ActorId& a : net.actors()) vertices.push_back({a.id, std::nullopt});
  auto edges = count_pairs(net.event_count(), [&](std::size_t e) { return net.members(e); });
  return OneModeNetwork(std::move(vertices), std::move(edges));
}

}  // namespace interlock
