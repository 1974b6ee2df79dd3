#pragma once

#include <string>
#include <vector>

#include "interlock/core.hpp"

namespace interlock::graphs {

inline std::vector<Vertex> names(std::size_t n) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({std::string(1, static_cast<char>('a' + i)), std::nullopt});
  return out;
}

inline OneModeNetwork make(std::size_t n, std::vector<Edge> edges) {
  return OneModeNetwork(names(n), std::move(edges));
}

inline OneModeNetwork path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
  return make(n, e);
}

inline OneModeNetwork cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1});
  return make(n, e);
}

/// Vertex 0 is the hub.
inline OneModeNetwork star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.push_back({0, i, 1});
  return make(leaves + 1, e);
}

inline OneModeNetwork complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j, 1});
  return make(n, e);
}

}  // namespace interlock::graphs
