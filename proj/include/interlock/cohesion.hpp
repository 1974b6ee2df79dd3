#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "interlock/core.hpp"
#include "interlock/metrics.hpp"

namespace interlock {

struct MultiplicityRow {
  int value;
  std::size_t frequency;
  double relative;
};

/// Rows for every line value 1..max_value, zero-frequency values included.
struct LineMultiplicityDistribution {
  std::vector<MultiplicityRow> rows;
  int max_value = 0;
  std::size_t total = 0;
};

struct ComponentSummary {
  std::size_t size = 0;
  std::size_t edge_count = 0;
  double density = 0.0;
  std::vector<std::size_t> members;
};

struct SliceDecomposition {
  int threshold = 1;
  OneModeNetwork sliced;
  std::vector<ComponentSummary> components;
};

LineMultiplicityDistribution line_multiplicity_distribution(const OneModeNetwork& net);

/// Keeps every vertex and the edges with value >= m.
/// Throws std::domain_error when m < 1.
OneModeNetwork m_slice(const OneModeNetwork& net, int m);

/// Connected vertex sets, singletons included. Components are ordered by
/// their first member and members are in vertex order.
std::vector<std::vector<std::size_t>> weak_components(const OneModeNetwork& net);

/// Size, induced edge count and induced density of `component`.
/// Throws std::domain_error for vertices outside the network.
ComponentSummary component_summary(const OneModeNetwork& net,
                                   std::span<const std::size_t> component,
                                   DensityVariant variant = DensityVariant::kNoLoops);

SliceDecomposition slice_decomposition(const OneModeNetwork& net, int m,
                                       DensityVariant variant = DensityVariant::kNoLoops);

}  // namespace interlock
