#pragma once

#include "egostat/graph.hpp"
#include "egostat/triangles.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace egostat {

/// Statistics over the 2m ego-degree instances d_u^v = m_uv, one per
/// adjacency slot, plus the per-vertex means of section-level identities
/// <d_u^v> = C_u (d_u - 1) and <d_u^v>_ego = C_u d_u (d_u - 1) / <d>.
struct EgoInstanceSummary {
  std::uint64_t instance_count = 0;  // = 2m
  std::vector<std::pair<std::uint32_t, std::uint64_t>> histogram;  // (value, count)
  double mean = 0.0;
  std::uint32_t median = 0;  // lower median
  double fraction_zero = 0.0;
  std::vector<double> vertex_mean;           // <d_u^v> per vertex
  std::vector<double> vertex_weighted_mean;  // <d_u^v>_ego per vertex
};

struct AssortativityResult {
  double r = 0.0;
  std::uint64_t pair_count = 0;  // ordered pairs (both orientations)
  double mean = 0.0;             // endpoint-degree marginal (symmetric)
  double variance = 0.0;
};

struct NeighborDegreeStats {
  double vertex_averaged = 0.0;    // mean over vertices of mean neighbor degree
  double instance_averaged = 0.0;  // mean over 2m instances = <d^2>/<d>
  std::optional<double> ego_instance_averaged;  // over ego-edge endpoint instances
};

EgoInstanceSummary ego_instance_summary(const Graph& g, const VertexStats& vs,
                                        const std::vector<std::uint32_t>& mult);

/// <d_u^v>_ego = C_u d_u (d_u - 1) / <d> for every vertex.
std::vector<double> weighted_mean_ego_degree(const VertexStats& vs);

/// Pearson correlation of endpoint degrees over all 2m ordered adjacency
/// instances.
AssortativityResult assortativity_global(const Graph& g);

/// Pearson correlation of endpoint ego-degrees over the ego edges of the
/// disjoint union of all ego networks. Each triangle {u,v,w} contributes one
/// ego edge per member ego.
AssortativityResult assortativity_ego(const Graph& g, const std::vector<std::uint32_t>& mult);

/// Mean instance clustering over all 2m instances; an instance (u in ego(v))
/// with m_uv >= 2 contributes 2 q_uv / (m_uv (m_uv - 1)), others contribute 0.
/// With include_low_degree = false, instances with m_uv < 2 are excluded
/// from the denominator instead.
double clustering_ego(const Graph& g, const std::vector<std::uint32_t>& mult,
                      const std::vector<std::uint64_t>& fourclique,
                      bool include_low_degree = true);

NeighborDegreeStats neighbor_degree_stats(const Graph& g,
                                          const std::vector<std::uint32_t>& mult);

}  // namespace egostat
