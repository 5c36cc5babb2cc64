#pragma once

#include "egostat/graph.hpp"

#include <cstdint>
#include <vector>

namespace egostat {

/// Per-vertex degree, triangle count and local clustering.
/// C_u = 2 T_u / (d_u (d_u - 1)) for d_u >= 2, else 0.
struct VertexStats {
  std::vector<std::uint32_t> degree;
  std::vector<std::uint64_t> triangles;
  std::vector<double> clustering;

  std::uint64_t total_triangles() const;  // sum T_u / 3
};

/// Per-adjacency-slot arrays aligned to Graph::neighbors.
/// multiplicity[slot of (u,v)] = |N(u) ∩ N(v)| = number of triangles on the
/// edge; fourclique[slot] = number of 4-cliques containing the edge.
struct EdgeStats {
  std::vector<std::uint32_t> multiplicity;
  std::vector<std::uint64_t> fourclique;
};

/// Per-degree-class aggregates: vertex count N(k), mean clustering C(k) and
/// mean neighbor degree ANND(k).
struct DegreeProfile {
  std::vector<std::uint32_t> degrees;       // distinct degrees, ascending
  std::vector<std::uint64_t> count;         // N(k)
  std::vector<double> mean_clustering;      // C(k)
  std::vector<double> mean_neighbor_degree; // ANND(k)
};

VertexStats vertex_stats(const Graph& g);

/// Fills EdgeStats::multiplicity via sorted-adjacency merge intersection.
std::vector<std::uint32_t> edge_multiplicities(const Graph& g);

/// Fills EdgeStats::fourclique given multiplicities; for each edge, counts
/// edges of g internal to the common neighborhood.
std::vector<std::uint64_t> edge_fourclique_counts(const Graph& g,
                                                  const std::vector<std::uint32_t>& mult);

DegreeProfile degree_profile(const Graph& g, const VertexStats& vs);

/// Mean of C_u over all vertices (degree < 2 counts as 0).
double global_clustering(const VertexStats& vs);

/// Mean of m_uv over undirected edges; equals 3 * triangles / m.
double average_edge_multiplicity(const Graph& g, const std::vector<std::uint32_t>& mult);

}  // namespace egostat
