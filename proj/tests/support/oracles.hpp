#pragma once

// Brute-force reference implementations, independent of the library's
// merge-intersection kernels. Everything here enumerates triples/quadruples
// or materializes ego subgraphs explicitly; use only on small graphs.

#include "egostat/graph.hpp"

#include <cstdint>
#include <vector>

namespace egostat::testing {

/// T_u by enumerating all vertex triples.
std::vector<std::uint64_t> brute_triangle_counts(const Graph& g);

/// m_uv per adjacency slot by scanning all third vertices.
std::vector<std::uint32_t> brute_edge_multiplicities(const Graph& g);

/// q_uv per adjacency slot by enumerating all vertex quadruples.
std::vector<std::uint64_t> brute_fourclique_counts(const Graph& g);

/// Two-pass Pearson correlation over (x, y) pairs.
double naive_pearson(const std::vector<std::pair<double, double>>& pairs);

/// Pearson of endpoint degrees over all 2m ordered adjacency instances.
double brute_global_assortativity(const Graph& g);

/// Materialized ego subgraph of `ego`: member list plus internal degree and
/// adjacency among members.
struct EgoSubgraph {
  std::vector<VertexId> members;                  // N(ego)
  std::vector<std::uint32_t> internal_degree;     // per member
  std::vector<std::vector<VertexId>> adjacency;   // per member, members only
};

EgoSubgraph materialize_ego(const Graph& g, VertexId ego);

/// Pearson of endpoint ego-degrees over ego edges of all materialized egos
/// (ordered pairs, both orientations).
double brute_ego_assortativity(const Graph& g);

/// Mean instance clustering over all 2m instances with explicit ego
/// subgraphs; include_low_degree mirrors clustering_ego.
double brute_ego_clustering(const Graph& g, bool include_low_degree);

/// Inverse-CDF sampler for the discrete power law with exponent gamma and
/// minimum value xmin (half-shift discretization).
std::vector<std::uint64_t> powerlaw_samples(std::size_t count, double gamma,
                                            std::uint64_t xmin, std::uint64_t seed);

/// Inverse-CDF sampler for the continuous power law on [xmin, inf).
std::vector<double> powerlaw_samples_real(std::size_t count, double gamma,
                                          double xmin, std::uint64_t seed);

}  // namespace egostat::testing
