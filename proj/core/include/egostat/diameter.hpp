#pragma once

#include "egostat/graph.hpp"

#include <cstdint>

namespace egostat {

/// 90% effective diameter from the hop-distance CDF over reachable ordered
/// pairs (u != v). Exact all-source BFS when n <= sources, otherwise BFS from
/// `sources` uniformly sampled vertices. Linear interpolation with F(0) = 0.
double effective_diameter90(const Graph& g, std::uint64_t sources, std::uint64_t seed);

}  // namespace egostat
