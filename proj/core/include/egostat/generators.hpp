#pragma once

#include "egostat/graph.hpp"

#include <cstdint>

namespace egostat {

/// Erdos-Renyi G(n, p); each unordered pair independent with probability p.
Graph generate_er(std::uint64_t n, double p, std::uint64_t seed);

/// Configuration-model graph with degrees drawn from a discrete power law
/// with exponent gamma and minimum degree dmin (erased self-loops/multi-edges).
Graph generate_powerlaw_cm(std::uint64_t n, double gamma, std::uint32_t dmin,
                           std::uint64_t seed);

/// Preferential-attachment growth with triangle closure: each arriving vertex
/// attaches m0 times; each attachment after the first closes a triangle with
/// probability pt. Seed core is the complete graph on m0 vertices.
Graph generate_triangle_closure(std::uint64_t n, std::uint32_t m0, double pt,
                                std::uint64_t seed);

}  // namespace egostat
