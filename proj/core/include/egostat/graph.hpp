#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace egostat {

using VertexId = std::uint32_t;

/// Immutable undirected simple graph in compressed adjacency form.
/// Neighbor lists are strictly increasing; u in N(v) iff v in N(u);
/// dense ids cover [0, n).
struct Graph {
  std::uint64_t n = 0;  // vertex count
  std::uint64_t m = 0;  // undirected edge count
  std::vector<std::uint64_t> offsets;  // size n+1
  std::vector<VertexId> neighbors;     // size 2m, sorted per vertex
  std::vector<std::string> labels;     // dense id -> original id, empty if identity

  std::uint32_t degree(VertexId u) const {
    return static_cast<std::uint32_t>(offsets[u + 1] - offsets[u]);
  }
  const VertexId* begin_of(VertexId u) const { return neighbors.data() + offsets[u]; }
  const VertexId* end_of(VertexId u) const { return neighbors.data() + offsets[u + 1]; }
  bool has_edge(VertexId u, VertexId v) const;

  /// All undirected edges as (u, v) with u < v, in adjacency order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;
};

struct IngestOptions {
  char comment_prefix = '#';
  bool symmetrize = true;        // treat input as directed and add reverse edges
  bool drop_self_loops = true;
  bool drop_duplicates = true;
  bool one_based_ids = false;    // subtract 1 from numeric ids
};

/// Counters for silently repaired input, reported alongside the graph.
struct IngestWarnings {
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicates_dropped = 0;
};

Graph parse_edge_list(std::istream& in, const IngestOptions& opts = {},
                      IngestWarnings* warnings = nullptr);

/// Reads a file, transparently decompressing gzip (detected by magic bytes).
Graph parse_edge_list_file(const std::string& path, const IngestOptions& opts = {},
                           IngestWarnings* warnings = nullptr,
                           std::uint64_t max_lines = 0);

/// Builds a graph from integer id pairs with the same canonicalization
/// (dedup, self-loop drop, dense renumbering of the ids that appear).
Graph build_graph(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs);

}  // namespace egostat
