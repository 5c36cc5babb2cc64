#include "egostat/graph.hpp"
#include "egostat/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <zlib.h>

namespace egostat {

bool Graph::has_edge(VertexId u, VertexId v) const {
  const VertexId* lo = begin_of(u);
  const VertexId* hi = end_of(u);
  return std::binary_search(lo, hi, v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(m);
  for (VertexId u = 0; u < n; ++u) {
    for (const VertexId* p = begin_of(u); p != end_of(u); ++p) {
      if (*p > u) out.emplace_back(u, *p);
    }
  }
  return out;
}

namespace {

struct RawEdges {
  std::vector<std::pair<VertexId, VertexId>> pairs;  // dense temp ids, u may equal v
  std::vector<std::string> labels;                   // temp id -> original token
};

// Assigns dense ids in first-seen order; numeric remap happens later.
class IdMap {
 public:
  VertexId get(std::string_view token, RawEdges& raw) {
    auto it = map_.find(std::string(token));
    if (it != map_.end()) return it->second;
    VertexId id = static_cast<VertexId>(raw.labels.size());
    raw.labels.emplace_back(token);
    map_.emplace(raw.labels.back(), id);
    return id;
  }

 private:
  std::unordered_map<std::string, VertexId> map_;
};

bool all_numeric(const std::vector<std::string>& labels) {
  for (const auto& s : labels) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    if (s.size() > 19) return false;  // avoid u64 overflow ambiguity
  }
  return true;
}

Graph finalize(RawEdges raw, const IngestOptions& opts, IngestWarnings* warnings) {
  const std::size_t nv = raw.labels.size();

  // Numeric inputs get dense ids in ascending numeric order so that a
  // dumped edge list rebuilds the identical graph.
  if (all_numeric(raw.labels)) {
    std::vector<VertexId> order(nv);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      std::uint64_t va = std::stoull(raw.labels[a]);
      std::uint64_t vb = std::stoull(raw.labels[b]);
      return va < vb;
    });
    std::vector<VertexId> rank(nv);
    for (std::size_t i = 0; i < nv; ++i) rank[order[i]] = static_cast<VertexId>(i);
    for (auto& [a, b] : raw.pairs) {
      a = rank[a];
      b = rank[b];
    }
    std::vector<std::string> sorted_labels(nv);
    for (std::size_t i = 0; i < nv; ++i) sorted_labels[i] = std::move(raw.labels[order[i]]);
    raw.labels = std::move(sorted_labels);
  }

  IngestWarnings local;
  IngestWarnings& warn = warnings ? *warnings : local;

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(raw.pairs.size());
  for (auto [a, b] : raw.pairs) {
    if (a == b) {
      if (!opts.drop_self_loops) throw argument_error("self-loop in input");
      ++warn.self_loops_dropped;
      continue;
    }
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  std::uint64_t dups = static_cast<std::uint64_t>(edges.end() - last);
  if (dups > 0 && !opts.drop_duplicates) throw argument_error("duplicate edge in input");
  warn.duplicates_dropped += dups;
  edges.erase(last, edges.end());

  Graph g;
  g.n = nv;
  g.m = edges.size();
  g.offsets.assign(nv + 1, 0);
  for (auto [a, b] : edges) {
    ++g.offsets[a + 1];
    ++g.offsets[b + 1];
  }
  std::partial_sum(g.offsets.begin(), g.offsets.end(), g.offsets.begin());
  g.neighbors.resize(2 * g.m);
  std::vector<std::uint64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (auto [a, b] : edges) {
    g.neighbors[cursor[a]++] = b;
    g.neighbors[cursor[b]++] = a;
  }
  for (VertexId u = 0; u < g.n; ++u)
    std::sort(g.neighbors.begin() + g.offsets[u], g.neighbors.begin() + g.offsets[u + 1]);

  // Keep labels only when they differ from the dense ids.
  bool identity = true;
  for (std::size_t i = 0; i < nv && identity; ++i)
    identity = raw.labels[i] == std::to_string(i);
  if (!identity) g.labels = std::move(raw.labels);
  return g;
}

// Feeds lines from `next_line` through tokenization into RawEdges.
Graph parse_lines(const std::function<bool(std::string&)>& next_line,
                  const IngestOptions& opts, IngestWarnings* warnings,
                  std::uint64_t max_lines) {
  RawEdges raw;
  IdMap ids;
  std::string line;
  std::size_t lineno = 0;
  while (next_line(line)) {
    ++lineno;
    if (max_lines && lineno > max_lines) break;
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size() || line[i] == opts.comment_prefix) continue;

    std::string_view tok[2];
    int ntok = 0;
    while (i < line.size()) {
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (ntok < 2) tok[ntok] = std::string_view(line).substr(start, i - start);
      ++ntok;
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    }
    if (ntok != 2) throw parse_error("expected two fields, got " + std::to_string(ntok), lineno);
    VertexId a = ids.get(tok[0], raw);
    VertexId b = ids.get(tok[1], raw);
    raw.pairs.emplace_back(a, b);
  }
  return finalize(std::move(raw), opts, warnings);
}

}  // namespace

Graph parse_edge_list(std::istream& in, const IngestOptions& opts, IngestWarnings* warnings) {
  return parse_lines([&in](std::string& line) { return bool(std::getline(in, line)); },
                     opts, warnings, 0);
}

Graph parse_edge_list_file(const std::string& path, const IngestOptions& opts,
                           IngestWarnings* warnings, std::uint64_t max_lines) {
  // gzopen reads plain files unchanged and inflates gzip by magic bytes.
  gzFile f = gzopen(path.c_str(), "rb");
  if (!f) throw argument_error("cannot open file: " + path);
  gzbuffer(f, 1 << 20);
  char buf[1 << 16];
  std::string pending;
  auto next_line = [&](std::string& line) {
    line.clear();
    for (;;) {
      auto nl = pending.find('\n');
      if (nl != std::string::npos) {
        line = pending.substr(0, nl);
        pending.erase(0, nl + 1);
        return true;
      }
      int got = gzread(f, buf, sizeof(buf));
      if (got < 0) throw argument_error("gzip read error in " + path);
      if (got == 0) {
        if (pending.empty()) return false;
        line.swap(pending);
        pending.clear();
        return true;
      }
      pending.append(buf, static_cast<std::size_t>(got));
    }
  };
  try {
    Graph g = parse_lines(next_line, opts, warnings, max_lines);
    gzclose(f);
    return g;
  } catch (...) {
    gzclose(f);
    throw;
  }
}

Graph build_graph(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs) {
  RawEdges raw;
  IdMap ids;
  for (auto [a, b] : pairs) {
    VertexId u = ids.get(std::to_string(a), raw);
    VertexId v = ids.get(std::to_string(b), raw);
    raw.pairs.emplace_back(u, v);
  }
  return finalize(std::move(raw), IngestOptions{}, nullptr);
}

}  // namespace egostat
