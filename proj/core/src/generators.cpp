#include "egostat/generators.hpp"
#include "egostat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

namespace egostat {

namespace {

Graph from_pairs(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                 std::uint64_t n) {
  // build_graph drops vertices never mentioned; pad with the full id range.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> all = pairs;
  Graph g = build_graph(all);
  if (g.n == n) {
    g.labels.clear();
    return g;
  }
  // Isolated vertices exist in generated graphs; rebuild with explicit count.
  std::set<std::uint64_t> seen;
  for (auto [a, b] : pairs) {
    seen.insert(a);
    seen.insert(b);
  }
  Graph out;
  out.n = n;
  out.m = g.m;
  out.offsets.assign(n + 1, 0);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.m = edges.size();
  for (auto [a, b] : edges) {
    ++out.offsets[a + 1];
    ++out.offsets[b + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) out.offsets[i] += out.offsets[i - 1];
  out.neighbors.resize(2 * out.m);
  std::vector<std::uint64_t> cursor(out.offsets.begin(), out.offsets.end() - 1);
  for (auto [a, b] : edges) {
    out.neighbors[cursor[a]++] = static_cast<VertexId>(b);
    out.neighbors[cursor[b]++] = static_cast<VertexId>(a);
  }
  for (std::uint64_t u = 0; u < n; ++u)
    std::sort(out.neighbors.begin() + out.offsets[u], out.neighbors.begin() + out.offsets[u + 1]);
  return out;
}

}  // namespace

Graph generate_er(std::uint64_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw argument_error("edge probability must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  if (n >= 2 && p > 0.0) {
    const std::uint64_t total = n * (n - 1) / 2;
    if (p >= 1.0) {
      for (std::uint64_t u = 0; u + 1 < n; ++u)
        for (std::uint64_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    } else {
      // Geometric skipping over the lexicographic pair index.
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      const double logq = std::log1p(-p);
      double u01 = unif(rng);
      std::uint64_t k = static_cast<std::uint64_t>(std::floor(std::log1p(-u01) / logq));
      while (k < total) {
        // invert pair index: k = u*n - u*(u+1)/2 + (v - u - 1)
        std::uint64_t u = 0;
        std::uint64_t rem = k;
        std::uint64_t row = n - 1;
        while (rem >= row) {
          rem -= row;
          --row;
          ++u;
        }
        pairs.emplace_back(u, u + 1 + rem);
        u01 = unif(rng);
        k += 1 + static_cast<std::uint64_t>(std::floor(std::log1p(-u01) / logq));
      }
    }
  }
  return from_pairs(pairs, n);
}

Graph generate_powerlaw_cm(std::uint64_t n, double gamma, std::uint32_t dmin,
                           std::uint64_t seed) {
  if (gamma <= 1.0) throw argument_error("power-law exponent must exceed 1");
  if (dmin < 1) throw argument_error("minimum degree must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double inv = -1.0 / (gamma - 1.0);
  const std::uint64_t cap = n > 1 ? n - 1 : 1;
  auto draw_degree = [&]() -> std::uint64_t {
    double x = (dmin - 0.5) * std::pow(1.0 - unif(rng), inv) + 0.5;
    std::uint64_t k = static_cast<std::uint64_t>(x);
    if (k < dmin) k = dmin;
    if (k > cap) k = cap;
    return k;
  };

  std::vector<std::uint64_t> deg(n);
  std::uint64_t total = 0;
  for (auto& d : deg) {
    d = draw_degree();
    total += d;
  }
  // Force an even stub count by resampling a single vertex.
  while (n > 0 && total % 2 != 0) {
    total -= deg[n - 1];
    deg[n - 1] = draw_degree();
    total += deg[n - 1];
  }

  std::vector<std::uint64_t> stubs;
  stubs.reserve(total);
  for (std::uint64_t v = 0; v < n; ++v)
    for (std::uint64_t i = 0; i < deg[v]; ++i) stubs.push_back(v);
  std::shuffle(stubs.begin(), stubs.end(), rng);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  pairs.reserve(total / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    if (stubs[i] == stubs[i + 1]) continue;  // rejected self-loop
    pairs.emplace_back(stubs[i], stubs[i + 1]);
  }
  return from_pairs(pairs, n);  // duplicate pairs erased inside
}

Graph generate_triangle_closure(std::uint64_t n, std::uint32_t m0, double pt,
                                std::uint64_t seed) {
  if (m0 < 1) throw argument_error("edges per arrival must be at least 1");
  if (pt < 0.0 || pt > 1.0) throw argument_error("closure probability must be in [0,1]");
  if (n <= m0) throw argument_error("vertex count must exceed edges per arrival");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  std::vector<std::set<std::uint64_t>> adj(n);
  std::vector<std::uint64_t> stubs;  // one entry per edge endpoint
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  auto add_edge = [&](std::uint64_t a, std::uint64_t b) {
    adj[a].insert(b);
    adj[b].insert(a);
    stubs.push_back(a);
    stubs.push_back(b);
    pairs.emplace_back(a, b);
  };

  // Complete seed core on the first m0 vertices.
  for (std::uint64_t u = 0; u < m0; ++u)
    for (std::uint64_t v = u + 1; v < m0; ++v) add_edge(u, v);

  for (std::uint64_t t = m0; t < n; ++t) {
    auto pick_preferential = [&]() -> std::uint64_t {
      for (int tries = 0; tries < 1000; ++tries) {
        std::uint64_t c = stubs.empty()
                              ? std::uint64_t(unif(rng) * t)
                              : stubs[std::uint64_t(unif(rng) * stubs.size())];
        if (c != t && !adj[t].contains(c)) return c;
      }
      // Dense corner case: scan for any valid target.
      for (std::uint64_t c = 0; c < t; ++c)
        if (!adj[t].contains(c)) return c;
      return t;  // no target available
    };

    std::uint64_t last = pick_preferential();
    if (last == t) continue;
    add_edge(t, last);
    const std::uint32_t links = static_cast<std::uint32_t>(std::min<std::uint64_t>(m0, t)) ;
    for (std::uint32_t j = 1; j < links; ++j) {
      std::uint64_t target = t;
      if (unif(rng) < pt) {
        // Triangle closure: random neighbor of the previous target.
        std::vector<std::uint64_t> cands;
        for (std::uint64_t w : adj[last])
          if (w != t && !adj[t].contains(w)) cands.push_back(w);
        if (!cands.empty()) target = cands[std::uint64_t(unif(rng) * cands.size())];
      }
      if (target == t) target = pick_preferential();
      if (target == t) break;
      add_edge(t, target);
      last = target;
    }
  }
  return from_pairs(pairs, n);
}

}  // namespace egostat
