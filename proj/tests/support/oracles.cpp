#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace egostat::testing {

namespace {

std::set<std::pair<VertexId, VertexId>> edge_set(const Graph& g) {
  std::set<std::pair<VertexId, VertexId>> s;
  for (auto [u, v] : g.edges()) s.insert({u, v});
  return s;
}

bool connected(const std::set<std::pair<VertexId, VertexId>>& es, VertexId a, VertexId b) {
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  return es.count({a, b}) > 0;
}

std::uint64_t slot_of(const Graph& g, VertexId u, VertexId v) {
  for (std::uint64_t s = g.offsets[u]; s < g.offsets[u + 1]; ++s)
    if (g.neighbors[s] == v) return s;
  return ~0ull;
}

}  // namespace

std::vector<std::uint64_t> brute_triangle_counts(const Graph& g) {
  auto es = edge_set(g);
  std::vector<std::uint64_t> t(g.n, 0);
  for (VertexId a = 0; a < g.n; ++a)
    for (VertexId b = a + 1; b < g.n; ++b)
      for (VertexId c = b + 1; c < g.n; ++c)
        if (connected(es, a, b) && connected(es, a, c) && connected(es, b, c)) {
          ++t[a];
          ++t[b];
          ++t[c];
        }
  return t;
}

std::vector<std::uint32_t> brute_edge_multiplicities(const Graph& g) {
  auto es = edge_set(g);
  std::vector<std::uint32_t> m(g.neighbors.size(), 0);
  for (auto [u, v] : g.edges()) {
    std::uint32_t count = 0;
    for (VertexId w = 0; w < g.n; ++w)
      if (w != u && w != v && connected(es, u, w) && connected(es, v, w)) ++count;
    m[slot_of(g, u, v)] = count;
    m[slot_of(g, v, u)] = count;
  }
  return m;
}

std::vector<std::uint64_t> brute_fourclique_counts(const Graph& g) {
  auto es = edge_set(g);
  std::vector<std::uint64_t> q(g.neighbors.size(), 0);
  for (auto [u, v] : g.edges()) {
    std::uint64_t count = 0;
    for (VertexId w = 0; w < g.n; ++w) {
      if (w == u || w == v || !connected(es, u, w) || !connected(es, v, w)) continue;
      for (VertexId x = w + 1; x < g.n; ++x) {
        if (x == u || x == v || !connected(es, u, x) || !connected(es, v, x)) continue;
        if (connected(es, w, x)) ++count;
      }
    }
    q[slot_of(g, u, v)] = count;
    q[slot_of(g, v, u)] = count;
  }
  return q;
}

double naive_pearson(const std::vector<std::pair<double, double>>& pairs) {
  const double n = static_cast<double>(pairs.size());
  double mx = 0, my = 0;
  for (auto [x, y] : pairs) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (auto [x, y] : pairs) {
    sxx += (x - mx) * (x - mx);
    syy += (y - my) * (y - my);
    sxy += (x - mx) * (y - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

double brute_global_assortativity(const Graph& g) {
  std::vector<std::pair<double, double>> pairs;
  for (auto [u, v] : g.edges()) {
    pairs.emplace_back(g.degree(u), g.degree(v));
    pairs.emplace_back(g.degree(v), g.degree(u));
  }
  return naive_pearson(pairs);
}

EgoSubgraph materialize_ego(const Graph& g, VertexId ego) {
  EgoSubgraph s;
  s.members.assign(g.begin_of(ego), g.end_of(ego));
  s.internal_degree.assign(s.members.size(), 0);
  s.adjacency.resize(s.members.size());
  for (std::size_t i = 0; i < s.members.size(); ++i)
    for (std::size_t j = i + 1; j < s.members.size(); ++j)
      if (g.has_edge(s.members[i], s.members[j])) {
        ++s.internal_degree[i];
        ++s.internal_degree[j];
        s.adjacency[i].push_back(s.members[j]);
        s.adjacency[j].push_back(s.members[i]);
      }
  return s;
}

double brute_ego_assortativity(const Graph& g) {
  std::vector<std::pair<double, double>> pairs;
  for (VertexId ego = 0; ego < g.n; ++ego) {
    EgoSubgraph s = materialize_ego(g, ego);
    for (std::size_t i = 0; i < s.members.size(); ++i)
      for (std::size_t j = i + 1; j < s.members.size(); ++j)
        if (g.has_edge(s.members[i], s.members[j])) {
          pairs.emplace_back(s.internal_degree[i], s.internal_degree[j]);
          pairs.emplace_back(s.internal_degree[j], s.internal_degree[i]);
        }
  }
  return naive_pearson(pairs);
}

double brute_ego_clustering(const Graph& g, bool include_low_degree) {
  double sum = 0.0;
  std::uint64_t count = 0;
  for (VertexId ego = 0; ego < g.n; ++ego) {
    EgoSubgraph s = materialize_ego(g, ego);
    for (std::size_t i = 0; i < s.members.size(); ++i) {
      std::uint32_t d = s.internal_degree[i];
      if (d < 2) {
        if (include_low_degree) ++count;
        continue;
      }
      // Triangles through member i inside the ego subgraph.
      std::uint64_t tri = 0;
      for (std::size_t a = 0; a < s.adjacency[i].size(); ++a)
        for (std::size_t b = a + 1; b < s.adjacency[i].size(); ++b)
          if (g.has_edge(s.adjacency[i][a], s.adjacency[i][b]) &&
              g.has_edge(s.adjacency[i][a], ego) && g.has_edge(s.adjacency[i][b], ego))
            ++tri;
      sum += 2.0 * static_cast<double>(tri) / (double(d) * double(d - 1));
      ++count;
    }
  }
  return sum / static_cast<double>(count);
}

std::vector<std::uint64_t> powerlaw_samples(std::size_t count, double gamma,
                                            std::uint64_t xmin, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  const double inv = -1.0 / (gamma - 1.0);
  const double x0 = static_cast<double>(xmin) - 0.5;
  while (out.size() < count) {
    double x = x0 * std::pow(1.0 - unif(rng), inv) + 0.5;
    auto k = static_cast<std::uint64_t>(x);
    if (k >= xmin) out.push_back(k);
  }
  return out;
}

std::vector<double> powerlaw_samples_real(std::size_t count, double gamma,
                                          double xmin, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> out;
  out.reserve(count);
  const double inv = -1.0 / (gamma - 1.0);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(xmin * std::pow(1.0 - unif(rng), inv));
  return out;
}

}  // namespace egostat::testing
