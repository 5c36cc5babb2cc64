#include "egostat/triangles.hpp"
#include "egostat/errors.hpp"

#include <algorithm>
#include <vector>

namespace egostat {

namespace {

// Index of v within u's neighbor list, as an absolute slot.
std::uint64_t slot_of(const Graph& g, VertexId u, VertexId v) {
  const VertexId* lo = g.begin_of(u);
  const VertexId* p = std::lower_bound(lo, g.end_of(u), v);
  return g.offsets[u] + static_cast<std::uint64_t>(p - lo);
}

// Merge intersection of two sorted neighbor lists.
void common_neighbors(const Graph& g, VertexId u, VertexId v, std::vector<VertexId>& out) {
  out.clear();
  const VertexId* a = g.begin_of(u);
  const VertexId* ae = g.end_of(u);
  const VertexId* b = g.begin_of(v);
  const VertexId* be = g.end_of(v);
  while (a != ae && b != be) {
    if (*a < *b) ++a;
    else if (*b < *a) ++b;
    else {
      out.push_back(*a);
      ++a;
      ++b;
    }
  }
}

}  // namespace

std::uint64_t VertexStats::total_triangles() const {
  std::uint64_t s = 0;
  for (auto t : triangles) s += t;
  return s / 3;
}

VertexStats vertex_stats(const Graph& g) {
  VertexStats vs;
  vs.degree.resize(g.n);
  vs.triangles.assign(g.n, 0);
  vs.clustering.assign(g.n, 0.0);
  for (VertexId u = 0; u < g.n; ++u) vs.degree[u] = g.degree(u);

  // Enumerate each triangle once: edge (u,v) with u < v, common neighbor w > v.
  std::vector<VertexId> common;
  for (VertexId u = 0; u < g.n; ++u) {
    for (const VertexId* p = g.begin_of(u); p != g.end_of(u); ++p) {
      VertexId v = *p;
      if (v <= u) continue;
      common_neighbors(g, u, v, common);
      for (VertexId w : common) {
        if (w <= v) continue;
        ++vs.triangles[u];
        ++vs.triangles[v];
        ++vs.triangles[w];
      }
    }
  }
  for (VertexId u = 0; u < g.n; ++u) {
    std::uint64_t d = vs.degree[u];
    if (d >= 2)
      vs.clustering[u] = 2.0 * static_cast<double>(vs.triangles[u]) /
                         (static_cast<double>(d) * static_cast<double>(d - 1));
  }
  return vs;
}

std::vector<std::uint32_t> edge_multiplicities(const Graph& g) {
  std::vector<std::uint32_t> mult(g.neighbors.size(), 0);
  std::vector<VertexId> common;
  for (VertexId u = 0; u < g.n; ++u) {
    for (std::uint64_t s = g.offsets[u]; s < g.offsets[u + 1]; ++s) {
      VertexId v = g.neighbors[s];
      if (v <= u) continue;
      common_neighbors(g, u, v, common);
      std::uint32_t c = static_cast<std::uint32_t>(common.size());
      mult[s] = c;
      mult[slot_of(g, v, u)] = c;
    }
  }
  return mult;
}

std::vector<std::uint64_t> edge_fourclique_counts(const Graph& g,
                                                  const std::vector<std::uint32_t>& mult) {
  std::vector<std::uint64_t> q(g.neighbors.size(), 0);
  std::vector<VertexId> common;
  for (VertexId u = 0; u < g.n; ++u) {
    for (std::uint64_t s = g.offsets[u]; s < g.offsets[u + 1]; ++s) {
      VertexId v = g.neighbors[s];
      if (v <= u) continue;
      if (mult[s] < 2) continue;
      common_neighbors(g, u, v, common);
      // Count edges internal to the common neighborhood.
      std::uint64_t cliques = 0;
      for (std::size_t i = 0; i + 1 < common.size(); ++i) {
        const VertexId* a = g.begin_of(common[i]);
        const VertexId* ae = g.end_of(common[i]);
        a = std::lower_bound(a, ae, common[i] + 1);
        const VertexId* b = common.data() + i + 1;
        const VertexId* be = common.data() + common.size();
        while (a != ae && b != be) {
          if (*a < *b) ++a;
          else if (*b < *a) ++b;
          else {
            ++cliques;
            ++a;
            ++b;
          }
        }
      }
      q[s] = cliques;
      q[slot_of(g, v, u)] = cliques;
    }
  }
  return q;
}

DegreeProfile degree_profile(const Graph& g, const VertexStats& vs) {
  std::uint32_t dmax = 0;
  for (auto d : vs.degree) dmax = std::max(dmax, d);
  std::vector<std::uint64_t> count(dmax + 1, 0);
  std::vector<double> csum(dmax + 1, 0.0);
  std::vector<double> annd_sum(dmax + 1, 0.0);
  for (VertexId u = 0; u < g.n; ++u) {
    std::uint32_t d = vs.degree[u];
    ++count[d];
    csum[d] += vs.clustering[u];
    if (d > 0) {
      double s = 0.0;
      for (const VertexId* p = g.begin_of(u); p != g.end_of(u); ++p)
        s += static_cast<double>(vs.degree[*p]);
      annd_sum[d] += s / static_cast<double>(d);
    }
  }
  DegreeProfile prof;
  for (std::uint32_t k = 0; k <= dmax; ++k) {
    if (count[k] == 0) continue;
    prof.degrees.push_back(k);
    prof.count.push_back(count[k]);
    prof.mean_clustering.push_back(csum[k] / static_cast<double>(count[k]));
    prof.mean_neighbor_degree.push_back(annd_sum[k] / static_cast<double>(count[k]));
  }
  return prof;
}

double global_clustering(const VertexStats& vs) {
  if (vs.degree.empty()) throw undefined_metric_error("clustering of empty graph");
  double s = 0.0;
  for (double c : vs.clustering) s += c;
  return s / static_cast<double>(vs.degree.size());
}

double average_edge_multiplicity(const Graph& g, const std::vector<std::uint32_t>& mult) {
  if (g.m == 0) throw undefined_metric_error("edge multiplicity of edgeless graph");
  std::uint64_t s = 0;
  for (auto v : mult) s += v;
  return static_cast<double>(s) / static_cast<double>(2 * g.m);
}

}  // namespace egostat
