#include "egostat/ego.hpp"
#include "egostat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace egostat {

namespace {

std::uint64_t slot_of(const Graph& g, VertexId u, VertexId v) {
  const VertexId* lo = g.begin_of(u);
  const VertexId* p = std::lower_bound(lo, g.end_of(u), v);
  return g.offsets[u] + static_cast<std::uint64_t>(p - lo);
}

using i128 = __int128;

// Pearson correlation over a symmetric ordered pool accumulated as exact
// integer moments. n is the ordered pair count.
double pearson_symmetric(i128 n, i128 sx, i128 sxx, i128 sxy, double* mean_out,
                         double* var_out) {
  i128 var_num = n * sxx - sx * sx;
  if (mean_out) *mean_out = static_cast<double>(sx) / static_cast<double>(n);
  if (var_out)
    *var_out = static_cast<double>(var_num) /
               (static_cast<double>(n) * static_cast<double>(n));
  if (var_num == 0) throw undefined_metric_error("zero degree variance");
  i128 cov_num = n * sxy - sx * sx;
  return static_cast<double>(cov_num) / static_cast<double>(var_num);
}

}  // namespace

EgoInstanceSummary ego_instance_summary(const Graph& g, const VertexStats& vs,
                                        const std::vector<std::uint32_t>& mult) {
  if (g.m == 0) throw undefined_metric_error("ego instances of edgeless graph");
  EgoInstanceSummary s;
  s.instance_count = 2 * g.m;

  std::map<std::uint32_t, std::uint64_t> hist;
  std::uint64_t sum = 0, zeros = 0;
  for (auto v : mult) {
    ++hist[v];
    sum += v;
    if (v == 0) ++zeros;
  }
  s.histogram.assign(hist.begin(), hist.end());
  s.mean = static_cast<double>(sum) / static_cast<double>(s.instance_count);
  s.fraction_zero = static_cast<double>(zeros) / static_cast<double>(s.instance_count);

  // Lower median: value at rank floor((count-1)/2) of the sorted multiset.
  std::uint64_t target = (s.instance_count - 1) / 2;
  std::uint64_t seen = 0;
  for (auto [value, count] : s.histogram) {
    seen += count;
    if (seen > target) {
      s.median = value;
      break;
    }
  }

  s.vertex_mean.assign(g.n, 0.0);
  for (VertexId u = 0; u < g.n; ++u) {
    std::uint32_t d = vs.degree[u];
    if (d == 0) continue;
    std::uint64_t su = 0;
    for (std::uint64_t i = g.offsets[u]; i < g.offsets[u + 1]; ++i) su += mult[i];
    s.vertex_mean[u] = static_cast<double>(su) / static_cast<double>(d);
  }
  s.vertex_weighted_mean = weighted_mean_ego_degree(vs);
  return s;
}

std::vector<double> weighted_mean_ego_degree(const VertexStats& vs) {
  std::uint64_t deg_sum = 0;
  for (auto d : vs.degree) deg_sum += d;
  if (deg_sum == 0) throw undefined_metric_error("mean degree is zero");
  double mean_deg = static_cast<double>(deg_sum) / static_cast<double>(vs.degree.size());
  std::vector<double> out(vs.degree.size(), 0.0);
  for (std::size_t u = 0; u < out.size(); ++u) {
    double d = static_cast<double>(vs.degree[u]);
    out[u] = vs.clustering[u] * d * (d - 1.0) / mean_deg;
  }
  return out;
}

AssortativityResult assortativity_global(const Graph& g) {
  if (g.m == 0) throw undefined_metric_error("assortativity of edgeless graph");
  i128 sx = 0, sxx = 0, sxy = 0;
  for (VertexId u = 0; u < g.n; ++u) {
    i128 du = g.degree(u);
    for (const VertexId* p = g.begin_of(u); p != g.end_of(u); ++p) {
      i128 dv = g.degree(*p);
      sx += du;
      sxx += du * du;
      sxy += du * dv;
    }
  }
  AssortativityResult res;
  res.pair_count = 2 * g.m;
  res.r = pearson_symmetric(static_cast<i128>(res.pair_count), sx, sxx, sxy,
                            &res.mean, &res.variance);
  return res;
}

namespace {

struct PoolMoments {
  i128 n = 0, sx = 0, sxx = 0, sxy = 0;
};

PoolMoments ego_pool_moments(const Graph& g, const std::vector<std::uint32_t>& mult) {
  PoolMoments mo;
  i128& n = mo.n;
  i128& sx = mo.sx;
  i128& sxx = mo.sxx;
  i128& sxy = mo.sxy;
  std::vector<VertexId> common;
  for (VertexId u = 0; u < g.n; ++u) {
    for (std::uint64_t s = g.offsets[u]; s < g.offsets[u + 1]; ++s) {
      VertexId v = g.neighbors[s];
      if (v <= u) continue;
      if (mult[s] == 0) continue;
      // Enumerate each triangle once via common neighbor w > v.
      common.clear();
      const VertexId* a = g.begin_of(u);
      const VertexId* ae = g.end_of(u);
      const VertexId* b = g.begin_of(v);
      const VertexId* be = g.end_of(v);
      while (a != ae && b != be) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else {
          if (*a > v) common.push_back(*a);
          ++a;
          ++b;
        }
      }
      for (VertexId w : common) {
        i128 muv = mult[s];
        i128 muw = mult[slot_of(g, u, w)];
        i128 mvw = mult[slot_of(g, v, w)];
        // Ego edges: in ego(u) endpoints (m_uv, m_uw); in ego(v) (m_uv, m_vw);
        // in ego(w) (m_uw, m_vw). Both orientations.
        n += 6;
        sx += 2 * (muv + muw + mvw);
        sxx += 2 * (muv * muv + muw * muw + mvw * mvw);
        sxy += 2 * (muv * muw + muv * mvw + muw * mvw);
      }
    }
  }
  return mo;
}

}  // namespace

AssortativityResult assortativity_ego(const Graph& g,
                                      const std::vector<std::uint32_t>& mult) {
  PoolMoments mo = ego_pool_moments(g, mult);
  if (mo.n == 0) throw undefined_metric_error("no triangles, ego assortativity undefined");
  AssortativityResult res;
  res.pair_count = static_cast<std::uint64_t>(mo.n);
  res.r = pearson_symmetric(mo.n, mo.sx, mo.sxx, mo.sxy, &res.mean, &res.variance);
  return res;
}

double clustering_ego(const Graph& g, const std::vector<std::uint32_t>& mult,
                      const std::vector<std::uint64_t>& fourclique,
                      bool include_low_degree) {
  if (g.m == 0) throw undefined_metric_error("ego clustering of edgeless graph");
  // Compensated accumulation; instances come in symmetric slot pairs with
  // identical values, so summing all slots is exact doubling.
  double sum = 0.0, comp = 0.0;
  std::uint64_t counted = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    double term = 0.0;
    if (mult[i] >= 2) {
      double mm = static_cast<double>(mult[i]);
      term = 2.0 * static_cast<double>(fourclique[i]) / (mm * (mm - 1.0));
      ++counted;
    } else if (!include_low_degree) {
      continue;
    } else {
      ++counted;
    }
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  if (counted == 0) throw undefined_metric_error("no instances with ego degree >= 2");
  return sum / static_cast<double>(counted);
}

NeighborDegreeStats neighbor_degree_stats(const Graph& g,
                                          const std::vector<std::uint32_t>& mult) {
  if (g.m == 0) throw undefined_metric_error("neighbor degrees of edgeless graph");
  NeighborDegreeStats out;

  double vsum = 0.0;
  std::uint64_t with_deg = 0;
  std::uint64_t dsum = 0, d2sum = 0;
  for (VertexId u = 0; u < g.n; ++u) {
    std::uint64_t d = g.degree(u);
    dsum += d;
    d2sum += d * d;
    if (d == 0) continue;
    std::uint64_t s = 0;
    for (const VertexId* p = g.begin_of(u); p != g.end_of(u); ++p) s += g.degree(*p);
    vsum += static_cast<double>(s) / static_cast<double>(d);
    ++with_deg;
  }
  out.vertex_averaged = vsum / static_cast<double>(with_deg);
  out.instance_averaged = static_cast<double>(d2sum) / static_cast<double>(dsum);

  PoolMoments mo = ego_pool_moments(g, mult);
  if (mo.n > 0)
    out.ego_instance_averaged = static_cast<double>(mo.sx) / static_cast<double>(mo.n);
  return out;
}

}  // namespace egostat
