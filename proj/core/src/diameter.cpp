#include "egostat/diameter.hpp"
#include "egostat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace egostat {

double effective_diameter90(const Graph& g, std::uint64_t sources, std::uint64_t seed) {
  if (g.n == 0) throw undefined_metric_error("effective diameter of empty graph");
  if (g.m == 0) throw undefined_metric_error("effective diameter of edgeless graph");
  if (sources == 0) throw argument_error("source count must be positive");

  std::vector<VertexId> roots;
  if (g.n <= sources) {
    roots.resize(g.n);
    std::iota(roots.begin(), roots.end(), VertexId{0});
  } else {
    std::vector<VertexId> all(g.n);
    std::iota(all.begin(), all.end(), VertexId{0});
    std::mt19937_64 rng(seed);
    roots.reserve(sources);
    std::sample(all.begin(), all.end(), std::back_inserter(roots), sources, rng);
  }

  std::vector<std::uint64_t> hop_hist;  // hop_hist[h] = #pairs at distance exactly h (h >= 1)
  std::vector<std::uint32_t> dist(g.n);
  std::vector<VertexId> frontier, next;
  const std::uint32_t unreached = ~0u;
  for (VertexId s : roots) {
    std::fill(dist.begin(), dist.end(), unreached);
    dist[s] = 0;
    frontier.assign(1, s);
    std::uint32_t h = 0;
    while (!frontier.empty()) {
      ++h;
      next.clear();
      for (VertexId u : frontier) {
        for (const VertexId* p = g.begin_of(u); p != g.end_of(u); ++p) {
          if (dist[*p] == unreached) {
            dist[*p] = h;
            next.push_back(*p);
          }
        }
      }
      if (!next.empty()) {
        if (hop_hist.size() <= h) hop_hist.resize(h + 1, 0);
        hop_hist[h] += next.size();
      }
      frontier.swap(next);
    }
  }

  std::uint64_t reachable = 0;
  for (auto c : hop_hist) reachable += c;
  if (reachable == 0) throw undefined_metric_error("no reachable pairs");

  // F(h) with F(0) = 0; interpolate to F = 0.9.
  double prev_f = 0.0;
  double cum = 0.0;
  for (std::size_t h = 1; h < hop_hist.size(); ++h) {
    cum += static_cast<double>(hop_hist[h]);
    double f = cum / static_cast<double>(reachable);
    if (f >= 0.9) {
      double h0 = static_cast<double>(h - 1);
      return h0 + (0.9 - prev_f) / (f - prev_f);
    }
    prev_f = f;
  }
  return static_cast<double>(hop_hist.size() - 1);
}

}  // namespace egostat
