#include "egostat/theory.hpp"
#include "egostat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace egostat {

namespace {

struct TailFit {
  double gamma = 0.0;
  double ks = 0.0;
  std::uint64_t n_tail = 0;
};

// MLE + KS for a fixed cutoff over sorted samples.
TailFit fit_tail(const std::vector<double>& sorted, double xmin, bool half_shift) {
  const double x0 = half_shift ? xmin - 0.5 : xmin;
  auto lo = std::lower_bound(sorted.begin(), sorted.end(), xmin);
  TailFit fit;
  fit.n_tail = static_cast<std::uint64_t>(sorted.end() - lo);
  if (fit.n_tail == 0) return fit;
  double logsum = 0.0;
  bool all_equal = true;
  for (auto it = lo; it != sorted.end(); ++it) {
    logsum += std::log(*it / x0);
    if (*it != *lo) all_equal = false;
  }
  if (all_equal) {
    fit.gamma = 0.0;  // caller maps to degenerate-fit
    return fit;
  }
  fit.gamma = 1.0 + static_cast<double>(fit.n_tail) / logsum;

  // KS distance between the empirical tail CDF and the fitted CDF
  // F(x) = 1 - ((x - hs) / x0)^(1 - gamma).
  const double hs = half_shift ? 0.5 : 0.0;
  const double n = static_cast<double>(fit.n_tail);
  double d = 0.0;
  std::uint64_t cum = 0;
  for (auto it = lo; it != sorted.end();) {
    auto nx = std::upper_bound(it, sorted.end(), *it);
    double x = *it;
    double fmod = 1.0 - std::pow((x - hs) / x0, 1.0 - fit.gamma);
    double femp_lo = static_cast<double>(cum) / n;
    cum += static_cast<std::uint64_t>(nx - it);
    double femp_hi = static_cast<double>(cum) / n;
    d = std::max({d, std::abs(femp_lo - fmod), std::abs(femp_hi - fmod)});
    it = nx;
  }
  fit.ks = d;
  return fit;
}

}  // namespace

PowerLawFit fit_degree_exponent(const std::vector<double>& samples,
                                const FitOptions& opts) {
  std::vector<double> sorted;
  sorted.reserve(samples.size());
  for (auto s : samples)
    if (s > 0) sorted.push_back(s);
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) throw insufficient_data_error("no positive samples");

  PowerLawFit out;
  if (opts.mode == XminMode::Fixed) {
    TailFit fit = fit_tail(sorted, opts.fixed_xmin, opts.half_shift);
    if (fit.n_tail < opts.min_tail)
      throw insufficient_data_error("fewer than " + std::to_string(opts.min_tail) +
                                    " samples at or above xmin");
    if (fit.gamma == 0.0) throw degenerate_fit_error("all tail samples equal");
    out.exponent = fit.gamma;
    out.xmin = opts.fixed_xmin;
    out.ks = fit.ks;
    out.n_tail = fit.n_tail;
    return out;
  }

  // Scan: candidate cutoffs from the smallest sample to the 90th percentile,
  // requiring at least min_tail points above the cutoff.
  double p90 = sorted[std::min(sorted.size() - 1, (sorted.size() * 9) / 10)];
  std::vector<double> candidates;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if ((i == 0 || sorted[i] != sorted[i - 1]) && sorted[i] <= p90)
      candidates.push_back(sorted[i]);

  bool found = false;
  for (double c : candidates) {
    TailFit fit = fit_tail(sorted, c, opts.half_shift);
    if (fit.n_tail < opts.min_tail || fit.gamma == 0.0) continue;
    if (!found || fit.ks < out.ks) {
      out.exponent = fit.gamma;
      out.xmin = c;
      out.ks = fit.ks;
      out.n_tail = fit.n_tail;
      found = true;
    }
  }
  if (!found) {
    // Distinguish the two failure modes for the caller.
    TailFit fit = fit_tail(sorted, sorted.front(), opts.half_shift);
    if (fit.n_tail >= opts.min_tail && fit.gamma == 0.0)
      throw degenerate_fit_error("all tail samples equal");
    throw insufficient_data_error("no cutoff leaves enough tail samples");
  }
  return out;
}

ClusteringFit fit_clustering_powerlaw(const DegreeProfile& profile, std::uint64_t min_bin) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < profile.degrees.size(); ++i) {
    if (profile.count[i] < min_bin) continue;
    if (profile.mean_clustering[i] <= 0.0) continue;
    xs.push_back(std::log(static_cast<double>(profile.degrees[i])));
    ys.push_back(std::log(profile.mean_clustering[i]));
  }
  if (xs.size() < 3) throw insufficient_data_error("fewer than 3 usable degree classes");

  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw degenerate_fit_error("all usable classes share one degree");
  double slope = (n * sxy - sx * sy) / denom;
  double intercept = (sy - slope * sx) / n;

  ClusteringFit fit;
  fit.alpha = -slope;
  fit.prefactor = std::exp(intercept);
  double ss_tot = syy - sy * sy / n;
  if (ss_tot <= 0.0) {
    fit.r2 = 1.0;
  } else {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double e = ys[i] - (intercept + slope * xs[i]);
      ss_res += e * e;
    }
    fit.r2 = 1.0 - ss_res / ss_tot;
  }
  return fit;
}

double ego_tail_exponent(double gamma, double alpha) {
  if (alpha == 2.0) throw argument_error("change of variables degenerate at alpha = 2");
  return (gamma + 1.0 - alpha) / (2.0 - alpha);
}

std::vector<WeightedSample> predicted_mean_ego_distribution(const VertexStats& vs) {
  std::vector<WeightedSample> out;
  out.reserve(vs.degree.size());
  for (std::size_t u = 0; u < vs.degree.size(); ++u) {
    double d = static_cast<double>(vs.degree[u]);
    if (d == 0.0) continue;
    out.push_back({vs.clustering[u] * (d - 1.0), d});
  }
  return out;
}

double c_ego_rand(double c_glo) {
  if (c_glo < 0.0 || c_glo > 1.0) throw argument_error("clustering must be in [0,1]");
  return 2.0 * c_glo - c_glo * c_glo;
}

std::vector<std::pair<double, double>> ccdf(const std::vector<WeightedSample>& values) {
  if (values.empty()) throw argument_error("ccdf of empty sample set");
  std::map<double, double> agg;
  double total = 0.0;
  for (const auto& s : values) {
    agg[s.value] += s.weight;
    total += s.weight;
  }
  if (total <= 0.0) throw argument_error("ccdf of zero-weight sample set");
  std::vector<std::pair<double, double>> out;
  out.reserve(agg.size());
  double tail = total;
  for (auto [value, weight] : agg) {
    out.emplace_back(value, tail / total);
    tail -= weight;
  }
  return out;
}

double ks_distance(const std::vector<WeightedSample>& a,
                   const std::vector<WeightedSample>& b) {
  if (a.empty() || b.empty()) throw argument_error("ks distance of empty sample set");
  auto cdf_points = [](const std::vector<WeightedSample>& v) {
    std::map<double, double> agg;
    double total = 0.0;
    for (const auto& s : v) {
      agg[s.value] += s.weight;
      total += s.weight;
    }
    std::vector<std::pair<double, double>> pts;  // (value, F(value))
    double cum = 0.0;
    for (auto [value, weight] : agg) {
      cum += weight;
      pts.emplace_back(value, cum / total);
    }
    return pts;
  };
  auto pa = cdf_points(a);
  auto pb = cdf_points(b);
  double d = 0.0, fa = 0.0, fb = 0.0;
  std::size_t i = 0, j = 0;
  while (i < pa.size() || j < pb.size()) {
    double x = (j >= pb.size() || (i < pa.size() && pa[i].first <= pb[j].first))
                   ? pa[i].first
                   : pb[j].first;
    while (i < pa.size() && pa[i].first == x) fa = pa[i++].second;
    while (j < pb.size() && pb[j].first == x) fb = pb[j++].second;
    d = std::max(d, std::abs(fa - fb));
  }
  return d;
}

}  // namespace egostat
