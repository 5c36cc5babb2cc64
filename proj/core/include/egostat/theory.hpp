#pragma once

#include "egostat/triangles.hpp"

#include <cstdint>
#include <vector>

namespace egostat {

struct PowerLawFit {
  double exponent = 0.0;  // gamma-hat, > 1
  double xmin = 0.0;
  double ks = 0.0;        // KS distance of the fitted tail
  std::uint64_t n_tail = 0;
};

struct ClusteringFit {
  double prefactor = 0.0;  // C0
  double alpha = 0.0;
  double r2 = 0.0;
};

/// A value with an attached multiplicity weight.
struct WeightedSample {
  double value = 0.0;
  double weight = 1.0;
};

enum class XminMode { Fixed, Scan };

struct FitOptions {
  XminMode mode = XminMode::Scan;
  double fixed_xmin = 1.0;         // used in Fixed mode
  bool half_shift = true;          // discrete half-shift correction
  std::uint64_t min_tail = 10;     // minimum samples at/above xmin
};

/// Continuous-approximation MLE for a power-law tail:
/// gamma = 1 + n / sum ln(x_i / (xmin - 1/2)); the half-shift corrects for
/// integer-valued samples and is dropped for continuous data. Scan mode picks
/// the xmin minimizing the KS distance between the empirical tail and the
/// fitted CDF.
PowerLawFit fit_degree_exponent(const std::vector<double>& samples,
                                const FitOptions& opts = {});

/// Least squares on (ln k, ln C(k)) over degree classes with N(k) >= min_bin
/// and C(k) > 0; models C(k) = C0 k^(-alpha).
ClusteringFit fit_clustering_powerlaw(const DegreeProfile& profile,
                                      std::uint64_t min_bin = 5);

/// Tail exponent (gamma + 1 - alpha) / (2 - alpha) of the predicted
/// <d_u^v>_ego distribution; <= gamma for gamma >= 1, 0 <= alpha <= 1.
double ego_tail_exponent(double gamma, double alpha);

/// Multiset holding value C_u (d_u - 1) with weight d_u per vertex;
/// total weight 2m.
std::vector<WeightedSample> predicted_mean_ego_distribution(const VertexStats& vs);

/// Independent-completion estimate of ego clustering: 2c - c^2.
double c_ego_rand(double c_glo);

/// Tail probabilities P(X >= x) at distinct sorted values.
std::vector<std::pair<double, double>> ccdf(const std::vector<WeightedSample>& values);

/// Sup-norm distance between the empirical CDFs of two weighted sample sets.
double ks_distance(const std::vector<WeightedSample>& a,
                   const std::vector<WeightedSample>& b);

}  // namespace egostat
