#include "egostat/report.hpp"
#include "egostat/diameter.hpp"
#include "egostat/ego.hpp"
#include "egostat/errors.hpp"
#include "egostat/theory.hpp"
#include "egostat/triangles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace egostat {

std::string format_sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

namespace {

constexpr const char* kVersion = "0.1.0";

template <typename F>
Metric try_metric(F&& f) {
  try {
    return Metric::of(f());
  } catch (const undefined_metric_error& e) {
    return Metric::undefined(e.what());
  } catch (const insufficient_data_error& e) {
    return Metric::undefined(e.what());
  } catch (const degenerate_fit_error& e) {
    return Metric::undefined(e.what());
  }
}

double tail_prob(const std::vector<std::pair<double, double>>& ccdf_pts, double x) {
  auto it = std::lower_bound(ccdf_pts.begin(), ccdf_pts.end(), x,
                             [](const auto& p, double v) { return p.first < v; });
  if (it == ccdf_pts.end()) return 0.0;
  return it->second;
}

std::string render_options(const ReportOptions& o) {
  std::ostringstream os;
  os << "seed=" << o.seed << " diameter_sources=" << o.diameter_sources
     << " skip_fourclique=" << o.skip_fourclique << " skip_diameter=" << o.skip_diameter
     << " force_large=" << o.force_large << " annd_def="
     << (o.annd_def == AnndDef::Vertex ? "vertex"
                                       : o.annd_def == AnndDef::Instance ? "instance" : "auto")
     << " fit_min_tail=" << o.fit_min_tail << " clustering_min_bin=" << o.clustering_min_bin;
  return os.str();
}

}  // namespace

ReportBundle build_report(const Graph& g, const std::string& dataset_name,
                          const ReportOptions& opts) {
  ReportBundle b;
  b.dataset = dataset_name;
  b.provenance.seed = opts.seed;
  b.provenance.version = kVersion;
  b.provenance.options = render_options(opts);

  VertexStats vs = vertex_stats(g);
  std::vector<std::uint32_t> mult = edge_multiplicities(g);

  const bool large = g.m > opts.large_edge_cap && !opts.force_large;
  const bool run_fourclique = !opts.skip_fourclique && !large;
  const bool run_diameter = !opts.skip_diameter && !large;

  b.table1.n = g.n;
  b.table1.m = g.m;
  b.table1.c_glo = try_metric([&] { return global_clustering(vs); });
  b.table1.r_glo = try_metric([&] { return assortativity_global(g).r; });
  if (run_diameter)
    b.table1.eff_diameter90 =
        try_metric([&] { return effective_diameter90(g, opts.diameter_sources, opts.seed); });
  else
    b.table1.eff_diameter90 = Metric::undefined("skipped");

  if (g.n > 0) {
    std::vector<std::uint32_t> degs(vs.degree);
    std::sort(degs.begin(), degs.end());
    b.table2.median_degree = Metric::of(degs[(degs.size() - 1) / 2]);
    b.table2.mean_degree = Metric::of(2.0 * double(g.m) / double(g.n));
  } else {
    b.table2.median_degree = Metric::undefined("empty graph");
    b.table2.mean_degree = Metric::undefined("empty graph");
  }
  NeighborDegreeStats nd{};
  bool nd_ok = false;
  try {
    nd = neighbor_degree_stats(g, mult);
    nd_ok = true;
  } catch (const undefined_metric_error&) {
  }
  if (nd_ok) {
    b.table2.annd_vertex = Metric::of(nd.vertex_averaged);
    b.table2.annd_instance = Metric::of(nd.instance_averaged);
    b.table2.ego_annd = nd.ego_instance_averaged
                            ? Metric::of(*nd.ego_instance_averaged)
                            : Metric::undefined("no triangles");
  } else {
    b.table2.annd_vertex = Metric::undefined("edgeless graph");
    b.table2.annd_instance = Metric::undefined("edgeless graph");
    b.table2.ego_annd = Metric::undefined("edgeless graph");
  }
  b.table2.annd_selected = opts.annd_def == AnndDef::Vertex ? "vertex" : "instance";

  Metric instance_mean = try_metric([&] { return average_edge_multiplicity(g, mult); });
  b.table2.ego_instance_mean = instance_mean;
  b.table2.p_glo = g.n >= 2 ? Metric::of(2.0 * double(g.m) / (double(g.n) * double(g.n - 1)))
                            : Metric::undefined("fewer than two vertices");
  b.table2.fraction_zero = try_metric(
      [&] { return ego_instance_summary(g, vs, mult).fraction_zero; });

  b.table3.p_glo = b.table2.p_glo;
  b.table3.c_glo = b.table1.c_glo;
  b.table3.c_ego_rand = b.table1.c_glo.value
                            ? Metric::of(c_ego_rand(*b.table1.c_glo.value))
                            : Metric::undefined(b.table1.c_glo.reason);
  if (run_fourclique) {
    std::vector<std::uint64_t> q = edge_fourclique_counts(g, mult);
    b.table3.c_ego = try_metric([&] { return clustering_ego(g, mult, q, true); });
    b.table3.c_ego_excluding_low =
        try_metric([&] { return clustering_ego(g, mult, q, false); });
  } else {
    b.table3.c_ego = Metric::undefined("skipped");
    b.table3.c_ego_excluding_low = Metric::undefined("skipped");
  }
  b.table3.r_glo = b.table1.r_glo;
  b.table3.r_ego = try_metric([&] { return assortativity_ego(g, mult).r; });

  // Parametric fits.
  FitOptions fo;
  fo.min_tail = opts.fit_min_tail;
  std::vector<double> degree_samples;
  degree_samples.reserve(g.n);
  for (auto d : vs.degree)
    if (d > 0) degree_samples.push_back(static_cast<double>(d));
  PowerLawFit gamma_fit{};
  Metric gamma = try_metric([&] {
    gamma_fit = fit_degree_exponent(degree_samples, fo);
    return gamma_fit.exponent;
  });
  b.fits.gamma = gamma;
  b.fits.gamma_xmin = gamma.value ? Metric::of(gamma_fit.xmin) : gamma;
  b.fits.gamma_ks = gamma.value ? Metric::of(gamma_fit.ks) : gamma;

  ClusteringFit cfit{};
  DegreeProfile prof = degree_profile(g, vs);
  Metric alpha = try_metric([&] {
    cfit = fit_clustering_powerlaw(prof, opts.clustering_min_bin);
    return cfit.alpha;
  });
  b.fits.alpha = alpha;
  b.fits.alpha_c0 = alpha.value ? Metric::of(cfit.prefactor) : alpha;
  b.fits.alpha_r2 = alpha.value ? Metric::of(cfit.r2) : alpha;

  std::vector<double> positive_instances;
  for (auto v : mult)
    if (v > 0) positive_instances.push_back(static_cast<double>(v));
  PowerLawFit eta_fit{};
  Metric eta = try_metric([&] {
    eta_fit = fit_degree_exponent(positive_instances, fo);
    return eta_fit.exponent;
  });
  b.fits.eta = eta;
  b.fits.eta_xmin = eta.value ? Metric::of(eta_fit.xmin) : eta;

  if (gamma.value && alpha.value && *alpha.value != 2.0)
    b.fits.predicted_tail_exponent = Metric::of(ego_tail_exponent(*gamma.value, *alpha.value));
  else
    b.fits.predicted_tail_exponent = Metric::undefined("gamma or alpha unavailable");

  if (!positive_instances.empty() && g.m > 0) {
    std::vector<WeightedSample> ego_set;
    ego_set.reserve(positive_instances.size());
    for (double v : positive_instances) ego_set.push_back({v, 1.0});
    std::vector<WeightedSample> predicted = predicted_mean_ego_distribution(vs);
    if (!predicted.empty())
      b.fits.ks_predicted_vs_ego = Metric::of(ks_distance(ego_set, predicted));
    else
      b.fits.ks_predicted_vs_ego = Metric::undefined("no predicted samples");
  } else {
    b.fits.ks_predicted_vs_ego = Metric::undefined("no positive ego instances");
  }
  return b;
}

namespace {

using nlohmann::json;

void put(json& j, const std::string& key, const Metric& m) {
  if (m.value) {
    j[key] = *m.value;
  } else {
    j[key] = nullptr;
    j[key + "_reason"] = m.reason;
  }
}

Metric get_metric(const json& j, const std::string& key) {
  Metric m;
  if (j.contains(key) && !j.at(key).is_null()) {
    m.value = j.at(key).get<double>();
  } else if (j.contains(key + "_reason")) {
    m.reason = j.at(key + "_reason").get<std::string>();
  }
  return m;
}

}  // namespace

nlohmann::json to_json(const ReportBundle& b) {
  json j;
  j["dataset"] = b.dataset;
  json& t1 = j["table1"];
  t1["n"] = b.table1.n;
  t1["m"] = b.table1.m;
  put(t1, "eff_diameter90", b.table1.eff_diameter90);
  put(t1, "r_glo", b.table1.r_glo);
  put(t1, "c_glo", b.table1.c_glo);
  json& t2 = j["table2"];
  put(t2, "median_degree", b.table2.median_degree);
  put(t2, "mean_degree", b.table2.mean_degree);
  put(t2, "annd_vertex", b.table2.annd_vertex);
  put(t2, "annd_instance", b.table2.annd_instance);
  t2["annd_selected"] = b.table2.annd_selected;
  put(t2, "ego_instance_mean", b.table2.ego_instance_mean);
  put(t2, "ego_annd", b.table2.ego_annd);
  put(t2, "p_glo", b.table2.p_glo);
  put(t2, "fraction_zero", b.table2.fraction_zero);
  json& t3 = j["table3"];
  put(t3, "p_glo", b.table3.p_glo);
  put(t3, "c_glo", b.table3.c_glo);
  put(t3, "c_ego_rand", b.table3.c_ego_rand);
  put(t3, "c_ego", b.table3.c_ego);
  put(t3, "c_ego_excluding_low", b.table3.c_ego_excluding_low);
  put(t3, "r_glo", b.table3.r_glo);
  put(t3, "r_ego", b.table3.r_ego);
  json& f = j["fits"];
  put(f, "gamma", b.fits.gamma);
  put(f, "gamma_xmin", b.fits.gamma_xmin);
  put(f, "gamma_ks", b.fits.gamma_ks);
  put(f, "alpha", b.fits.alpha);
  put(f, "alpha_c0", b.fits.alpha_c0);
  put(f, "alpha_r2", b.fits.alpha_r2);
  put(f, "eta", b.fits.eta);
  put(f, "eta_xmin", b.fits.eta_xmin);
  put(f, "predicted_tail_exponent", b.fits.predicted_tail_exponent);
  put(f, "ks_predicted_vs_ego", b.fits.ks_predicted_vs_ego);
  json& p = j["provenance"];
  p["input_sha256"] = b.provenance.input_sha256;
  p["options"] = b.provenance.options;
  p["seed"] = b.provenance.seed;
  p["version"] = b.provenance.version;
  return j;
}

ReportBundle bundle_from_json(const nlohmann::json& j) {
  ReportBundle b;
  b.dataset = j.at("dataset").get<std::string>();
  const json& t1 = j.at("table1");
  b.table1.n = t1.at("n").get<std::uint64_t>();
  b.table1.m = t1.at("m").get<std::uint64_t>();
  b.table1.eff_diameter90 = get_metric(t1, "eff_diameter90");
  b.table1.r_glo = get_metric(t1, "r_glo");
  b.table1.c_glo = get_metric(t1, "c_glo");
  const json& t2 = j.at("table2");
  b.table2.median_degree = get_metric(t2, "median_degree");
  b.table2.mean_degree = get_metric(t2, "mean_degree");
  b.table2.annd_vertex = get_metric(t2, "annd_vertex");
  b.table2.annd_instance = get_metric(t2, "annd_instance");
  b.table2.annd_selected = t2.at("annd_selected").get<std::string>();
  b.table2.ego_instance_mean = get_metric(t2, "ego_instance_mean");
  b.table2.ego_annd = get_metric(t2, "ego_annd");
  b.table2.p_glo = get_metric(t2, "p_glo");
  b.table2.fraction_zero = get_metric(t2, "fraction_zero");
  const json& t3 = j.at("table3");
  b.table3.p_glo = get_metric(t3, "p_glo");
  b.table3.c_glo = get_metric(t3, "c_glo");
  b.table3.c_ego_rand = get_metric(t3, "c_ego_rand");
  b.table3.c_ego = get_metric(t3, "c_ego");
  b.table3.c_ego_excluding_low = get_metric(t3, "c_ego_excluding_low");
  b.table3.r_glo = get_metric(t3, "r_glo");
  b.table3.r_ego = get_metric(t3, "r_ego");
  const json& f = j.at("fits");
  b.fits.gamma = get_metric(f, "gamma");
  b.fits.gamma_xmin = get_metric(f, "gamma_xmin");
  b.fits.gamma_ks = get_metric(f, "gamma_ks");
  b.fits.alpha = get_metric(f, "alpha");
  b.fits.alpha_c0 = get_metric(f, "alpha_c0");
  b.fits.alpha_r2 = get_metric(f, "alpha_r2");
  b.fits.eta = get_metric(f, "eta");
  b.fits.eta_xmin = get_metric(f, "eta_xmin");
  b.fits.predicted_tail_exponent = get_metric(f, "predicted_tail_exponent");
  b.fits.ks_predicted_vs_ego = get_metric(f, "ks_predicted_vs_ego");
  const json& p = j.at("provenance");
  b.provenance.input_sha256 = p.at("input_sha256").get<std::string>();
  b.provenance.options = p.at("options").get<std::string>();
  b.provenance.seed = p.at("seed").get<std::uint64_t>();
  b.provenance.version = p.at("version").get<std::string>();
  return b;
}

namespace {

std::string metric_str(const Metric& m) {
  return m.value ? format_sig6(*m.value) : "null(" + m.reason + ")";
}

}  // namespace

std::string render_csv(const ReportBundle& b) {
  json j = to_json(b);
  std::ostringstream os;
  os << "key,value\n";
  std::function<void(const std::string&, const json&)> walk =
      [&](const std::string& prefix, const json& node) {
        for (auto it = node.begin(); it != node.end(); ++it) {
          std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
          if (it->is_object()) {
            walk(key, *it);
          } else if (it->is_number_float()) {
            os << key << "," << format_sig6(it->get<double>()) << "\n";
          } else if (it->is_null()) {
            os << key << ",\n";
          } else if (it->is_string()) {
            os << key << "," << it->get<std::string>() << "\n";
          } else {
            os << key << "," << it->dump() << "\n";
          }
        }
      };
  walk("", j);
  return os.str();
}

std::string render_markdown(const ReportBundle& b) {
  std::ostringstream os;
  os << "# " << b.dataset << "\n\n";
  os << "| n | m | 90% eff diameter | r_glo | C_glo |\n";
  os << "|---|---|---|---|---|\n";
  os << "| " << b.table1.n << " | " << b.table1.m << " | "
     << metric_str(b.table1.eff_diameter90) << " | " << metric_str(b.table1.r_glo)
     << " | " << metric_str(b.table1.c_glo) << " |\n\n";
  os << "| med(d) | mean(d) | annd(vertex) | annd(instance) | ego inst mean | ego annd | "
        "P_glo | frac zero |\n";
  os << "|---|---|---|---|---|---|---|---|\n";
  os << "| " << metric_str(b.table2.median_degree) << " | " << metric_str(b.table2.mean_degree)
     << " | " << metric_str(b.table2.annd_vertex) << " | "
     << metric_str(b.table2.annd_instance) << " | " << metric_str(b.table2.ego_instance_mean)
     << " | " << metric_str(b.table2.ego_annd) << " | " << metric_str(b.table2.p_glo) << " | "
     << metric_str(b.table2.fraction_zero) << " |\n\n";
  os << "| P_glo | C_glo | C_ego_rand | C_ego | r_glo | r_ego |\n";
  os << "|---|---|---|---|---|---|\n";
  os << "| " << metric_str(b.table3.p_glo) << " | " << metric_str(b.table3.c_glo) << " | "
     << metric_str(b.table3.c_ego_rand) << " | " << metric_str(b.table3.c_ego) << " | "
     << metric_str(b.table3.r_glo) << " | " << metric_str(b.table3.r_ego) << " |\n\n";
  os << "| gamma | alpha | eta | predicted tail exp | KS(E,T) |\n";
  os << "|---|---|---|---|---|\n";
  os << "| " << metric_str(b.fits.gamma) << " | " << metric_str(b.fits.alpha) << " | "
     << metric_str(b.fits.eta) << " | " << metric_str(b.fits.predicted_tail_exponent)
     << " | " << metric_str(b.fits.ks_predicted_vs_ego) << " |\n";
  return os.str();
}

CompareSeries compare_series(const Graph& g) {
  if (g.m == 0) throw undefined_metric_error("edgeless graph");
  VertexStats vs = vertex_stats(g);
  std::vector<std::uint32_t> mult = edge_multiplicities(g);

  std::vector<WeightedSample> global_set;
  for (auto d : vs.degree)
    if (d > 0) global_set.push_back({double(d), 1.0});
  std::vector<WeightedSample> ego_set;
  for (auto v : mult)
    if (v > 0) ego_set.push_back({double(v), 1.0});
  if (ego_set.empty()) throw undefined_metric_error("no positive ego instances");
  std::vector<WeightedSample> predicted = predicted_mean_ego_distribution(vs);

  CompareSeries out;
  out.global_ccdf = ccdf(global_set);
  out.ego_ccdf = ccdf(ego_set);
  out.predicted_ccdf = ccdf(predicted);
  out.ks_ego_vs_predicted = ks_distance(ego_set, predicted);

  // Dominance check over the top decile of the combined value grid.
  std::vector<double> grid;
  for (const auto& [v, p] : out.global_ccdf) grid.push_back(v);
  for (const auto& [v, p] : out.ego_ccdf) grid.push_back(v);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::size_t start = grid.size() - std::max<std::size_t>(1, grid.size() / 10);
  bool dominates = true;
  for (std::size_t i = start; i < grid.size(); ++i) {
    if (tail_prob(out.ego_ccdf, grid[i]) < tail_prob(out.global_ccdf, grid[i])) {
      dominates = false;
      break;
    }
  }
  out.ego_dominates_top_decile = dominates;
  return out;
}

}  // namespace egostat
