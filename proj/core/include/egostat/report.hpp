#pragma once

#include "egostat/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace egostat {

/// A report field that is either a number or an explicit null with a reason.
struct Metric {
  std::optional<double> value;
  std::string reason;  // set only when value is absent

  static Metric of(double v) { return {v, {}}; }
  static Metric undefined(std::string why) { return {std::nullopt, std::move(why)}; }
};

enum class AnndDef { Auto, Vertex, Instance };

struct ReportOptions {
  std::uint64_t seed = 1;
  std::uint64_t diameter_sources = 1000;
  bool skip_fourclique = false;
  bool skip_diameter = false;
  bool force_large = false;  // run 4-clique/diameter even above the edge cap
  AnndDef annd_def = AnndDef::Auto;
  std::uint64_t fit_min_tail = 10;
  std::uint64_t clustering_min_bin = 5;

  // Above this edge count the 4-clique pass and diameter are auto-disabled
  // unless force_large is set.
  std::uint64_t large_edge_cap = 1000000;
};

struct ReportBundle {
  std::string dataset;

  struct {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    Metric eff_diameter90;
    Metric r_glo;
    Metric c_glo;
  } table1;

  struct {
    Metric median_degree;
    Metric mean_degree;
    Metric annd_vertex;
    Metric annd_instance;
    std::string annd_selected;  // which definition is headlined
    Metric ego_instance_mean;
    Metric ego_annd;
    Metric p_glo;
    Metric fraction_zero;
  } table2;

  struct {
    Metric p_glo;
    Metric c_glo;
    Metric c_ego_rand;
    Metric c_ego;
    Metric c_ego_excluding_low;  // sensitivity variant, m_uv < 2 excluded
    Metric r_glo;
    Metric r_ego;
  } table3;

  struct {
    Metric gamma;          // global degree exponent
    Metric gamma_xmin;
    Metric gamma_ks;
    Metric alpha;          // clustering power-law exponent
    Metric alpha_c0;
    Metric alpha_r2;
    Metric eta;            // exponent of positive ego instance degrees
    Metric eta_xmin;
    Metric predicted_tail_exponent;  // from (gamma, alpha)
    Metric ks_predicted_vs_ego;      // KS(E, T)
  } fits;

  struct {
    std::string input_sha256;
    std::string options;  // rendered flag string
    std::uint64_t seed = 0;
    std::string version;
  } provenance;
};

ReportBundle build_report(const Graph& g, const std::string& dataset_name,
                          const ReportOptions& opts);

nlohmann::json to_json(const ReportBundle& b);
ReportBundle bundle_from_json(const nlohmann::json& j);
std::string render_csv(const ReportBundle& b);
std::string render_markdown(const ReportBundle& b);

/// Figure-style CCDF triple: global degrees (G), positive ego instance
/// degrees (E), predicted per-vertex means (T).
struct CompareSeries {
  std::vector<std::pair<double, double>> global_ccdf;
  std::vector<std::pair<double, double>> ego_ccdf;
  std::vector<std::pair<double, double>> predicted_ccdf;
  double ks_ego_vs_predicted = 0.0;
  bool ego_dominates_top_decile = false;
};

CompareSeries compare_series(const Graph& g);

std::string format_sig6(double v);

}  // namespace egostat
