// egostat: ego-network structural statistics for undirected graphs.
//
// Subcommands:
//   fetch    download a dataset archive with optional sha256 verification
//   report   run the full pipeline and print table/fit values
//   compare  emit global / ego / predicted degree CCDFs
//
// Exit codes: 0 ok, 2 network failure, 3 integrity mismatch, 4 parse
// failure, 5 undefined-metric fatal.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "egostat/errors.hpp"
#include "egostat/graph.hpp"
#include "egostat/hash.hpp"
#include "egostat/report.hpp"

namespace fs = std::filesystem;
using namespace egostat;

namespace {

struct UrlParts {
  std::string scheme;
  std::string host;
  int port = 0;
  std::string path;
};

bool split_url(const std::string& url, UrlParts& out) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) return false;
  out.scheme = url.substr(0, scheme_end);
  std::string rest = url.substr(scheme_end + 3);
  auto slash = rest.find('/');
  std::string hostport = slash == std::string::npos ? rest : rest.substr(0, slash);
  out.path = slash == std::string::npos ? "/" : rest.substr(slash);
  auto colon = hostport.find(':');
  if (colon != std::string::npos) {
    out.host = hostport.substr(0, colon);
    out.port = std::atoi(hostport.c_str() + colon + 1);
  } else {
    out.host = hostport;
    out.port = out.scheme == "https" ? 443 : 80;
  }
  return !out.host.empty() && (out.scheme == "http" || out.scheme == "https");
}

int cmd_fetch(const std::string& url, std::string dest, const std::string& expect_sha) {
  UrlParts parts;
  if (!split_url(url, parts)) {
    std::cerr << "error: unsupported url: " << url << "\n";
    return 2;
  }
  if (const char* cache = std::getenv("EGOSTAT_CACHE_DIR");
      cache && *cache && fs::path(dest).is_relative()) {
    fs::create_directories(cache);
    dest = (fs::path(cache) / dest).string();
  }

  std::string body;
  auto download = [&](auto& cli) -> bool {
    cli.set_follow_location(true);
    cli.set_connection_timeout(30);
    cli.set_read_timeout(120);
    auto res = cli.Get(parts.path);
    if (!res || res->status != 200) return false;
    body = std::move(res->body);
    return true;
  };
  bool ok = false;
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
  if (parts.scheme == "https") {
    httplib::SSLClient cli(parts.host, parts.port);
    cli.enable_server_certificate_verification(false);
    ok = download(cli);
  } else
#endif
  {
    if (parts.scheme == "https") {
      std::cerr << "error: built without TLS support\n";
      return 2;
    }
    httplib::Client cli(parts.host, parts.port);
    ok = download(cli);
  }
  if (!ok) {
    std::cerr << "error: download failed: " << url << "\n";
    return 2;
  }

  // Atomic write: temp file in the destination directory, then rename.
  fs::path target(dest);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".part";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) {
      std::cerr << "error: cannot write " << tmp << "\n";
      std::error_code ec;
      fs::remove(tmp, ec);
      return 2;
    }
  }
  std::string digest = sha256_hex(body);
  if (!expect_sha.empty() && digest != expect_sha) {
    std::error_code ec;
    fs::remove(tmp, ec);
    std::cerr << "error: sha256 mismatch: expected " << expect_sha << ", got " << digest
              << "\n";
    return 3;
  }
  fs::rename(tmp, target);
  std::cout << digest << "  " << target.string() << "\n";
  return 0;
}

Graph load_input(const std::string& input, const std::string& inline_edges,
                 std::string& dataset_name, std::string& sha) {
  if (!inline_edges.empty()) {
    dataset_name = "inline";
    sha = sha256_hex(inline_edges);
    std::string text = inline_edges;
    for (auto& c : text)
      if (c == ',') c = '\n';
    std::istringstream in(text);
    return parse_edge_list(in);
  }
  dataset_name = fs::path(input).stem().string();
  sha = sha256_file_hex(input);
  return parse_edge_list_file(input);
}

int cmd_report(const std::string& input, const std::string& inline_edges,
               const ReportOptions& opts, const std::string& format) {
  Graph g;
  std::string name, sha;
  try {
    g = load_input(input, inline_edges, name, sha);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  ReportBundle b = build_report(g, name, opts);
  b.provenance.input_sha256 = sha;
  if (format == "csv")
    std::cout << render_csv(b);
  else if (format == "md")
    std::cout << render_markdown(b);
  else
    std::cout << to_json(b).dump(2) << "\n";
  return 0;
}

int cmd_compare(const std::string& input, const std::string& out_prefix) {
  Graph g;
  try {
    g = parse_edge_list_file(input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  CompareSeries series;
  try {
    series = compare_series(g);
  } catch (const undefined_metric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  auto write_series = [](std::ostream& os, const char* tag,
                         const std::vector<std::pair<double, double>>& pts) {
    for (const auto& [value, prob] : pts)
      os << tag << "," << format_sig6(value) << "," << format_sig6(prob) << "\n";
  };
  if (out_prefix.empty()) {
    std::cout << "series,value,ccdf\n";
    write_series(std::cout, "global", series.global_ccdf);
    write_series(std::cout, "ego", series.ego_ccdf);
    write_series(std::cout, "predicted", series.predicted_ccdf);
  } else {
    struct {
      const char* suffix;
      const std::vector<std::pair<double, double>>* pts;
    } files[] = {{"_global.csv", &series.global_ccdf},
                 {"_ego.csv", &series.ego_ccdf},
                 {"_predicted.csv", &series.predicted_ccdf}};
    for (const auto& f : files) {
      std::ofstream os(out_prefix + f.suffix);
      os << "value,ccdf\n";
      for (const auto& [value, prob] : *f.pts)
        os << format_sig6(value) << "," << format_sig6(prob) << "\n";
    }
  }
  std::cout << "ks_ego_vs_predicted," << format_sig6(series.ks_ego_vs_predicted) << "\n";
  std::cout << "ego_dominates_top_decile," << (series.ego_dominates_top_decile ? 1 : 0)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ego-network structural statistics"};
  app.require_subcommand(1);

  auto* fetch = app.add_subcommand("fetch", "download a dataset");
  std::string url, dest, expect_sha;
  fetch->add_option("url", url, "HTTP(S) location")->required();
  fetch->add_option("dest", dest, "destination path")->required();
  fetch->add_option("--sha256", expect_sha, "expected content hash");

  auto* report = app.add_subcommand("report", "full pipeline report");
  std::string input, inline_edges, format = "json", annd_def = "instance";
  ReportOptions opts;
  report->add_option("file", input, "edge list file (optionally gzip)");
  report->add_option("--edges", inline_edges, "inline edge list, comma-separated pairs");
  bool as_json = false, as_csv = false, as_md = false;
  report->add_flag("--json", as_json, "JSON output (default)");
  report->add_flag("--csv", as_csv, "CSV output");
  report->add_flag("--md", as_md, "markdown tables");
  report->add_option("--seed", opts.seed, "RNG seed for sampled estimates");
  report->add_option("--diam-sources", opts.diameter_sources, "BFS source budget");
  report->add_flag("--skip-4clique", opts.skip_fourclique, "skip the 4-clique pass");
  report->add_flag("--skip-diameter", opts.skip_diameter, "skip effective diameter");
  report->add_flag("--force", opts.force_large, "run full passes above the edge cap");
  report->add_option("--annd-def", annd_def, "headline ANND definition")
      ->check(CLI::IsMember({"vertex", "instance"}));

  auto* compare = app.add_subcommand("compare", "CCDF triple for figure reproduction");
  std::string cinput, out_prefix;
  compare->add_option("file", cinput, "edge list file")->required();
  compare->add_option("--out", out_prefix, "output file prefix");

  CLI11_PARSE(app, argc, argv);

  if (fetch->parsed()) return cmd_fetch(url, dest, expect_sha);
  if (report->parsed()) {
    if (input.empty() && inline_edges.empty()) {
      std::cerr << "error: provide an input file or --edges\n";
      return 4;
    }
    opts.annd_def = annd_def == "vertex" ? AnndDef::Vertex : AnndDef::Instance;
    if (as_csv) format = "csv";
    else if (as_md) format = "md";
    else format = "json";
    return cmd_report(input, inline_edges, opts, format);
  }
  if (compare->parsed()) return cmd_compare(cinput, out_prefix);
  return 0;
}
