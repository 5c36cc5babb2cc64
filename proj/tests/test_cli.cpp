#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "egostat/hash.hpp"

namespace fs = std::filesystem;

namespace {

std::string egostat_bin() {
  const char* p = std::getenv("EGOSTAT_BIN");
  REQUIRE_MESSAGE(p != nullptr, "EGOSTAT_BIN must point at the CLI binary");
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = egostat_bin() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path temp_file(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p, std::ios::trunc) << content;
  return p;
}

constexpr const char* kK4Edges = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

}  // namespace

TEST_CASE("report on inline edges emits json") {
  RunResult r = run("report --edges \"0 1,0 2,0 3,1 2,1 3,2 3\"");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["table1"]["n"] == 4);
  CHECK(j["table1"]["m"] == 6);
  CHECK(j["table3"]["c_glo"] == 1.0);
  CHECK(j["provenance"]["input_sha256"].get<std::string>().size() == 64);
}

TEST_CASE("report formats") {
  fs::path p = temp_file("egostat_cli_k4.txt", kK4Edges);
  RunResult csv = run("report " + p.string() + " --csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("key,value\n", 0) == 0);
  RunResult md = run("report " + p.string() + " --md");
  CHECK(md.exit_code == 0);
  CHECK(md.out.find("| n | m |") != std::string::npos);
}

TEST_CASE("report rejects malformed input with exit 4") {
  fs::path p = temp_file("egostat_cli_bad.txt", "0 1\nnot-a-number\n");
  RunResult r = run("report " + p.string());
  CHECK(r.exit_code == 4);

  RunResult missing = run("report /nonexistent/xyz.txt");
  CHECK(missing.exit_code == 4);

  RunResult none = run("report");
  CHECK(none.exit_code == 4);
}

TEST_CASE("compare emits three ccdf series") {
  fs::path p = temp_file("egostat_cli_k4b.txt", kK4Edges);
  RunResult r = run("compare " + p.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("series,value,ccdf\n", 0) == 0);
  CHECK(r.out.find("global,3,1\n") != std::string::npos);
  CHECK(r.out.find("ego,2,1\n") != std::string::npos);
  CHECK(r.out.find("ks_ego_vs_predicted,") != std::string::npos);
  // K4 ego degrees (2) sit below the global degrees (3), so no dominance.
  CHECK(r.out.find("ego_dominates_top_decile,0\n") != std::string::npos);

  fs::path prefix = fs::temp_directory_path() / "egostat_cli_cmp";
  RunResult w = run("compare " + p.string() + " --out " + prefix.string());
  CHECK(w.exit_code == 0);
  for (const char* sfx : {"_global.csv", "_ego.csv", "_predicted.csv"}) {
    fs::path f = prefix;
    f += sfx;
    CHECK_MESSAGE(fs::exists(f), f.string());
    std::ifstream in(f);
    std::string header;
    std::getline(in, header);
    CHECK(header == "value,ccdf");
    fs::remove(f);
  }
}

TEST_CASE("compare on a triangle-free graph exits 5") {
  fs::path p = temp_file("egostat_cli_star.txt", "0 1\n0 2\n0 3\n");
  RunResult r = run("compare " + p.string());
  CHECK(r.exit_code == 5);
}

TEST_CASE("fetch against a local server") {
  egostat_bin();  // fail fast before the server thread exists
  const std::string payload = std::string(kK4Edges) + "# trailing comment\n";
  const std::string digest = egostat::sha256_hex(payload);

  httplib::Server srv;
  srv.Get("/data.txt", [&](const httplib::Request&, httplib::Response& res) {
    res.set_content(payload, "text/plain");
  });
  int port = srv.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread server([&] { srv.listen_after_bind(); });
  srv.wait_until_ready();
  std::string base = "http://127.0.0.1:" + std::to_string(port);

  SUBCASE("verified download succeeds") {
    fs::path dest = fs::temp_directory_path() / "egostat_fetch_ok.txt";
    fs::remove(dest);
    RunResult r = run("fetch " + base + "/data.txt " + dest.string() + " --sha256 " + digest);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find(digest) != std::string::npos);
    REQUIRE(fs::exists(dest));
    std::ifstream in(dest);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == payload);
    fs::remove(dest);
  }

  SUBCASE("hash mismatch exits 3 and leaves nothing behind") {
    fs::path dest = fs::temp_directory_path() / "egostat_fetch_bad.txt";
    fs::remove(dest);
    RunResult r = run("fetch " + base + "/data.txt " + dest.string() + " --sha256 " +
                      std::string(64, '0'));
    CHECK(r.exit_code == 3);
    CHECK(!fs::exists(dest));
    fs::path part = dest;
    part += ".part";
    CHECK(!fs::exists(part));
  }

  SUBCASE("missing resource exits 2") {
    fs::path dest = fs::temp_directory_path() / "egostat_fetch_404.txt";
    RunResult r = run("fetch " + base + "/nope.txt " + dest.string());
    CHECK(r.exit_code == 2);
    CHECK(!fs::exists(dest));
  }

  SUBCASE("relative destinations land in the cache dir") {
    fs::path cache = fs::temp_directory_path() / "egostat_cache_test";
    fs::remove_all(cache);
    std::string cmd = "EGOSTAT_CACHE_DIR=" + cache.string() + " " + egostat_bin() +
                      " fetch " + base + "/data.txt cached.txt >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(fs::exists(cache / "cached.txt"));
    fs::remove_all(cache);
  }

  srv.stop();
  server.join();
}

TEST_CASE("fetch with an unreachable server exits 2") {
  fs::path dest = fs::temp_directory_path() / "egostat_fetch_unreach.txt";
  RunResult r = run("fetch http://127.0.0.1:1/none.txt " + dest.string());
  CHECK(r.exit_code == 2);
  RunResult bad = run("fetch notaurl " + dest.string());
  CHECK(bad.exit_code == 2);
}
