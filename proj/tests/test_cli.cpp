#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

const std::string& binary() {
  static std::string path = [] {
    const char* env = std::getenv("IPLAB_BIN");
    REQUIRE_MESSAGE(env != nullptr, "IPLAB_BIN must point at the CLI binary");
    return std::string(env);
  }();
  return path;
}

const std::string& scratch() {
  static std::string dir = [] {
    fs::path d = fs::temp_directory_path() / "iplab_cli_scratch";
    fs::remove_all(d);
    fs::create_directories(d);
    return d.string();
  }();
  return dir;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  ++counter;
  std::string out_path = scratch() + "/stdout_" + std::to_string(counter);
  std::string err_path = scratch() + "/stderr_" + std::to_string(counter);
  std::string cmd = (env.empty() ? "" : env + " ") + "\"" + binary() + "\" " +
                    args + " >" + out_path + " 2>" + err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -2;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

// Spine plus two five-cliques whose widest chords dominate both halves.
std::string tangled_og() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < 34; ++v) edges.emplace_back(v, v + 1);
  auto clique = [&edges](std::vector<int> vs) {
    for (size_t i = 0; i < vs.size(); ++i) {
      for (size_t j = i + 1; j < vs.size(); ++j) edges.emplace_back(vs[i], vs[j]);
    }
  };
  clique({4, 7, 9, 11, 13});
  clique({21, 24, 26, 28, 30});
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "og 34 " << edges.size() << "\n";
  for (auto [u, v] : edges) out << u << ' ' << v << "\n";
  return out.str();
}

}  // namespace

TEST_CASE("gen up writes the doubling instance files") {
  std::string dir = scratch() + "/up2";
  auto r = run_cli("gen up 2 --out " + dir);
  CHECK(r.code == 0);
  CHECK(r.out == dir + "/u2.json\n");
  CHECK(slurp(dir + "/u2.og") ==
        "og 5 7\n1 2\n1 3\n1 5\n2 3\n3 4\n3 5\n4 5\n");
  auto ogc = slurp(dir + "/u2.ogc");
  CHECK(ogc.substr(0, 10) == "ogc 5 7 1\n");
  auto json = slurp(dir + "/u2.json");
  CHECK(json.find("\"family\": \"U\"") != std::string::npos);
  CHECK(json.find("\"upper_bound\": 6") != std::string::npos);
}

TEST_CASE("check validates certificates and class budgets") {
  std::string dir = scratch() + "/gk";
  auto gen = run_cli("gen gkp 1 1 --out " + dir);
  REQUIRE(gen.code == 0);

  auto ok = run_cli("check " + dir + "/g1_1.og --colors " + dir +
                    "/g1_1.ogc --k 3");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"passed\": true") != std::string::npos);

  auto tight = run_cli("check " + dir + "/g1_1.og --colors " + dir +
                       "/g1_1.ogc --k 2");
  CHECK(tight.code == 2);
  CHECK(tight.err.find("limit 2") != std::string::npos);
}

TEST_CASE("check flags crossings and missing spines") {
  std::string cross_path = scratch() + "/cross.og";
  write_text(cross_path, "og 4 5\n1 2\n1 3\n2 3\n2 4\n3 4\n");
  std::string cross_colors = scratch() + "/cross.ogc";
  write_text(cross_colors, "ogc 4 5 1\n1 2 1\n1 3 1\n2 3 1\n2 4 1\n3 4 1\n");
  auto crossed = run_cli("check " + cross_path + " --colors " + cross_colors);
  CHECK(crossed.code == 2);
  CHECK(crossed.err.find("class 1 has a crossing") != std::string::npos);
  CHECK(crossed.out.find("\"passed\": false") != std::string::npos);

  std::string sparse_path = scratch() + "/sparse.og";
  write_text(sparse_path, "og 3 1\n1 3\n");
  auto sparse = run_cli("check " + sparse_path);
  CHECK(sparse.code == 2);
  CHECK(sparse.err.find("no increasing Hamiltonian path") != std::string::npos);
}

TEST_CASE("format problems exit with the format code") {
  std::string bad_path = scratch() + "/bad.og";
  write_text(bad_path, "og 3 2\n1 2\n");
  CHECK(run_cli("check " + bad_path).code == 4);
  CHECK(run_cli("check " + scratch() + "/no-such-file.og").code == 4);
  CHECK(run_cli("").code != 0);
}

TEST_CASE("extract planar reports the lifted walk") {
  std::string dir = scratch() + "/up2";  // generated above
  std::string report = scratch() + "/planar.json";
  auto r = run_cli("extract planar " + dir + "/u2.og --out " + report);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  auto json = slurp(report);
  CHECK(json.find("\"type\": \"path_report\"") != std::string::npos);
  CHECK(json.find("\"method\": \"lifting\"") != std::string::npos);
  CHECK(json.find("\"length\": 2") != std::string::npos);
}

TEST_CASE("extract knc emits the surrounding trace") {
  std::string dir = scratch() + "/up2";
  auto r = run_cli("extract knc " + dir + "/u2.og --colors " + dir + "/u2.ogc");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"surrounding_trace\"") != std::string::npos);
  CHECK(r.out.find("\"method\": \"gap-shortcut\"") != std::string::npos);
  CHECK(r.out.find("\"guarantee\": 2") != std::string::npos);
}

TEST_CASE("extract genus surfaces untangleable inputs") {
  std::string path = scratch() + "/tangled.og";
  write_text(path, tangled_og());
  auto r = run_cli("extract genus " + path + " --genus 1");
  CHECK(r.code == 3);
  CHECK(r.err.find("interval [1,17] is not two-class splittable") !=
        std::string::npos);
  CHECK(r.err.find("interval [18,34] is not two-class splittable") !=
        std::string::npos);

  auto wide = run_cli("extract genus " + path + " --genus 3");
  CHECK(wide.code == 0);
}

TEST_CASE("oracle respects flags and the budget environment") {
  std::string dir = scratch() + "/up2";
  auto inc = run_cli("oracle " + dir + "/u2.og --increasing");
  CHECK(inc.code == 0);
  CHECK(inc.out.find("\"length\": 3") != std::string::npos);
  CHECK(inc.out.find("\"optimal\": true") != std::string::npos);

  auto full = run_cli("oracle " + dir + "/u2.og");
  CHECK(full.code == 0);
  CHECK(full.out.find("\"length\": 4") != std::string::npos);

  auto capped = run_cli("oracle " + dir + "/u2.og", "IPLAB_BUDGET=1");
  CHECK(capped.code == 0);
  CHECK(capped.out.find("\"optimal\": false") != std::string::npos);
  CHECK(capped.out.find("\"budget\": \"1\"") != std::string::npos);

  CHECK(run_cli("oracle " + dir + "/u2.og", "IPLAB_BUDGET=abc").code == 2);

  auto timed = run_cli("oracle " + dir + "/u2.og", "IPLAB_TIMINGS=1");
  CHECK(timed.code == 0);
  CHECK(timed.out.find("\"timings\": \"1\"") != std::string::npos);
}

TEST_CASE("export-arcs renders stable svg") {
  std::string dir = scratch() + "/up2";
  std::string svg1 = scratch() + "/u2a.svg";
  std::string svg2 = scratch() + "/u2b.svg";
  auto r1 = run_cli("export-arcs " + dir + "/u2.og --colors " + dir +
                    "/u2.ogc --out " + svg1);
  auto r2 = run_cli("export-arcs " + dir + "/u2.og --colors " + dir +
                    "/u2.ogc --out " + svg2);
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  auto body = slurp(svg1);
  CHECK(body.substr(0, 4) == "<svg");
  CHECK(body == slurp(svg2));
  CHECK(run_cli("export-arcs " + dir + "/u2.og").code != 0);
}

TEST_CASE("reruns are byte identical") {
  std::string d1 = scratch() + "/r1";
  std::string d2 = scratch() + "/r2";
  auto g1 = run_cli("gen rand 18 40 --seed 9 --out " + d1 + " --prefix r");
  auto g2 = run_cli("gen rand 18 40 --seed 9 --out " + d2 + " --prefix r");
  REQUIRE(g1.code == 0);
  REQUIRE(g2.code == 0);
  CHECK(slurp(d1 + "/r.og") == slurp(d2 + "/r.og"));
  CHECK(slurp(d1 + "/r.ogc") == slurp(d2 + "/r.ogc"));
  CHECK_FALSE(slurp(d1 + "/r.og").empty());

  auto h1 = run_cli("gen rand 18 40 --seed 10 --out " + d1 + " --prefix q");
  REQUIRE(h1.code == 0);
  CHECK(slurp(d1 + "/q.og") != slurp(d1 + "/r.og"));

  std::string up = scratch() + "/up2";
  std::string ex1 = scratch() + "/knc1.json";
  std::string ex2 = scratch() + "/knc2.json";
  run_cli("extract knc " + up + "/u2.og --colors " + up + "/u2.ogc --out " + ex1);
  run_cli("extract knc " + up + "/u2.og --colors " + up + "/u2.ogc --out " + ex2);
  auto knc = slurp(ex1);
  CHECK_FALSE(knc.empty());
  // The manifest embeds only the declared output path, which differs; compare
  // everything before it.
  CHECK(knc.substr(0, knc.find("\"outputs\"")) ==
        slurp(ex2).substr(0, slurp(ex2).find("\"outputs\"")));

  std::string c1 = scratch() + "/b1.csv";
  std::string c2 = scratch() + "/b2.csv";
  auto b1 = run_cli("bench extractors 2nc --max-p 4 --out-csv " + c1);
  auto b2 = run_cli("bench extractors 2nc --max-p 4 --out-csv " + c2);
  CHECK(b1.code == 0);
  CHECK(b2.code == 0);
  auto csv = slurp(c1);
  CHECK(csv == slurp(c2));
  CHECK(csv.find("family,k,p,n,m,mode,length,guarantee,oracle,oracle_optimal,"
                 "status,time_ms") == 0);
  CHECK(csv.find("U,0,3,9,15,2nc,") != std::string::npos);
}
