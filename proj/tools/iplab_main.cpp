#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "iplab/arc_diagram.hpp"
#include "iplab/extract2.hpp"
#include "iplab/extractk.hpp"
#include "iplab/extremal.hpp"
#include "iplab/io.hpp"
#include "iplab/noncross.hpp"
#include "iplab/oracle.hpp"
#include "iplab/ordered_graph.hpp"

namespace {

constexpr const char* kToolVersion = "iplab 0.1.0";

constexpr int kExitValidation = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitFormat = 4;

bool timings_enabled() {
  const char* v = std::getenv("IPLAB_TIMINGS");
  return v != nullptr && std::string(v) == "1";
}

std::int64_t resolve_budget(std::optional<std::int64_t> flag) {
  if (flag.has_value()) return *flag;
  if (const char* env = std::getenv("IPLAB_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) {
      throw std::invalid_argument("IPLAB_BUDGET must be a positive integer");
    }
    return v;
  }
  return iplab::kDefaultOracleBudget;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
  if (!out) throw std::invalid_argument("write failed for " + path);
}

iplab::RunManifest base_manifest(const std::string& command) {
  iplab::RunManifest m;
  m.command = command;
  m.tool_version = kToolVersion;
  if (timings_enabled()) m.params["timings"] = "1";
  return m;
}

void emit(const std::string& json_text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << json_text;
  } else {
    write_file(out_path, json_text);
  }
}

struct GenArgs {
  int p = 0;
  int k = 0;
  int n = 0;
  int chords = 0;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string prefix;
};

void run_gen_instance(const iplab::LabeledInstance& inst,
                      iplab::RunManifest m, const GenArgs& args,
                      const std::string& default_prefix) {
  namespace fs = std::filesystem;
  std::string prefix = args.prefix.empty() ? default_prefix : args.prefix;
  fs::create_directories(args.out_dir);
  std::string og_path = (fs::path(args.out_dir) / (prefix + ".og")).string();
  std::string ogc_path = (fs::path(args.out_dir) / (prefix + ".ogc")).string();
  std::string json_path = (fs::path(args.out_dir) / (prefix + ".json")).string();
  m.outputs = {og_path, ogc_path, json_path};

  std::ostringstream og;
  iplab::write_og(og, inst.graph);
  write_file(og_path, og.str());

  std::ostringstream ogc;
  iplab::write_ogc(ogc, inst.graph, inst.certificate);
  write_file(ogc_path, ogc.str());

  int bound = iplab::ip_upper_bound(inst.family, inst.k, inst.p);
  write_file(json_path, iplab::instance_manifest_to_json(inst, bound, m));
  std::cout << json_path << "\n";
}

int run_check(const std::string& og_path, const std::string& ogc_path,
              std::optional<int> want_k, const std::string& out_path) {
  iplab::RunManifest m = base_manifest("check");
  m.inputs.push_back(og_path);
  if (!ogc_path.empty()) m.inputs.push_back(ogc_path);
  if (want_k.has_value()) m.params["k"] = std::to_string(*want_k);
  if (!out_path.empty()) m.outputs.push_back(out_path);

  iplab::OrderedGraph g = iplab::read_og_file(og_path);
  iplab::CheckReport report;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.ham = g.has_increasing_ham_path();
  report.passed = report.ham;
  if (!report.ham) {
    std::cerr << "no increasing Hamiltonian path\n";
  }

  if (!ogc_path.empty()) {
    iplab::EdgeColoring c = iplab::read_ogc_file(ogc_path, g);
    report.k = c.k;
    int bad = 0;
    auto crossing = iplab::first_class_crossing(g, c, &bad);
    report.classes_ok = !crossing.has_value();
    if (crossing.has_value()) {
      report.bad_class = bad;
      report.crossing = {crossing->first, crossing->second};
      std::cerr << "class " << bad << " has a crossing: (" << crossing->first.first
                << "," << crossing->first.second << ") x (" << crossing->second.first
                << "," << crossing->second.second << ")\n";
      report.passed = false;
    }
    if (want_k.has_value() && c.k > *want_k) {
      std::cerr << "certificate uses " << c.k << " classes, limit " << *want_k << "\n";
      report.passed = false;
    }
  }

  emit(iplab::check_report_to_json(report, m), out_path);
  return report.passed ? 0 : kExitValidation;
}

int run_extract(const std::string& mode, const std::string& og_path,
                const std::string& ogc_path, std::optional<int> k_flag,
                int genus, const std::string& out_path) {
  iplab::RunManifest m = base_manifest("extract " + mode);
  m.inputs.push_back(og_path);
  if (!ogc_path.empty()) m.inputs.push_back(ogc_path);
  if (k_flag.has_value()) m.params["k"] = std::to_string(*k_flag);
  if (mode == "genus") m.params["genus"] = std::to_string(genus);
  if (!out_path.empty()) m.outputs.push_back(out_path);

  iplab::OrderedGraph g = iplab::read_og_file(og_path);
  iplab::PathReport report;
  iplab::SurroundingAudit audit;
  bool has_audit = false;

  if (mode == "planar") {
    report = iplab::extract_planar(g);
  } else if (mode == "knc") {
    if (ogc_path.empty()) throw std::invalid_argument("knc extraction needs --colors");
    iplab::EdgeColoring c = iplab::read_ogc_file(ogc_path, g);
    int k = k_flag.value_or(c.k);
    report = iplab::extract_knc(g, c, k, &audit);
    has_audit = true;
  } else {
    report = iplab::extract_genus(g, genus);
  }

  if (!iplab::verify_induced_increasing(g, report.path)) {
    std::cerr << "extracted path failed verification\n";
    return kExitValidation;
  }
  emit(iplab::path_report_to_json(report, m, has_audit ? &audit : nullptr), out_path);
  return 0;
}

int run_oracle(const std::string& og_path, bool increasing,
               std::optional<std::int64_t> budget_flag, const std::string& out_path) {
  std::int64_t budget = resolve_budget(budget_flag);
  iplab::RunManifest m = base_manifest("oracle");
  m.inputs.push_back(og_path);
  m.params["budget"] = std::to_string(budget);
  m.params["increasing"] = increasing ? "1" : "0";
  if (!out_path.empty()) m.outputs.push_back(out_path);

  iplab::OrderedGraph g = iplab::read_og_file(og_path);
  iplab::OracleResult res = increasing
                                ? iplab::longest_increasing_induced_path(g, budget)
                                : iplab::longest_induced_path(g, budget);
  emit(iplab::oracle_result_to_json(res, m, timings_enabled()), out_path);
  return 0;
}

int run_export_arcs(const std::string& og_path, const std::string& ogc_path,
                    const std::string& out_path) {
  iplab::OrderedGraph g = iplab::read_og_file(og_path);
  if (ogc_path.empty()) {
    write_file(out_path, iplab::arc_diagram_svg(g));
  } else {
    iplab::EdgeColoring c = iplab::read_ogc_file(ogc_path, g);
    write_file(out_path, iplab::arc_diagram_svg(g, &c));
  }
  std::cout << out_path << "\n";
  return 0;
}

struct BenchRow {
  std::string family;
  int k = 0;
  int p = 0;
  int n = 0;
  int m = 0;
  std::string mode;
  int length = 0;
  std::int64_t guarantee = 0;
  std::optional<int> oracle_len;
  std::optional<bool> oracle_optimal;
  std::string status = "ok";
  double time_ms = 0.0;
};

BenchRow bench_one(const iplab::LabeledInstance& inst, const std::string& mode,
                   int oracle_max_n, std::int64_t budget) {
  BenchRow row;
  row.family = inst.family == iplab::Family::kU ? "U" : "G";
  row.k = inst.k;
  row.p = inst.p;
  row.n = inst.graph.vertex_count();
  row.m = inst.graph.edge_count();
  row.mode = mode;

  auto t0 = std::chrono::steady_clock::now();
  iplab::PathReport report;
  if (mode == "planar") {
    report = iplab::extract_planar(inst.graph);
  } else if (mode == "2nc") {
    report = iplab::extract_2nc(inst.graph, inst.certificate);
  } else if (mode == "knc") {
    report = iplab::extract_knc(inst.graph, inst.certificate, inst.certificate.k);
  } else {
    report = iplab::extract_genus(inst.graph, 1);
  }
  auto t1 = std::chrono::steady_clock::now();
  row.length = report.path.size();
  row.guarantee = report.guarantee;
  if (timings_enabled()) {
    row.time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  }

  if (row.n <= oracle_max_n) {
    iplab::OracleResult res = iplab::longest_increasing_induced_path(inst.graph, budget);
    row.oracle_len = res.best.size();
    row.oracle_optimal = res.optimal;
    if (!res.optimal) row.status = "oracle-budget";
  }
  return row;
}

int run_bench(const std::string& mode, int max_p, std::int64_t max_n,
              int oracle_max_n, std::optional<std::int64_t> budget_flag,
              const std::string& csv_path, const std::string& json_path) {
  std::int64_t budget = resolve_budget(budget_flag);
  iplab::RunManifest m = base_manifest("bench extractors " + mode);
  m.params["max_p"] = std::to_string(max_p);
  m.params["max_n"] = std::to_string(max_n);
  m.params["oracle_max_n"] = std::to_string(oracle_max_n);
  m.params["budget"] = std::to_string(budget);
  if (!csv_path.empty()) m.outputs.push_back(csv_path);
  if (!json_path.empty()) m.outputs.push_back(json_path);

  std::vector<BenchRow> rows;
  if (mode == "knc") {
    for (int k = 1; k <= 2; ++k) {
      for (int p = 0; p <= max_p; ++p) {
        if (iplab::expected_size(k, p) > max_n) continue;
        rows.push_back(bench_one(iplab::build_g(k, p), mode, oracle_max_n, budget));
      }
    }
  } else {
    int min_p = mode == "planar" ? 1 : (mode == "2nc" ? 3 : 2);
    for (int p = min_p; p <= max_p; ++p) {
      std::int64_t n = (std::int64_t{1} << p) + 1;
      if (n > max_n) break;
      rows.push_back(bench_one(iplab::build_u(p), mode, oracle_max_n, budget));
    }
  }

  std::ostringstream csv;
  csv << "family,k,p,n,m,mode,length,guarantee,oracle,oracle_optimal,status,time_ms\n";
  for (const auto& r : rows) {
    csv << r.family << ',' << r.k << ',' << r.p << ',' << r.n << ',' << r.m << ','
        << r.mode << ',' << r.length << ',' << r.guarantee << ',';
    if (r.oracle_len.has_value()) csv << *r.oracle_len;
    csv << ',';
    if (r.oracle_optimal.has_value()) csv << (*r.oracle_optimal ? "true" : "false");
    csv << ',' << r.status << ',';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.time_ms);
    csv << buf << '\n';
  }

  nlohmann::ordered_json j;
  j["type"] = "bench";
  j["mode"] = mode;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["family"] = r.family;
    row["k"] = r.k;
    row["p"] = r.p;
    row["n"] = r.n;
    row["m"] = r.m;
    row["mode"] = r.mode;
    row["length"] = r.length;
    row["guarantee"] = r.guarantee;
    row["oracle"] = r.oracle_len.has_value()
                        ? nlohmann::ordered_json(*r.oracle_len)
                        : nlohmann::ordered_json(nullptr);
    row["oracle_optimal"] = r.oracle_optimal.has_value()
                                ? nlohmann::ordered_json(*r.oracle_optimal)
                                : nlohmann::ordered_json(nullptr);
    row["status"] = r.status;
    row["time_ms"] = r.time_ms;
    j["rows"].push_back(std::move(row));
  }
  {
    nlohmann::ordered_json mf;
    mf["command"] = m.command;
    mf["inputs"] = m.inputs;
    mf["params"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : m.params) mf["params"][key] = value;
    mf["seed"] = m.seed;
    mf["tool_version"] = m.tool_version;
    mf["outputs"] = m.outputs;
    j["manifest"] = std::move(mf);
  }

  if (csv_path.empty() && json_path.empty()) {
    std::cout << csv.str();
  } else {
    if (!csv_path.empty()) write_file(csv_path, csv.str());
    if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered-graph induced-path laboratory"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate benchmark instances");
  gen->require_subcommand(1);
  GenArgs ga;

  auto* gen_up = gen->add_subcommand("up", "Doubling family member");
  gen_up->add_option("p", ga.p, "level")->required();
  gen_up->add_option("--out", ga.out_dir, "output directory")->required();
  gen_up->add_option("--prefix", ga.prefix, "file name prefix");

  auto* gen_gkp = gen->add_subcommand("gkp", "Two-parameter family member");
  gen_gkp->add_option("k", ga.k, "first parameter")->required();
  gen_gkp->add_option("p", ga.p, "second parameter")->required();
  gen_gkp->add_option("--out", ga.out_dir, "output directory")->required();
  gen_gkp->add_option("--prefix", ga.prefix, "file name prefix");

  auto* gen_rand = gen->add_subcommand("rand", "Seeded random two-class instance");
  gen_rand->add_option("n", ga.n, "vertex count")->required();
  gen_rand->add_option("chords", ga.chords, "chord attempts")->required();
  gen_rand->add_option("--seed", ga.seed, "random seed");
  gen_rand->add_option("--out", ga.out_dir, "output directory")->required();
  gen_rand->add_option("--prefix", ga.prefix, "file name prefix");

  // check
  std::string file;
  std::string colors;
  std::string out_path;
  std::optional<int> k_flag;
  auto* check = app.add_subcommand("check", "Validate a graph and its certificate");
  check->add_option("file", file, "graph file (.og)")->required();
  check->add_option("--colors", colors, "coloring file (.ogc)");
  check->add_option("--k", k_flag, "maximum permitted class count");
  check->add_option("--out", out_path, "report path (default stdout)");

  // extract
  auto* extract = app.add_subcommand("extract", "Run a path extractor");
  extract->require_subcommand(1);
  int genus = 0;
  auto* ex_planar = extract->add_subcommand("planar", "Shrink-loop extraction");
  ex_planar->add_option("file", file, "graph file (.og)")->required();
  ex_planar->add_option("--out", out_path, "report path (default stdout)");
  auto* ex_knc = extract->add_subcommand("knc", "Tree-surrounding extraction");
  ex_knc->add_option("file", file, "graph file (.og)")->required();
  ex_knc->add_option("--colors", colors, "coloring file (.ogc)")->required();
  ex_knc->add_option("--k", k_flag, "class count (default: from the coloring)");
  ex_knc->add_option("--out", out_path, "report path (default stdout)");
  auto* ex_genus = extract->add_subcommand("genus", "Split-and-recurse extraction");
  ex_genus->add_option("file", file, "graph file (.og)")->required();
  ex_genus->add_option("--genus", genus, "interval splits minus one")->required();
  ex_genus->add_option("--out", out_path, "report path (default stdout)");

  // oracle
  bool increasing = false;
  std::optional<std::int64_t> budget_flag;
  auto* oracle = app.add_subcommand("oracle", "Exact longest induced path");
  oracle->add_option("file", file, "graph file (.og)")->required();
  oracle->add_flag("--increasing", increasing, "restrict to increasing paths");
  oracle->add_option("--budget", budget_flag, "node expansion limit");
  oracle->add_option("--out", out_path, "report path (default stdout)");

  // export-arcs
  std::string svg_path;
  auto* arcs = app.add_subcommand("export-arcs", "Render an arc diagram");
  arcs->add_option("file", file, "graph file (.og)")->required();
  arcs->add_option("--colors", colors, "coloring file (.ogc)");
  arcs->add_option("--out", svg_path, "SVG output path")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Sweep extractor benchmarks");
  bench->require_subcommand(1);
  auto* bench_ex = bench->add_subcommand("extractors", "Family grid sweep");
  std::string bench_mode;
  int max_p = 10;
  std::int64_t max_n = (std::int64_t{1} << 20) + 1;
  int oracle_max_n = 18;
  std::string csv_path;
  std::string json_path;
  bench_ex->add_option("mode", bench_mode, "planar | 2nc | knc | genus")
      ->required()
      ->check(CLI::IsMember({"planar", "2nc", "knc", "genus"}));
  bench_ex->add_option("--max-p", max_p, "largest family level");
  bench_ex->add_option("--max-n", max_n, "largest instance size");
  bench_ex->add_option("--oracle-max-n", oracle_max_n,
                       "run the oracle on instances up to this size");
  bench_ex->add_option("--budget", budget_flag, "oracle node expansion limit");
  bench_ex->add_option("--out-csv", csv_path, "CSV output path");
  bench_ex->add_option("--out-json", json_path, "JSON output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_up->parsed()) {
      iplab::RunManifest m = base_manifest("gen up");
      m.params["p"] = std::to_string(ga.p);
      run_gen_instance(iplab::build_u(ga.p), std::move(m), ga,
                       "u" + std::to_string(ga.p));
      return 0;
    }
    if (gen_gkp->parsed()) {
      iplab::RunManifest m = base_manifest("gen gkp");
      m.params["k"] = std::to_string(ga.k);
      m.params["p"] = std::to_string(ga.p);
      run_gen_instance(iplab::build_g(ga.k, ga.p), std::move(m), ga,
                       "g" + std::to_string(ga.k) + "_" + std::to_string(ga.p));
      return 0;
    }
    if (gen_rand->parsed()) {
      iplab::RunManifest m = base_manifest("gen rand");
      m.params["n"] = std::to_string(ga.n);
      m.params["chords"] = std::to_string(ga.chords);
      m.seed = ga.seed;
      auto [g, c] = iplab::random_two_nc(ga.n, ga.chords, ga.seed);
      namespace fs = std::filesystem;
      std::string prefix = ga.prefix.empty()
                               ? "rand" + std::to_string(ga.n) + "_s" +
                                     std::to_string(ga.seed)
                               : ga.prefix;
      fs::create_directories(ga.out_dir);
      std::string og_path = (fs::path(ga.out_dir) / (prefix + ".og")).string();
      std::string ogc_path = (fs::path(ga.out_dir) / (prefix + ".ogc")).string();
      std::string mf_path = (fs::path(ga.out_dir) / (prefix + ".json")).string();
      m.outputs = {og_path, ogc_path, mf_path};
      std::ostringstream og_text;
      iplab::write_og(og_text, g);
      write_file(og_path, og_text.str());
      std::ostringstream ogc_text;
      iplab::write_ogc(ogc_text, g, c);
      write_file(ogc_path, ogc_text.str());
      write_file(mf_path, iplab::manifest_to_json(m));
      std::cout << mf_path << "\n";
      return 0;
    }
    if (check->parsed()) return run_check(file, colors, k_flag, out_path);
    if (ex_planar->parsed()) {
      return run_extract("planar", file, colors, k_flag, genus, out_path);
    }
    if (ex_knc->parsed()) {
      return run_extract("knc", file, colors, k_flag, genus, out_path);
    }
    if (ex_genus->parsed()) {
      return run_extract("genus", file, colors, k_flag, genus, out_path);
    }
    if (oracle->parsed()) {
      return run_oracle(file, increasing, budget_flag, out_path);
    }
    if (arcs->parsed()) return run_export_arcs(file, colors, svg_path);
    if (bench_ex->parsed()) {
      return run_bench(bench_mode, max_p, max_n, oracle_max_n, budget_flag,
                       csv_path, json_path);
    }
  } catch (const iplab::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const iplab::AllIntervalsFailed& e) {
    std::cerr << "extraction failed: " << e.what() << "\n";
    for (const auto& r : e.reasons) std::cerr << "  " << r << "\n";
    return kExitDegenerate;
  } catch (const iplab::DegenerateSurrounding& e) {
    std::cerr << "extraction degenerate: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
