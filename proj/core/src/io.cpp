#include "iplab/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace iplab {

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string content_of(const std::string& raw) {
  std::string s = raw;
  if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Pulls the next content line; false at end of stream.
bool next_content(std::istream& in, int& line_no, std::string& out) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    out = content_of(raw);
    if (!out.empty()) return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& s, int line_no, size_t count,
                                  const std::string& what) {
  std::istringstream iss(s);
  std::vector<long long> vals;
  long long v = 0;
  while (iss >> v) vals.push_back(v);
  if (!iss.eof()) throw FormatError(line_no, "unreadable token in " + what);
  if (vals.size() != count) {
    throw FormatError(line_no, what + " needs " + std::to_string(count) +
                                   " fields, found " + std::to_string(vals.size()));
  }
  return vals;
}

nlohmann::ordered_json manifest_fields(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["inputs"] = m.inputs;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : m.params) j["params"][key] = value;
  j["seed"] = m.seed;
  j["tool_version"] = m.tool_version;
  j["outputs"] = m.outputs;
  return j;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

OrderedGraph read_og(std::istream& in) {
  int line_no = 0;
  std::string line;
  if (!next_content(in, line_no, line)) {
    throw FormatError(line_no + 1, "missing og header");
  }
  std::istringstream header(line);
  std::string tag;
  header >> tag;
  if (tag != "og") throw FormatError(line_no, "expected `og <n> <m>` header");
  auto counts = parse_ints(line.substr(2), line_no, 2, "og header");
  long long n = counts[0];
  long long m = counts[1];
  if (n < 0 || n > (1LL << 30)) throw FormatError(line_no, "vertex count out of range");
  if (m < 0) throw FormatError(line_no, "negative edge count");

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  std::set<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    if (!next_content(in, line_no, line)) {
      throw FormatError(line_no + 1, "expected " + std::to_string(m) +
                                         " edge lines, found " + std::to_string(i));
    }
    auto uv = parse_ints(line, line_no, 2, "edge line");
    long long u = uv[0];
    long long v = uv[1];
    if (u < 1 || v > n || u >= v) {
      throw FormatError(line_no, "edge endpoints must satisfy 1 <= u < v <= n");
    }
    Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(e).second) throw FormatError(line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (next_content(in, line_no, line)) {
    throw FormatError(line_no, "content after the declared edge list");
  }
  return OrderedGraph(static_cast<int>(n), std::move(edges));
}

OrderedGraph read_og_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(0, "cannot open " + path);
  return read_og(in);
}

void write_og(std::ostream& out, const OrderedGraph& g) {
  out << "og " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

EdgeColoring read_ogc(std::istream& in, const OrderedGraph& g) {
  int line_no = 0;
  std::string line;
  if (!next_content(in, line_no, line)) {
    throw FormatError(line_no + 1, "missing ogc header");
  }
  std::istringstream header(line);
  std::string tag;
  header >> tag;
  if (tag != "ogc") throw FormatError(line_no, "expected `ogc <n> <m> <k>` header");
  auto counts = parse_ints(line.substr(3), line_no, 3, "ogc header");
  if (counts[0] != g.vertex_count()) {
    throw FormatError(line_no, "vertex count does not match the graph");
  }
  if (counts[1] != g.edge_count()) {
    throw FormatError(line_no, "edge count does not match the graph");
  }
  long long k = counts[2];
  if (k < 1 || k > 1'000'000) throw FormatError(line_no, "class count out of range");

  EdgeColoring c;
  c.k = static_cast<int>(k);
  c.color.assign(static_cast<size_t>(g.edge_count()), 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!next_content(in, line_no, line)) {
      throw FormatError(line_no + 1, "expected " + std::to_string(g.edge_count()) +
                                         " colored edge lines, found " +
                                         std::to_string(i));
    }
    auto uvc = parse_ints(line, line_no, 3, "colored edge line");
    long long u = uvc[0];
    long long v = uvc[1];
    long long col = uvc[2];
    if (u < 1 || v > g.vertex_count() || u >= v) {
      throw FormatError(line_no, "edge endpoints must satisfy 1 <= u < v <= n");
    }
    if (col < 1 || col > k) throw FormatError(line_no, "class outside [1, k]");
    int idx = g.edge_index(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (idx < 0) throw FormatError(line_no, "edge not present in the graph");
    if (c.color[static_cast<size_t>(idx)] != 0) {
      throw FormatError(line_no, "edge colored twice");
    }
    c.color[static_cast<size_t>(idx)] = static_cast<int>(col);
  }
  if (next_content(in, line_no, line)) {
    throw FormatError(line_no, "content after the declared edge list");
  }
  return c;
}

EdgeColoring read_ogc_file(const std::string& path, const OrderedGraph& g) {
  std::ifstream in(path);
  if (!in) throw FormatError(0, "cannot open " + path);
  return read_ogc(in, g);
}

void write_ogc(std::ostream& out, const OrderedGraph& g, const EdgeColoring& c) {
  require(static_cast<int>(c.color.size()) == g.edge_count(),
          "coloring does not cover the edge list");
  require(c.k >= 1, "need k >= 1");
  out << "ogc " << g.vertex_count() << ' ' << g.edge_count() << ' ' << c.k << '\n';
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& [u, v] = g.edges()[static_cast<size_t>(i)];
    out << u << ' ' << v << ' ' << c.color[static_cast<size_t>(i)] << '\n';
  }
}

std::string manifest_to_json(const RunManifest& m) {
  return dump(manifest_fields(m));
}

std::string path_report_to_json(const PathReport& r, const RunManifest& m,
                                const SurroundingAudit* audit) {
  nlohmann::ordered_json j;
  j["type"] = "path_report";
  j["n"] = r.n;
  j["method"] = method_name(r.method);
  j["path"] = r.path.seq;
  j["length"] = r.path.size();
  j["guarantee"] = r.guarantee;
  j["iterations"] = r.iterations;
  j["trace"] = nlohmann::ordered_json::array();
  for (const auto& step : r.trace) {
    nlohmann::ordered_json s;
    s["step"] = step.step;
    s["interval_size"] = step.interval_size;
    s["g"] = step.g;
    s["branch"] = step.branch;
    j["trace"].push_back(std::move(s));
  }
  if (audit != nullptr) {
    j["surrounding_trace"] = nlohmann::ordered_json::array();
    for (const auto& step : audit->steps) {
      nlohmann::ordered_json s;
      s["t"] = step.t;
      s["interval_size"] = step.interval_size;
      s["g"] = step.g;
      s["tree_sizes"] = step.tree_sizes;
      s["branch"] = step.branch;
      j["surrounding_trace"].push_back(std::move(s));
    }
  }
  j["manifest"] = manifest_fields(m);
  return dump(j);
}

std::string oracle_result_to_json(const OracleResult& r, const RunManifest& m,
                                  bool with_timings) {
  nlohmann::ordered_json j;
  j["type"] = "oracle_result";
  j["length"] = r.best.size();
  j["path"] = r.best.seq;
  j["optimal"] = r.optimal;
  j["nodes_expanded"] = r.nodes_expanded;
  j["time_ms"] = with_timings ? r.time_ms : 0.0;
  j["manifest"] = manifest_fields(m);
  return dump(j);
}

std::string instance_manifest_to_json(const LabeledInstance& inst,
                                      int upper_bound, const RunManifest& m) {
  nlohmann::ordered_json j;
  j["type"] = "instance";
  j["family"] = inst.family == Family::kU ? "U" : "G";
  j["k"] = inst.k;
  j["p"] = inst.p;
  j["n"] = inst.graph.vertex_count();
  j["m"] = inst.graph.edge_count();
  j["upper_bound"] = upper_bound;
  j["x_set"] = inst.x_set;
  j["manifest"] = manifest_fields(m);
  return dump(j);
}

std::string check_report_to_json(const CheckReport& r, const RunManifest& m) {
  nlohmann::ordered_json j;
  j["type"] = "check_report";
  j["n"] = r.n;
  j["m"] = r.m;
  j["ham"] = r.ham;
  j["k"] = r.k;
  j["classes_ok"] = r.classes_ok;
  j["bad_class"] = r.bad_class;
  j["crossing"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : r.crossing) {
    j["crossing"].push_back(nlohmann::ordered_json::array({u, v}));
  }
  j["passed"] = r.passed;
  j["manifest"] = manifest_fields(m);
  return dump(j);
}

}  // namespace iplab
