#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "iplab/extract2.hpp"
#include "iplab/extractk.hpp"
#include "iplab/extremal.hpp"
#include "iplab/noncross.hpp"
#include "iplab/oracle.hpp"
#include "iplab/ordered_graph.hpp"

namespace iplab {

// Parse failure; the message carries the 1-based line it happened on.
struct FormatError : std::runtime_error {
  int line;
  FormatError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

// Graph text format: header `og <n> <m>`, then m lines `<u> <v>` with
// 1 <= u < v <= n.  `#` starts a comment anywhere; blank lines are ignored.
// Out-of-range endpoints, duplicates, trailing tokens, or extra content are
// all FormatError.
OrderedGraph read_og(std::istream& in);
OrderedGraph read_og_file(const std::string& path);
void write_og(std::ostream& out, const OrderedGraph& g);

// Coloring text format: header `ogc <n> <m> <k>`, then m lines `<u> <v> <c>`
// with 1 <= c <= k.  Its edge list must be exactly the graph's, in any
// order; mismatches are FormatError.
EdgeColoring read_ogc(std::istream& in, const OrderedGraph& g);
EdgeColoring read_ogc_file(const std::string& path, const OrderedGraph& g);
void write_ogc(std::ostream& out, const OrderedGraph& g, const EdgeColoring& c);

// What produced an output: embedded into every JSON report so that reruns
// with the same manifest can be compared byte for byte.
struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  std::string tool_version;
  std::vector<std::string> outputs;
};

// All serializers emit two-space-indented JSON, keys in fixed order, with a
// trailing newline.
std::string manifest_to_json(const RunManifest& m);

// Optional audit adds a "surrounding_trace" array with per-step tree sizes.
std::string path_report_to_json(const PathReport& r, const RunManifest& m,
                                const SurroundingAudit* audit = nullptr);

// time_ms is written as 0 unless with_timings is set, keeping default output
// reproducible.
std::string oracle_result_to_json(const OracleResult& r, const RunManifest& m,
                                  bool with_timings = false);

std::string instance_manifest_to_json(const LabeledInstance& inst,
                                      int upper_bound, const RunManifest& m);

// Outcome of validating a graph file and (optionally) its coloring.
struct CheckReport {
  int n = 0;
  int m = 0;
  bool ham = false;
  int k = 0;                   // 0 when no coloring was supplied
  bool classes_ok = false;     // meaningful only when k > 0
  int bad_class = 0;           // first class with a crossing; 0 when clean
  std::vector<Edge> crossing;  // the offending pair, empty when clean
  bool passed = false;
};

std::string check_report_to_json(const CheckReport& r, const RunManifest& m);

}  // namespace iplab
