#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lyagraph/checker.hpp"
#include "lyagraph/graph.hpp"
#include "lyagraph/sft.hpp"

namespace lyagraph {

inline constexpr std::int64_t kMaxInputValue = 2147483647;  // 2^31 - 1

enum class SourceFormat { Dsl, Json };

struct SourceLocation {
  std::size_t line = 0;    // 1-based; 0 when unknown
  std::size_t column = 0;  // 1-based; 0 when unknown
  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

struct GraphDocument {
  SourceFormat format = SourceFormat::Dsl;
  LyapunovGraph graph;
  std::vector<SourceLocation> vertex_locations;  // parallel to graph.vertices()
  std::vector<SourceLocation> edge_locations;    // parallel to graph.edges()
};

/// Input rejected by a parser. DSL errors carry line/column; JSON errors carry
/// a JSON pointer path (and a position for syntax errors).
class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLocation where, std::string path, const std::string& message);

  const SourceLocation& location() const { return where_; }
  const std::string& path() const { return path_; }
  const std::string& detail() const { return detail_; }

 private:
  SourceLocation where_;
  std::string path_;
  std::string detail_;
};

/// Line-oriented format, one declaration per line, '#' to end of line is a
/// comment, LF or CRLF line endings:
///   vertex ID sing INDEX
///   vertex ID orbit (attracting|repelling)
///   vertex ID sft RxC [e11, e12, ..., eRC]
///   edge SRC -> DST g=WEIGHT
GraphDocument parse_dsl(std::string_view text);

/// {"vertices":[{"id":..,"label":{"kind":"sing","index":r} |
///                               {"kind":"orbit","direction":"attracting"|"repelling"} |
///                               {"kind":"sft","rows":R,"cols":C,"entries":[...]}}],
///  "edges":[{"src":..,"dst":..,"g":..}]}
GraphDocument parse_json(std::string_view text);

/// Dispatches on the first non-blank character: '{' selects JSON.
GraphDocument parse_graph(std::string_view text);

std::string render_dsl(const LyapunovGraph& g);
std::string render_json(const LyapunovGraph& g);

/// Parses a DSL or JSON document holding sft declarations only and returns
/// their matrices in order.
std::vector<IntMatrix> parse_matrix_list(std::string_view text);

enum class ReportFormat { Text, Json };

std::string render_report(const CheckReport& r, ReportFormat mode);
CheckReport parse_report_json(std::string_view text);

/// Text report followed by the per-vertex quantities behind each condition.
std::string render_explanation(const LyapunovGraph& g, const CheckReport& r);

std::string render_invariants(const IntMatrix& a, const MatrixInvariantReport& r,
                              ReportFormat mode);

bool valid_vertex_id(std::string_view id);

}  // namespace lyagraph
