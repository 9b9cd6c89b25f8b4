#include <algorithm>
#include <charconv>
#include <optional>
#include <unordered_map>

#include <fmt/format.h>

#include "lyagraph/io.hpp"

namespace lyagraph {

ParseError::ParseError(SourceLocation where, std::string path, const std::string& message)
    : std::runtime_error(
          path.empty()
              ? (where.line ? fmt::format("line {}, column {}: {}", where.line, where.column, message)
                            : message)
              : fmt::format("at {}: {}", path, message)),
      where_(where),
      path_(std::move(path)),
      detail_(message) {}

bool valid_vertex_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '.' || c == '-';
  }) && id != "->";
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
    throw ParseError({line_no_, column}, "", msg);
  }

  std::optional<Token> next() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
    if (pos_ >= line_.size()) return std::nullopt;
    const std::size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] != ' ' && line_[pos_] != '\t') ++pos_;
    return Token{line_.substr(start, pos_ - start), start + 1};
  }

  Token expect(const char* what) {
    auto t = next();
    if (!t) fail(line_.size() + 1, fmt::format("expected {}", what));
    return *t;
  }

  void expect_end() {
    if (auto t = next()) fail(t->column, fmt::format("unexpected '{}'", t->text));
  }

  /// Rest of the line from the current position, with its column.
  Token rest() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
    Token t{line_.substr(pos_), pos_ + 1};
    pos_ = line_.size();
    return t;
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

std::int64_t parse_number(const LineParser& lp, std::string_view text, std::size_t column,
                          const char* what) {
  if (!text.empty() && text.front() == '-') {
    lp.fail(column, fmt::format("{} must be nonnegative, got '{}'", what, text));
  }
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec == std::errc::invalid_argument || ptr != text.data() + text.size()) {
    lp.fail(column, fmt::format("expected a nonnegative integer for {}, got '{}'", what, text));
  }
  if (ec == std::errc::result_out_of_range || v > kMaxInputValue) {
    lp.fail(column, fmt::format("{} {} exceeds the limit {}", what, text, kMaxInputValue));
  }
  return v;
}

struct PendingEdge {
  std::string src;
  std::string dst;
  std::int64_t weight;
  SourceLocation where;
  std::size_t dst_column;
};

IntMatrix parse_sft(LineParser& lp) {
  const Token dims = lp.expect("matrix dimensions RxC");
  const auto x = dims.text.find('x');
  if (x == std::string_view::npos) lp.fail(dims.column, "matrix dimensions must look like RxC");
  const auto rows = parse_number(lp, dims.text.substr(0, x), dims.column, "row count");
  const auto cols = parse_number(lp, dims.text.substr(x + 1), dims.column + x + 1, "column count");
  if (rows < 1 || cols < 1) lp.fail(dims.column, "matrix must be at least 1x1");
  if (rows != cols) {
    lp.fail(dims.column, fmt::format("SFT matrix must be square, got {}x{}", rows, cols));
  }

  const Token body = lp.rest();
  std::string_view s = body.text;
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    lp.fail(body.column, "expected a bracketed entry list [e11, ..., eRC]");
  }
  std::vector<std::int64_t> entries;
  std::size_t i = 1;
  const std::size_t end = s.size() - 1;
  while (i < end) {
    while (i < end && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < end && s[j] != ',') ++j;
    std::size_t k = j;
    while (k > i && (s[k - 1] == ' ' || s[k - 1] == '\t')) --k;
    if (k == i) lp.fail(body.column + i, "empty matrix entry");
    entries.push_back(parse_number(lp, s.substr(i, k - i), body.column + i, "matrix entry"));
    i = j + 1;
    if (j < end && i >= end) lp.fail(body.column + j, "trailing comma in matrix entries");
  }
  const auto expected = static_cast<std::size_t>(rows * cols);
  if (entries.size() != expected) {
    lp.fail(body.column, fmt::format("{}x{} matrix needs {} entries, got {}", rows, cols, expected,
                                     entries.size()));
  }
  return IntMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                   std::move(entries));
}

}  // namespace

GraphDocument parse_dsl(std::string_view text) {
  GraphDocument doc;
  doc.format = SourceFormat::Dsl;
  std::vector<Vertex> vertices;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<PendingEdge> pending;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineParser lp(line, line_no);
    const auto head = lp.next();
    if (!head) continue;

    if (head->text == "vertex") {
      const Token id = lp.expect("vertex id");
      if (!valid_vertex_id(id.text)) lp.fail(id.column, fmt::format("invalid vertex id '{}'", id.text));
      if (index.contains(std::string(id.text))) {
        lp.fail(id.column, fmt::format("duplicate vertex id '{}'", id.text));
      }
      const Token kind = lp.expect("label kind (sing, orbit, sft)");
      std::optional<VertexLabel> label;
      if (kind.text == "sing") {
        const Token t = lp.expect("singularity index");
        const auto r = parse_number(lp, t.text, t.column, "singularity index");
        if (r > 3) lp.fail(t.column, fmt::format("singularity index {} outside 0..3", r));
        label = VertexLabel::singularity(static_cast<int>(r));
        lp.expect_end();
      } else if (kind.text == "orbit") {
        const Token t = lp.expect("orbit type (attracting|repelling)");
        if (t.text == "attracting") {
          label = VertexLabel::attracting_orbit();
        } else if (t.text == "repelling") {
          label = VertexLabel::repelling_orbit();
        } else {
          lp.fail(t.column, fmt::format("orbit type must be attracting or repelling, got '{}'", t.text));
        }
        lp.expect_end();
      } else if (kind.text == "sft") {
        label = VertexLabel::sft(parse_sft(lp));
      } else {
        lp.fail(kind.column, fmt::format("unknown label kind '{}'", kind.text));
      }
      index.emplace(std::string(id.text), vertices.size());
      vertices.push_back(Vertex{std::string(id.text), std::move(*label)});
      doc.vertex_locations.push_back({line_no, head->column});
    } else if (head->text == "edge") {
      const Token src = lp.expect("source vertex id");
      const Token arrow = lp.expect("'->'");
      if (arrow.text != "->") lp.fail(arrow.column, fmt::format("expected '->', got '{}'", arrow.text));
      const Token dst = lp.expect("target vertex id");
      const Token weight = lp.expect("g=WEIGHT");
      if (!weight.text.starts_with("g=")) {
        lp.fail(weight.column, fmt::format("expected g=WEIGHT, got '{}'", weight.text));
      }
      const auto w = parse_number(lp, weight.text.substr(2), weight.column + 2, "edge weight");
      lp.expect_end();
      if (src.text == dst.text) {
        lp.fail(dst.column, fmt::format("self-loop at '{}' is an oriented cycle", src.text));
      }
      pending.push_back(PendingEdge{std::string(src.text), std::string(dst.text), w,
                                    {line_no, src.column}, dst.column});
    } else {
      lp.fail(head->column, fmt::format("unknown declaration '{}'", head->text));
    }
  }

  if (vertices.empty()) throw ParseError({line_no, 1}, "", "graph has no vertices");

  std::vector<Edge> edges;
  edges.reserve(pending.size());
  for (const auto& e : pending) {
    const auto s = index.find(e.src);
    if (s == index.end()) {
      throw ParseError(e.where, "", fmt::format("unknown vertex id '{}'", e.src));
    }
    const auto d = index.find(e.dst);
    if (d == index.end()) {
      throw ParseError({e.where.line, e.dst_column}, "", fmt::format("unknown vertex id '{}'", e.dst));
    }
    edges.push_back(Edge{s->second, d->second, e.weight});
    doc.edge_locations.push_back(e.where);
  }
  doc.graph = LyapunovGraph(std::move(vertices), std::move(edges));
  return doc;
}

GraphDocument parse_graph(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == '{' ? parse_json(text) : parse_dsl(text);
  }
  return parse_dsl(text);
}

std::string render_dsl(const LyapunovGraph& g) {
  std::string out;
  for (const Vertex& v : g.vertices()) {
    out += fmt::format("vertex {} {}\n", v.id, to_string(v.label));
  }
  for (const Edge& e : g.edges()) {
    out += fmt::format("edge {} -> {} g={}\n", g.id(e.src), g.id(e.dst), e.weight);
  }
  return out;
}

std::vector<IntMatrix> parse_matrix_list(std::string_view text) {
  const GraphDocument doc = parse_graph(text);
  if (doc.graph.edge_count() > 0) {
    throw ParseError(doc.edge_locations.front(), "", "matrix list must not contain edges");
  }
  std::vector<IntMatrix> out;
  for (std::size_t v = 0; v < doc.graph.vertex_count(); ++v) {
    if (!doc.graph.label(v).is_sft()) {
      throw ParseError(doc.vertex_locations[v], "",
                       fmt::format("vertex '{}' is not an sft declaration", doc.graph.id(v)));
    }
    out.push_back(doc.graph.label(v).matrix());
  }
  return out;
}

}  // namespace lyagraph
