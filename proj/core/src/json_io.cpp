#include <unordered_map>

#include <fmt/format.h>
#include <json.hpp>

#include "lyagraph/io.hpp"

namespace lyagraph {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail_at(const std::string& path, const std::string& msg) {
  throw ParseError({}, path.empty() ? "/" : path, msg);
}

const json& member(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) fail_at(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail_at(path + "/" + key, fmt::format("missing required field \"{}\"", key));
  return *it;
}

std::string string_at(const json& v, const std::string& path) {
  if (!v.is_string()) fail_at(path, "expected a string");
  return v.get<std::string>();
}

std::int64_t count_at(const json& v, const std::string& path, const char* what) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) {
      const auto u = v.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(kMaxInputValue)) {
        fail_at(path, fmt::format("{} {} exceeds the limit {}", what, u, kMaxInputValue));
      }
      return static_cast<std::int64_t>(u);
    }
    const auto s = v.get<std::int64_t>();
    if (s < 0) fail_at(path, fmt::format("{} must be nonnegative, got {}", what, s));
    if (s > kMaxInputValue) fail_at(path, fmt::format("{} {} exceeds the limit {}", what, s, kMaxInputValue));
    return s;
  }
  fail_at(path, fmt::format("expected a nonnegative integer for {}", what));
}

VertexLabel label_at(const json& v, const std::string& path) {
  const std::string kind = string_at(member(v, path, "kind"), path + "/kind");
  if (kind == "sing") {
    const auto r = count_at(member(v, path, "index"), path + "/index", "singularity index");
    if (r > 3) fail_at(path + "/index", fmt::format("singularity index {} outside 0..3", r));
    return VertexLabel::singularity(static_cast<int>(r));
  }
  if (kind == "orbit") {
    const std::string dir = string_at(member(v, path, "direction"), path + "/direction");
    if (dir == "attracting") return VertexLabel::attracting_orbit();
    if (dir == "repelling") return VertexLabel::repelling_orbit();
    fail_at(path + "/direction", fmt::format("orbit direction must be attracting or repelling, got \"{}\"", dir));
  }
  if (kind == "sft") {
    const auto rows = count_at(member(v, path, "rows"), path + "/rows", "row count");
    const auto cols = count_at(member(v, path, "cols"), path + "/cols", "column count");
    if (rows < 1 || cols < 1) fail_at(path, "matrix must be at least 1x1");
    if (rows != cols) fail_at(path, fmt::format("SFT matrix must be square, got {}x{}", rows, cols));
    const json& entries = member(v, path, "entries");
    if (!entries.is_array()) fail_at(path + "/entries", "expected an array");
    const auto expected = static_cast<std::size_t>(rows * cols);
    if (entries.size() != expected) {
      fail_at(path + "/entries", fmt::format("{}x{} matrix needs {} entries, got {}", rows, cols,
                                             expected, entries.size()));
    }
    std::vector<std::int64_t> data;
    data.reserve(expected);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      data.push_back(count_at(entries[i], fmt::format("{}/entries/{}", path, i), "matrix entry"));
    }
    return VertexLabel::sft(IntMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                                      std::move(data)));
  }
  fail_at(path + "/kind", fmt::format("unknown label kind \"{}\"", kind));
}

SourceLocation location_of_byte(std::string_view text, std::size_t byte) {
  SourceLocation loc{1, 1};
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

ordered_json label_json(const VertexLabel& label) {
  struct Visitor {
    ordered_json operator()(const Singularity& s) const {
      return ordered_json{{"kind", "sing"}, {"index", s.index}};
    }
    ordered_json operator()(const AttractingOrbit&) const {
      return ordered_json{{"kind", "orbit"}, {"direction", "attracting"}};
    }
    ordered_json operator()(const RepellingOrbit&) const {
      return ordered_json{{"kind", "orbit"}, {"direction", "repelling"}};
    }
    ordered_json operator()(const SuspensionSFT& s) const {
      ordered_json entries = ordered_json::array();
      for (std::int64_t e : s.matrix.entries()) entries.push_back(e);
      return ordered_json{{"kind", "sft"},
                          {"rows", s.matrix.rows()},
                          {"cols", s.matrix.cols()},
                          {"entries", std::move(entries)}};
    }
  };
  return std::visit(Visitor{}, label.value());
}

}  // namespace

GraphDocument parse_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(location_of_byte(text, e.byte == 0 ? 0 : e.byte - 1), "",
                     fmt::format("malformed JSON: {}", e.what()));
  }

  GraphDocument doc;
  doc.format = SourceFormat::Json;
  if (!root.is_object()) fail_at("", "expected a top-level object");

  const json& vs = member(root, "", "vertices");
  if (!vs.is_array()) fail_at("/vertices", "expected an array");
  if (vs.empty()) fail_at("/vertices", "graph has no vertices");

  std::vector<Vertex> vertices;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string path = fmt::format("/vertices/{}", i);
    std::string id = string_at(member(vs[i], path, "id"), path + "/id");
    if (!valid_vertex_id(id)) fail_at(path + "/id", fmt::format("invalid vertex id \"{}\"", id));
    if (index.contains(id)) fail_at(path + "/id", fmt::format("duplicate vertex id \"{}\"", id));
    VertexLabel label = label_at(member(vs[i], path, "label"), path + "/label");
    index.emplace(id, i);
    vertices.push_back(Vertex{std::move(id), std::move(label)});
    doc.vertex_locations.push_back({});
  }

  std::vector<Edge> edges;
  if (root.contains("edges")) {
    const json& es = root["edges"];
    if (!es.is_array()) fail_at("/edges", "expected an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string path = fmt::format("/edges/{}", i);
      const std::string src = string_at(member(es[i], path, "src"), path + "/src");
      const std::string dst = string_at(member(es[i], path, "dst"), path + "/dst");
      const auto g = count_at(member(es[i], path, "g"), path + "/g", "edge weight");
      const auto s = index.find(src);
      if (s == index.end()) fail_at(path + "/src", fmt::format("unknown vertex id \"{}\"", src));
      const auto d = index.find(dst);
      if (d == index.end()) fail_at(path + "/dst", fmt::format("unknown vertex id \"{}\"", dst));
      if (s->second == d->second) {
        fail_at(path, fmt::format("self-loop at \"{}\" is an oriented cycle", src));
      }
      edges.push_back(Edge{s->second, d->second, g});
      doc.edge_locations.push_back({});
    }
  }
  doc.graph = LyapunovGraph(std::move(vertices), std::move(edges));
  return doc;
}

std::string render_json(const LyapunovGraph& g) {
  ordered_json vs = ordered_json::array();
  for (const Vertex& v : g.vertices()) {
    vs.push_back(ordered_json{{"id", v.id}, {"label", label_json(v.label)}});
  }
  ordered_json es = ordered_json::array();
  for (const Edge& e : g.edges()) {
    es.push_back(ordered_json{{"src", g.id(e.src)}, {"dst", g.id(e.dst)}, {"g", e.weight}});
  }
  ordered_json root{{"vertices", std::move(vs)}, {"edges", std::move(es)}};
  return root.dump(2) + "\n";
}

}  // namespace lyagraph
