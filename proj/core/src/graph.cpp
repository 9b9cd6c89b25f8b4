#include "lyagraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/container/small_vector.hpp>

#include <fmt/format.h>

namespace lyagraph {

namespace {
template <class T>
using Scratch = boost::container::small_vector<T, 16>;
}  // namespace

VertexLabel VertexLabel::singularity(int index) {
  if (index < 0 || index > 3) {
    throw std::invalid_argument(fmt::format("singularity index {} outside 0..3", index));
  }
  return VertexLabel(Singularity{index});
}

VertexLabel VertexLabel::sft(IntMatrix matrix) {
  if (matrix.empty() || !matrix.square()) {
    throw std::invalid_argument("SFT matrix must be square and at least 1x1");
  }
  for (std::int64_t e : matrix.entries()) {
    if (e < 0) throw std::invalid_argument("SFT matrix entries must be nonnegative");
  }
  return VertexLabel(SuspensionSFT{std::move(matrix)});
}

std::optional<int> VertexLabel::singularity_index() const {
  if (const auto* s = std::get_if<Singularity>(&value_)) return s->index;
  return std::nullopt;
}

const IntMatrix& VertexLabel::matrix() const {
  if (const auto* s = std::get_if<SuspensionSFT>(&value_)) return s->matrix;
  throw std::logic_error("vertex label is not a suspended subshift");
}

VertexLabel VertexLabel::reversed() const {
  struct Visitor {
    VertexLabel operator()(const Singularity& s) const { return VertexLabel(Singularity{3 - s.index}); }
    VertexLabel operator()(const AttractingOrbit&) const { return VertexLabel(RepellingOrbit{}); }
    VertexLabel operator()(const RepellingOrbit&) const { return VertexLabel(AttractingOrbit{}); }
    VertexLabel operator()(const SuspensionSFT& s) const {
      return VertexLabel(SuspensionSFT{s.matrix.transpose()});
    }
  };
  return std::visit(Visitor{}, value_);
}

std::string to_string(const VertexLabel& label) {
  struct Visitor {
    std::string operator()(const Singularity& s) const { return "sing " + std::to_string(s.index); }
    std::string operator()(const AttractingOrbit&) const { return "orbit attracting"; }
    std::string operator()(const RepellingOrbit&) const { return "orbit repelling"; }
    std::string operator()(const SuspensionSFT& s) const {
      std::string out = "sft " + std::to_string(s.matrix.rows()) + "x" +
                        std::to_string(s.matrix.cols()) + " [";
      bool first = true;
      for (std::int64_t e : s.matrix.entries()) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
      }
      out += ']';
      return out;
    }
  };
  return std::visit(Visitor{}, label.value());
}

// ---------------------------------------------------------------------------

LyapunovGraph::LyapunovGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::vector<std::string_view> ids;
  ids.reserve(vertices_.size());
  for (const auto& v : vertices_) ids.emplace_back(v.id);
  std::sort(ids.begin(), ids.end());
  if (auto dup = std::adjacent_find(ids.begin(), ids.end()); dup != ids.end()) {
    throw std::invalid_argument(fmt::format("duplicate vertex id '{}'", *dup));
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.src >= vertices_.size() || e.dst >= vertices_.size()) {
      throw std::invalid_argument(fmt::format("edge {} has an endpoint out of range", i));
    }
    if (e.src == e.dst) {
      throw std::invalid_argument(
          fmt::format("edge {} is a self-loop at '{}'", i, vertices_[e.src].id));
    }
    if (e.weight < 0) {
      throw std::invalid_argument(fmt::format("edge {} has negative weight {}", i, e.weight));
    }
  }
}

std::optional<std::size_t> LyapunovGraph::find(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t LyapunovGraph::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw std::out_of_range(fmt::format("unknown vertex id '{}'", id));
}

// ---------------------------------------------------------------------------

bool is_connected(const LyapunovGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  // Union-find over the undirected edges.
  Scratch<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : g.edges()) {
    const std::size_t a = root(e.src), b = root(e.dst);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

namespace {

// Kahn's algorithm; returns the vertices left over (those on or downstream of
// a directed cycle). Empty result means a topological order exists.
std::vector<std::size_t> unsorted_vertices(const LyapunovGraph& g) {
  const std::size_t n = g.vertex_count();
  Scratch<std::size_t> indeg(n, 0);
  Scratch<std::size_t> offset(n + 1, 0);
  for (const Edge& e : g.edges()) {
    ++indeg[e.dst];
    ++offset[e.src + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] += offset[v];
  Scratch<std::size_t> succ(g.edge_count());
  {
    Scratch<std::size_t> fill(offset.begin(), offset.end() - 1);
    for (const Edge& e : g.edges()) succ[fill[e.src]++] = e.dst;
  }
  Scratch<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  std::size_t sorted = 0;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    ++sorted;
    for (std::size_t i = offset[v]; i < offset[v + 1]; ++i)
      if (--indeg[succ[i]] == 0) stack.push_back(succ[i]);
  }
  std::vector<std::size_t> rest;
  if (sorted == n) return rest;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] > 0) rest.push_back(v);
  return rest;
}

}  // namespace

StructureReport validate_structure(const LyapunovGraph& g) {
  StructureReport r;
  r.nonempty = g.vertex_count() > 0;
  if (!r.nonempty) r.violations.emplace_back("graph has no vertices");

  r.connected = is_connected(g);
  if (r.nonempty && !r.connected) r.violations.emplace_back("underlying graph is disconnected");

  const auto rest = unsorted_vertices(g);
  r.oriented_acyclic = rest.empty();
  if (!r.oriented_acyclic) {
    std::vector<std::string_view> ids;
    for (std::size_t v : rest) ids.emplace_back(g.id(v));
    r.violations.push_back(
        fmt::format("oriented cycle through or downstream of: {}", fmt::join(ids, ", ")));
  }
  return r;
}

std::size_t cycle_rank(const LyapunovGraph& g) {
  if (!is_connected(g)) throw std::domain_error("cycle_rank: graph is not connected");
  return g.edge_count() - g.vertex_count() + 1;
}

DegreeProfile degree_profile(const LyapunovGraph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw std::out_of_range("degree_profile: vertex index out of range");
  DegreeProfile p;
  for (const Edge& e : g.edges()) {
    if (e.dst == v) {
      ++p.e_plus;
      p.g_plus += e.weight;
      p.g_plus_list.push_back(e.weight);
    }
    if (e.src == v) {
      ++p.e_minus;
      p.g_minus += e.weight;
      p.g_minus_list.push_back(e.weight);
    }
  }
  return p;
}

DegreeProfile degree_profile(const LyapunovGraph& g, std::string_view vertex_id) {
  return degree_profile(g, g.index_of(vertex_id));
}

std::vector<DegreeProfile> degree_profiles(const LyapunovGraph& g) {
  std::vector<DegreeProfile> out(g.vertex_count());
  for (const Edge& e : g.edges()) {
    DegreeProfile& in = out[e.dst];
    ++in.e_plus;
    in.g_plus += e.weight;
    in.g_plus_list.push_back(e.weight);
    DegreeProfile& o = out[e.src];
    ++o.e_minus;
    o.g_minus += e.weight;
    o.g_minus_list.push_back(e.weight);
  }
  return out;
}

LyapunovGraph reverse(const LyapunovGraph& g) {
  std::vector<Vertex> vs;
  vs.reserve(g.vertex_count());
  for (const Vertex& v : g.vertices()) vs.push_back(Vertex{v.id, v.label.reversed()});
  std::vector<Edge> es;
  es.reserve(g.edge_count());
  for (const Edge& e : g.edges()) es.push_back(Edge{e.dst, e.src, e.weight});
  return LyapunovGraph(std::move(vs), std::move(es));
}

}  // namespace lyagraph
