#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lyagraph/linalg.hpp"

namespace lyagraph {

struct Singularity {
  int index = 0;  // 0..3
  friend bool operator==(const Singularity&, const Singularity&) = default;
};
struct AttractingOrbit {
  friend bool operator==(const AttractingOrbit&, const AttractingOrbit&) = default;
};
struct RepellingOrbit {
  friend bool operator==(const RepellingOrbit&, const RepellingOrbit&) = default;
};
/// Suspension of the subshift of finite type given by a square nonnegative
/// matrix. Saddle periodic orbits are the 1x1 matrix [1].
struct SuspensionSFT {
  IntMatrix matrix;
  friend bool operator==(const SuspensionSFT&, const SuspensionSFT&) = default;
};

/// Chain-recurrent piece sitting at a vertex. Construction goes through the
/// factories, which enforce the label invariants.
class VertexLabel {
 public:
  using Variant = std::variant<Singularity, AttractingOrbit, RepellingOrbit, SuspensionSFT>;

  static VertexLabel singularity(int index);
  static VertexLabel attracting_orbit() { return VertexLabel(AttractingOrbit{}); }
  static VertexLabel repelling_orbit() { return VertexLabel(RepellingOrbit{}); }
  static VertexLabel sft(IntMatrix matrix);

  const Variant& value() const { return value_; }

  bool is_singularity() const { return std::holds_alternative<Singularity>(value_); }
  bool is_sft() const { return std::holds_alternative<SuspensionSFT>(value_); }
  bool is_attracting() const { return std::holds_alternative<AttractingOrbit>(value_); }
  bool is_repelling() const { return std::holds_alternative<RepellingOrbit>(value_); }

  /// Singularity index, or nullopt for other label kinds.
  std::optional<int> singularity_index() const;
  /// SFT matrix; throws std::logic_error for other label kinds.
  const IntMatrix& matrix() const;

  /// Label of the same piece under the time-reversed flow.
  VertexLabel reversed() const;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;

 private:
  explicit VertexLabel(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

std::string to_string(const VertexLabel& label);

struct Vertex {
  std::string id;
  VertexLabel label;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Edge between vertex positions (indices into LyapunovGraph::vertices()).
struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::int64_t weight = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Oriented multigraph with labelled vertices and genus-weighted edges.
/// Immutable once built. The constructor enforces the well-formedness
/// invariants (unique ids, endpoints in range, nonnegative weights, no
/// self-loops) and throws std::invalid_argument otherwise. Connectivity and
/// acyclicity are not enforced here; see validate_structure().
class LyapunovGraph {
 public:
  LyapunovGraph() = default;
  LyapunovGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Position of id; throws std::out_of_range for unknown ids.
  std::size_t index_of(std::string_view id) const;

  const std::string& id(std::size_t v) const { return vertices_[v].id; }
  const VertexLabel& label(std::size_t v) const { return vertices_[v].label; }

  friend bool operator==(const LyapunovGraph&, const LyapunovGraph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

struct DegreeProfile {
  std::size_t e_plus = 0;   // incoming edges
  std::size_t e_minus = 0;  // outgoing edges
  std::int64_t g_plus = 0;  // sum of incoming weights
  std::int64_t g_minus = 0; // sum of outgoing weights
  std::vector<std::int64_t> g_plus_list;
  std::vector<std::int64_t> g_minus_list;
  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

struct StructureReport {
  bool connected = false;
  bool oriented_acyclic = false;
  bool nonempty = false;
  std::vector<std::string> violations;

  bool valid() const { return connected && oriented_acyclic && nonempty; }
  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

StructureReport validate_structure(const LyapunovGraph& g);

bool is_connected(const LyapunovGraph& g);

/// |E| - |V| + 1. Throws std::domain_error when g is disconnected or empty.
std::size_t cycle_rank(const LyapunovGraph& g);

/// Throws std::out_of_range for an unknown vertex id.
DegreeProfile degree_profile(const LyapunovGraph& g, std::string_view vertex_id);
DegreeProfile degree_profile(const LyapunovGraph& g, std::size_t v);

/// Profiles for every vertex in declaration order, in one pass over the edges.
std::vector<DegreeProfile> degree_profiles(const LyapunovGraph& g);

/// Time reversal: flips every edge and maps each label to its reversed piece.
LyapunovGraph reverse(const LyapunovGraph& g);

}  // namespace lyagraph
