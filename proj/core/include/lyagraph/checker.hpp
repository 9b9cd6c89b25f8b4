#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lyagraph/graph.hpp"

namespace lyagraph {

enum class Target { S2xS1, S3 };

std::string_view to_string(Target t);          // "s2xs1" | "s3"
std::optional<Target> parse_target(std::string_view s);

enum class SftClass { TypeIneq, TypeEq, Neither };

std::string_view to_string(SftClass c);
std::optional<SftClass> parse_sft_class(std::string_view s);

/// Classification of an SFT vertex together with the quantities it was
/// computed from.
///   TypeIneq: k+1-G- <= e+ <= k+1  and  k+1-G+ <= e- <= k+1
///   TypeEq:   k-G- == e+            and  k-G+ == e-
struct SftVertexClass {
  SftClass kind = SftClass::Neither;
  std::size_t k = 0;
  std::size_t e_plus = 0;
  std::size_t e_minus = 0;
  std::int64_t g_plus = 0;
  std::int64_t g_minus = 0;
  friend bool operator==(const SftVertexClass&, const SftVertexClass&) = default;
};

bool satisfies_inequalities(const SftVertexClass& c);
bool satisfies_equalities(const SftVertexClass& c);

enum class ConditionId { Struct, C1, C2, C3, C4 };
enum class Status { Pass, Fail, NotApplicable };

std::string_view to_string(ConditionId id);
std::string_view to_string(Status s);
std::optional<ConditionId> parse_condition_id(std::string_view s);
std::optional<Status> parse_status(std::string_view s);

struct Witness {
  std::string subject;  // vertex id, "edge#N", or "graph"
  std::string message;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ConditionVerdict {
  ConditionId id = ConditionId::Struct;
  Status status = Status::Pass;
  std::vector<Witness> witnesses;  // nonempty whenever status == Fail

  bool passed() const { return status == Status::Pass; }
  friend bool operator==(const ConditionVerdict&, const ConditionVerdict&) = default;
};

struct SftVertexEntry {
  std::string vertex;
  SftVertexClass cls;
  friend bool operator==(const SftVertexEntry&, const SftVertexEntry&) = default;
};

struct CheckReport {
  Target target = Target::S2xS1;
  StructureReport structure;
  std::optional<std::size_t> beta;  // absent when the graph is disconnected
  std::vector<ConditionVerdict> verdicts;
  std::vector<SftVertexEntry> sft_vertices;
  bool realizable = false;

  const ConditionVerdict* verdict(ConditionId id) const;
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Sinks and sources carry exactly one edge and the matching label; SFT
/// vertices have both incoming and outgoing edges.
ConditionVerdict check_condition1(const LyapunovGraph& g);

/// Degree bounds at index-1 and index-2 singularities.
ConditionVerdict check_condition2(const LyapunovGraph& g);

/// Per-vertex Poincare-Hopf balance (-1)^r (or 0) = e+ - e- - G+ + G-.
ConditionVerdict check_poincare_hopf(const LyapunovGraph& g);

/// Throws std::out_of_range for unknown ids and std::invalid_argument when the
/// vertex is not labelled by a suspended subshift.
SftVertexClass classify_sft_vertex(const LyapunovGraph& g, std::string_view vertex_id);

/// SFT condition for S2xS1, driven by the cycle rank.
ConditionVerdict check_condition3_s2xs1(const LyapunovGraph& g, std::size_t beta);
ConditionVerdict check_condition3_s2xs1(const LyapunovGraph& g);

/// SFT condition for S3: every SFT vertex satisfies the inequalities.
ConditionVerdict check_condition3_s3(const LyapunovGraph& g);

/// Summary keeps every status and witness subject but leaves messages empty.
enum class ReportDetail { Full, Summary };

/// Evaluates every condition for the target without short-circuiting.
CheckReport check(const LyapunovGraph& g, Target t, ReportDetail detail = ReportDetail::Full);

}  // namespace lyagraph
