#include "lyagraph/checker.hpp"

#include <charconv>
#include <stdexcept>
#include <type_traits>

#include <boost/container/small_vector.hpp>

#include <fmt/format.h>

#include "lyagraph/sft.hpp"

namespace lyagraph {

std::string_view to_string(Target t) { return t == Target::S2xS1 ? "s2xs1" : "s3"; }

std::optional<Target> parse_target(std::string_view s) {
  if (s == "s2xs1") return Target::S2xS1;
  if (s == "s3") return Target::S3;
  return std::nullopt;
}

std::string_view to_string(SftClass c) {
  switch (c) {
    case SftClass::TypeIneq: return "TypeIneq";
    case SftClass::TypeEq: return "TypeEq";
    case SftClass::Neither: return "Neither";
  }
  return "Neither";
}

std::optional<SftClass> parse_sft_class(std::string_view s) {
  if (s == "TypeIneq") return SftClass::TypeIneq;
  if (s == "TypeEq") return SftClass::TypeEq;
  if (s == "Neither") return SftClass::Neither;
  return std::nullopt;
}

std::string_view to_string(ConditionId id) {
  switch (id) {
    case ConditionId::Struct: return "STRUCT";
    case ConditionId::C1: return "C1";
    case ConditionId::C2: return "C2";
    case ConditionId::C3: return "C3";
    case ConditionId::C4: return "C4";
  }
  return "STRUCT";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
  }
  return "fail";
}

std::optional<ConditionId> parse_condition_id(std::string_view s) {
  for (ConditionId id : {ConditionId::Struct, ConditionId::C1, ConditionId::C2, ConditionId::C3,
                         ConditionId::C4}) {
    if (to_string(id) == s) return id;
  }
  return std::nullopt;
}

std::optional<Status> parse_status(std::string_view s) {
  for (Status st : {Status::Pass, Status::Fail, Status::NotApplicable}) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

const ConditionVerdict* CheckReport::verdict(ConditionId id) const {
  for (const auto& v : verdicts)
    if (v.id == id) return &v;
  return nullptr;
}

bool satisfies_inequalities(const SftVertexClass& c) {
  const auto k1 = static_cast<std::int64_t>(c.k) + 1;
  const auto ep = static_cast<std::int64_t>(c.e_plus);
  const auto em = static_cast<std::int64_t>(c.e_minus);
  return k1 - c.g_minus <= ep && ep <= k1 && k1 - c.g_plus <= em && em <= k1;
}

bool satisfies_equalities(const SftVertexClass& c) {
  const auto k = static_cast<std::int64_t>(c.k);
  return k - c.g_minus == static_cast<std::int64_t>(c.e_plus) &&
         k - c.g_plus == static_cast<std::int64_t>(c.e_minus);
}

namespace {

void append_part(std::string& out, std::string_view s) { out += s; }
void append_part(std::string& out, const char* s) { out += s; }
void append_part(std::string& out, const std::string& s) { out += s; }
template <class T>
  requires std::is_integral_v<T>
void append_part(std::string& out, T v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::string out;
  out.reserve(112);
  (append_part(out, parts), ...);
  return out;
}

struct Totals {
  std::size_t e_plus = 0;
  std::size_t e_minus = 0;
  std::int64_t g_plus = 0;
  std::int64_t g_minus = 0;
};

// Per-vertex conditions reserve one slot per vertex on their first failure.
void add(std::vector<Witness>& w, std::size_t hint, const std::string& subject,
         std::string message) {
  if (w.empty()) w.reserve(hint);
  w.push_back({subject, std::move(message)});
}

using TotalsVec = boost::container::small_vector<Totals, 8>;

TotalsVec totals_of(const LyapunovGraph& g) {
  TotalsVec t(g.vertex_count(), Totals{});
  for (const Edge& e : g.edges()) {
    ++t[e.dst].e_plus;
    t[e.dst].g_plus += e.weight;
    ++t[e.src].e_minus;
    t[e.src].g_minus += e.weight;
  }
  return t;
}

SftVertexClass classify(std::size_t k, const Totals& t) {
  SftVertexClass c{SftClass::Neither, k, t.e_plus, t.e_minus, t.g_plus, t.g_minus};
  const bool eq = satisfies_equalities(c);
  const bool ineq = satisfies_inequalities(c);
  if (eq && ineq) {
    throw std::logic_error("SFT vertex satisfies both the equalities and the inequalities");
  }
  c.kind = eq ? SftClass::TypeEq : ineq ? SftClass::TypeIneq : SftClass::Neither;
  return c;
}

ConditionVerdict finish(ConditionId id, std::vector<Witness> witnesses) {
  ConditionVerdict v{id, witnesses.empty() ? Status::Pass : Status::Fail, std::move(witnesses)};
  return v;
}

ConditionVerdict condition1(const LyapunovGraph& g, const TotalsVec& t, bool verbose) {
  std::vector<Witness> w;
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const VertexLabel& label = g.label(v);
    const auto index = label.singularity_index();
    const Totals& d = t[v];
    const bool sink_label = label.is_attracting() || index == 0;
    const bool source_label = label.is_repelling() || index == 3;
    if (sink_label) {
      if (d.e_minus != 0 || d.e_plus != 1) {
        add(w, n, g.id(v), verbose ? cat("sink label ", to_string(label), " needs e+=1, e-=0; has e+=",
                                  d.e_plus, ", e-=", d.e_minus) : std::string());
      }
    } else if (source_label) {
      if (d.e_plus != 0 || d.e_minus != 1) {
        add(w, n, g.id(v), verbose ? cat("source label ", to_string(label), " needs e+=0, e-=1; has e+=",
                                  d.e_plus, ", e-=", d.e_minus) : std::string());
      }
    } else if (d.e_minus == 0 || d.e_plus == 0) {
      const char* role = d.e_minus == 0 ? "sink" : "source";
      add(w, n, g.id(v), verbose ? cat(role, " vertex labelled ", to_string(label), " (e+=", d.e_plus,
                                ", e-=", d.e_minus,
                                "); sinks and sources must be index 0/3 singularities or orbits") : std::string());
    }
  }
  return finish(ConditionId::C1, std::move(w));
}

ConditionVerdict condition2(const LyapunovGraph& g, const TotalsVec& t, bool verbose) {
  std::vector<Witness> w;
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto index = g.label(v).singularity_index();
    const Totals& d = t[v];
    if (index == 2 && !(d.e_plus >= 1 && d.e_plus <= 2 && d.e_minus == 1)) {
      add(w, n, g.id(v), verbose ? cat("index 2 singularity needs 1<=e+<=2, e-=1; has e+=", d.e_plus,
                                ", e-=", d.e_minus) : std::string());
    } else if (index == 1 && !(d.e_plus == 1 && d.e_minus >= 1 && d.e_minus <= 2)) {
      add(w, n, g.id(v), verbose ? cat("index 1 singularity needs e+=1, 1<=e-<=2; has e+=", d.e_plus,
                                ", e-=", d.e_minus) : std::string());
    }
  }
  return finish(ConditionId::C2, std::move(w));
}

ConditionVerdict poincare_hopf(const LyapunovGraph& g, const TotalsVec& t, bool verbose) {
  std::vector<Witness> w;
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Totals& d = t[v];
    const std::int64_t rhs = static_cast<std::int64_t>(d.e_plus) -
                             static_cast<std::int64_t>(d.e_minus) - d.g_plus + d.g_minus;
    const auto index = g.label(v).singularity_index();
    const std::int64_t lhs = index ? (*index % 2 == 0 ? 1 : -1) : 0;
    if (lhs != rhs) {
      std::string msg;
      if (verbose) {
        msg = index ? cat("(-1)^", *index, " = ", lhs) : std::string("0");
        msg += cat(" but e+ - e- - G+ + G- = ", d.e_plus, " - ", d.e_minus, " - ", d.g_plus, " + ",
                   d.g_minus, " = ", rhs);
      }
      add(w, n, g.id(v), std::move(msg));
    }
  }
  return finish(ConditionId::C4, std::move(w));
}

std::vector<SftVertexEntry> classify_all(const LyapunovGraph& g, const TotalsVec& t) {
  std::vector<SftVertexEntry> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const VertexLabel& label = g.label(v);
    if (!label.is_sft()) continue;
    out.push_back({g.id(v), classify(k_invariant(label.matrix()), t[v])});
  }
  return out;
}

std::string describe(const SftVertexClass& c) {
  return cat("class ", to_string(c.kind), " with k=", c.k, ", e+=", c.e_plus, ", e-=", c.e_minus,
             ", G+=", c.g_plus, ", G-=", c.g_minus);
}

ConditionVerdict condition3_s2xs1(const LyapunovGraph& g, std::size_t beta,
                                  const std::vector<SftVertexEntry>& sft, bool verbose) {
  std::vector<Witness> w;
  if (beta >= 2) {
    w.push_back({"graph", verbose ? cat("cycle rank ", beta, " exceeds 1") : std::string()});
    return finish(ConditionId::C3, std::move(w));
  }
  if (beta == 1) {
    for (const auto& s : sft) {
      if (s.cls.kind != SftClass::TypeIneq) {
        w.push_back({s.vertex, verbose ? "cycle rank 1 requires the inequalities; " + describe(s.cls)
                                       : std::string()});
      }
    }
    return finish(ConditionId::C3, std::move(w));
  }
  std::size_t eq_count = 0;
  for (const auto& s : sft) {
    if (s.cls.kind == SftClass::TypeEq) {
      ++eq_count;
    } else if (s.cls.kind == SftClass::Neither) {
      w.push_back({s.vertex, verbose ? "satisfies neither the inequalities nor the equalities; " +
                                           describe(s.cls)
                                     : std::string()});
    }
  }
  if (eq_count > 1) {
    for (const auto& s : sft) {
      if (s.cls.kind == SftClass::TypeEq) {
        w.push_back({s.vertex, verbose ? cat("one of ", eq_count,
                                             " vertices satisfying the equalities; at most one is "
                                             "allowed in a tree")
                                       : std::string()});
      }
    }
  }
  if (eq_count == 0) {
    bool weighted = false;
    for (const Edge& e : g.edges()) weighted = weighted || e.weight > 0;
    if (!weighted) {
      w.push_back({"graph", verbose ? std::string("tree with no equality vertex needs an edge of "
                                                  "nonzero weight")
                                    : std::string()});
    }
  }
  return finish(ConditionId::C3, std::move(w));
}

ConditionVerdict condition3_s3(const std::vector<SftVertexEntry>& sft, bool verbose) {
  std::vector<Witness> w;
  for (const auto& s : sft) {
    if (s.cls.kind != SftClass::TypeIneq) {
      w.push_back({s.vertex, verbose ? "S3 requires the inequalities; " + describe(s.cls)
                                     : std::string()});
    }
  }
  return finish(ConditionId::C3, std::move(w));
}

}  // namespace

ConditionVerdict check_condition1(const LyapunovGraph& g) { return condition1(g, totals_of(g), true); }

ConditionVerdict check_condition2(const LyapunovGraph& g) { return condition2(g, totals_of(g), true); }

ConditionVerdict check_poincare_hopf(const LyapunovGraph& g) {
  return poincare_hopf(g, totals_of(g), true);
}

SftVertexClass classify_sft_vertex(const LyapunovGraph& g, std::string_view vertex_id) {
  const std::size_t v = g.index_of(vertex_id);
  if (!g.label(v).is_sft()) {
    throw std::invalid_argument(
        fmt::format("vertex '{}' is not labelled by a suspended subshift", vertex_id));
  }
  const auto t = totals_of(g);
  return classify(k_invariant(g.label(v).matrix()), t[v]);
}

ConditionVerdict check_condition3_s2xs1(const LyapunovGraph& g, std::size_t beta) {
  return condition3_s2xs1(g, beta, classify_all(g, totals_of(g)), true);
}

ConditionVerdict check_condition3_s2xs1(const LyapunovGraph& g) {
  return check_condition3_s2xs1(g, cycle_rank(g));
}

ConditionVerdict check_condition3_s3(const LyapunovGraph& g) {
  return condition3_s3(classify_all(g, totals_of(g)), true);
}

CheckReport check(const LyapunovGraph& g, Target t, ReportDetail detail) {
  const bool verbose = detail == ReportDetail::Full;
  CheckReport r;
  r.target = t;
  r.verdicts.reserve(5);
  r.structure = validate_structure(g);
  if (r.structure.connected) r.beta = g.edge_count() + 1 - g.vertex_count();

  const auto totals = totals_of(g);
  r.sft_vertices = classify_all(g, totals);

  std::vector<Witness> sw;
  for (const auto& msg : r.structure.violations) sw.push_back({"graph", msg});
  if (t == Target::S3 && r.beta && *r.beta > 0) {
    sw.push_back({"graph", verbose ? cat("S3 requires a tree; cycle rank is ", *r.beta) : std::string()});
  }
  r.verdicts.push_back(finish(ConditionId::Struct, std::move(sw)));
  r.verdicts.push_back(condition1(g, totals, verbose));
  r.verdicts.push_back(condition2(g, totals, verbose));
  if (t == Target::S3) {
    r.verdicts.push_back(condition3_s3(r.sft_vertices, verbose));
  } else if (r.beta) {
    r.verdicts.push_back(condition3_s2xs1(g, *r.beta, r.sft_vertices, verbose));
  } else {
    r.verdicts.push_back({ConditionId::C3, Status::NotApplicable, {}});
  }
  r.verdicts.push_back(poincare_hopf(g, totals, verbose));

  r.realizable = r.structure.valid();
  for (const auto& v : r.verdicts) r.realizable = r.realizable && v.passed();
  return r;
}

}  // namespace lyagraph
