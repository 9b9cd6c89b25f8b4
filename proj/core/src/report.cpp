#include <fmt/format.h>
#include <json.hpp>

#include "lyagraph/io.hpp"

namespace lyagraph {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view target_title(Target t) { return t == Target::S2xS1 ? "S2xS1" : "S3"; }

ordered_json report_json(const CheckReport& r) {
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : r.verdicts) {
    ordered_json ws = ordered_json::array();
    for (const auto& w : v.witnesses) ws.push_back({{"subject", w.subject}, {"message", w.message}});
    verdicts.push_back({{"condition", to_string(v.id)},
                        {"status", to_string(v.status)},
                        {"witnesses", std::move(ws)}});
  }
  ordered_json sft = ordered_json::array();
  for (const auto& s : r.sft_vertices) {
    sft.push_back({{"vertex", s.vertex},
                   {"class", to_string(s.cls.kind)},
                   {"k", s.cls.k},
                   {"e_plus", s.cls.e_plus},
                   {"e_minus", s.cls.e_minus},
                   {"G_plus", s.cls.g_plus},
                   {"G_minus", s.cls.g_minus}});
  }
  return ordered_json{
      {"target", to_string(r.target)},
      {"structure",
       {{"connected", r.structure.connected},
        {"oriented_acyclic", r.structure.oriented_acyclic},
        {"nonempty", r.structure.nonempty},
        {"violations", r.structure.violations}}},
      {"beta", r.beta ? ordered_json(*r.beta) : ordered_json(nullptr)},
      {"verdicts", std::move(verdicts)},
      {"sft_vertices", std::move(sft)},
      {"realizable", r.realizable},
  };
}

std::string report_text(const CheckReport& r) {
  std::string out;
  out += fmt::format("target: {}\n", target_title(r.target));
  out += fmt::format("structure: {}\n", r.structure.valid() ? "valid" : "invalid");
  out += fmt::format("cycle rank: {}\n", r.beta ? std::to_string(*r.beta) : std::string("undefined"));
  for (const auto& v : r.verdicts) {
    out += fmt::format("{:<6} {}\n", to_string(v.id), to_string(v.status));
    for (const auto& w : v.witnesses) out += fmt::format("  - {}: {}\n", w.subject, w.message);
  }
  out += fmt::format("{} on {}\n", r.realizable ? "REALIZABLE" : "NOT REALIZABLE",
                     target_title(r.target));
  return out;
}

std::string big_to_string(const BigInt& v) { return v.str(); }

}  // namespace

std::string render_report(const CheckReport& r, ReportFormat mode) {
  if (mode == ReportFormat::Json) return report_json(r).dump(2) + "\n";
  return report_text(r);
}

CheckReport parse_report_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text.begin(), text.end());
  CheckReport r;
  const auto target = parse_target(j.at("target").get<std::string>());
  if (!target) throw std::invalid_argument("report: unknown target");
  r.target = *target;
  const auto& s = j.at("structure");
  r.structure.connected = s.at("connected").get<bool>();
  r.structure.oriented_acyclic = s.at("oriented_acyclic").get<bool>();
  r.structure.nonempty = s.at("nonempty").get<bool>();
  r.structure.violations = s.at("violations").get<std::vector<std::string>>();
  if (!j.at("beta").is_null()) r.beta = j.at("beta").get<std::size_t>();
  for (const auto& v : j.at("verdicts")) {
    ConditionVerdict cv;
    const auto id = parse_condition_id(v.at("condition").get<std::string>());
    const auto status = parse_status(v.at("status").get<std::string>());
    if (!id || !status) throw std::invalid_argument("report: unknown condition or status");
    cv.id = *id;
    cv.status = *status;
    for (const auto& w : v.at("witnesses")) {
      cv.witnesses.push_back({w.at("subject").get<std::string>(), w.at("message").get<std::string>()});
    }
    r.verdicts.push_back(std::move(cv));
  }
  for (const auto& e : j.at("sft_vertices")) {
    const auto kind = parse_sft_class(e.at("class").get<std::string>());
    if (!kind) throw std::invalid_argument("report: unknown SFT class");
    r.sft_vertices.push_back({e.at("vertex").get<std::string>(),
                              {*kind, e.at("k").get<std::size_t>(), e.at("e_plus").get<std::size_t>(),
                               e.at("e_minus").get<std::size_t>(), e.at("G_plus").get<std::int64_t>(),
                               e.at("G_minus").get<std::int64_t>()}});
  }
  r.realizable = j.at("realizable").get<bool>();
  return r;
}

std::string render_explanation(const LyapunovGraph& g, const CheckReport& r) {
  std::string out = report_text(r);
  out += "\nvertices:\n";
  const auto profiles = degree_profiles(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const DegreeProfile& p = profiles[v];
    const auto index = g.label(v).singularity_index();
    const std::int64_t balance = static_cast<std::int64_t>(p.e_plus) -
                                 static_cast<std::int64_t>(p.e_minus) - p.g_plus + p.g_minus;
    out += fmt::format("  {} [{}]: e+={} e-={} G+={} [{}] G-={} [{}]; Poincare-Hopf {} vs {}\n",
                       g.id(v), to_string(g.label(v)), p.e_plus, p.e_minus, p.g_plus,
                       fmt::join(p.g_plus_list, ","), p.g_minus, fmt::join(p.g_minus_list, ","),
                       index ? (*index % 2 == 0 ? 1 : -1) : 0, balance);
  }
  for (const auto& s : r.sft_vertices) {
    const auto& c = s.cls;
    const auto k = static_cast<std::int64_t>(c.k);
    out += fmt::format(
        "  {}: k={} -> {}; inequalities {}<=e+={}<={}, {}<=e-={}<={}; equalities {}==e+, {}==e-\n",
        s.vertex, c.k, to_string(c.kind), k + 1 - c.g_minus, c.e_plus, k + 1, k + 1 - c.g_plus,
        c.e_minus, k + 1, k - c.g_minus, k - c.g_plus);
  }
  return out;
}

std::string render_invariants(const IntMatrix& a, const MatrixInvariantReport& r,
                              ReportFormat mode) {
  std::vector<std::string> bf;
  for (const auto& d : r.bowen_franks) bf.push_back(big_to_string(d));
  if (mode == ReportFormat::Json) {
    ordered_json entries = ordered_json::array();
    for (std::int64_t e : a.entries()) entries.push_back(e);
    ordered_json factors = ordered_json::array();
    for (const auto& d : bf) factors.push_back(d);
    ordered_json j{{"rows", a.rows()},
                   {"cols", a.cols()},
                   {"entries", std::move(entries)},
                   {"k", r.k},
                   {"irreducible", r.irreducible},
                   {"permutation", r.permutation},
                   {"parry_sullivan", big_to_string(r.parry_sullivan)},
                   {"bowen_franks", std::move(factors)}};
    return j.dump(2) + "\n";
  }
  std::string out;
  out += fmt::format("matrix: {}x{} [{}]\n", a.rows(), a.cols(), fmt::join(a.entries(), ","));
  out += fmt::format("k: {}\n", r.k);
  out += fmt::format("irreducible: {}\n", r.irreducible);
  out += fmt::format("permutation: {}\n", r.permutation);
  out += fmt::format("parry_sullivan: {}\n", big_to_string(r.parry_sullivan));
  out += fmt::format("bowen_franks: [{}]\n", fmt::join(bf, ", "));
  return out;
}

}  // namespace lyagraph
