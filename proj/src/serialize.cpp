#include "maniplex/serialize.hpp"

#include <sstream>

#include "maniplex/errors.hpp"

namespace maniplex {

json element_json(const Field& F, uint32_t element) {
  return json(F.decode(element).coeffs);
}

json matrix_json(const GroupContext& G, uint32_t index) {
  const Field& F = G.field();
  Mat m = G.matrix(index);
  return json::array({element_json(F, m.a), element_json(F, m.b), element_json(F, m.c),
                      element_json(F, m.d)});
}

json rep_json(const StringRep& rep) {
  json j;
  j["q"] = rep.ctx->q();
  j["family"] = to_string(rep.ctx->family());
  j["rank"] = rep.rank();
  json gens = json::array();
  for (uint32_t g : rep.gens) gens.push_back(matrix_json(*rep.ctx, g));
  j["generators"] = std::move(gens);
  return j;
}

StringRep rep_from_json(const json& j) {
  if (!j.contains("q") || !j.contains("family") || !j.contains("generators"))
    throw PreconditionFailed("representation object needs q, family and generators");
  const uint32_t q = j.at("q").get<uint32_t>();
  const Family family = family_from_string(j.at("family").get<std::string>());
  ContextPtr ctx = GroupContext::enumerate(q, family);
  const Field& F = ctx->field();

  std::vector<uint32_t> gens;
  for (const auto& mj : j.at("generators")) {
    if (!mj.is_array() || mj.size() != 4)
      throw PreconditionFailed("a generator must be a row-major list of 4 entries");
    uint32_t entries[4];
    for (int i = 0; i < 4; ++i) {
      FieldElement e;
      e.coeffs = mj.at(i).get<std::vector<uint32_t>>();
      entries[i] = F.encode(e);
    }
    gens.push_back(ctx->index_of(Mat{entries[0], entries[1], entries[2], entries[3]}));
  }
  if (j.contains("rank") && j.at("rank").get<size_t>() != gens.size())
    throw PreconditionFailed("rank does not match the number of generators");
  return StringRep(ctx, std::move(gens));
}

json summary_json(const StringRep& rep, const ManiplexSummary& s) {
  json j;
  j["q"] = s.q;
  j["family"] = to_string(s.family);
  j["rank"] = s.rank;
  j["type"] = s.type;
  j["class"] = to_string(s.class_tag);
  j["ip"] = s.ip;
  j["orientable"] = s.orientable;
  j["flag_count"] = s.flag_count;
  j["face_counts"] = s.face_counts;
  j["vertex_kind"] = to_string(s.vertex_kind);
  j["facet_kind"] = to_string(s.facet_kind);
  json kinds = json::array();
  for (uint32_t i = 0; i < rep.rank(); ++i) {
    ClosureResult sub = parabolic_or_full(rep, i);
    kinds.push_back(sub.full ? "full" : to_string(identify_subgroup(*rep.ctx, sub.elements)));
  }
  j["parabolic_kinds"] = std::move(kinds);
  j["generators"] = rep_json(rep)["generators"];
  return j;
}

namespace {

std::string join_type(const std::vector<uint32_t>& type) {
  std::string s = "{";
  for (size_t i = 0; i < type.size(); ++i) s += (i ? "," : "") + std::to_string(type[i]);
  return s + "}";
}

}  // namespace

std::string summary_text(const ManiplexSummary& s) {
  std::ostringstream out;
  out << "q=" << s.q << " family=" << to_string(s.family) << " rank=" << s.rank
      << " type=" << join_type(s.type) << " class=" << to_string(s.class_tag)
      << " ip=" << (s.ip ? "true" : "false")
      << " orientable=" << (s.orientable ? "true" : "false") << " flags=" << s.flag_count
      << " vertices=" << s.face_counts.front() << " facets=" << s.face_counts.back()
      << " vertex_kind=" << to_string(s.vertex_kind)
      << " facet_kind=" << to_string(s.facet_kind);
  return out.str();
}

std::string csv_header() {
  return "q,family,rank,type,class,ip,orientable,vertices,facets,vertex_kind,facet_kind,"
         "generators";
}

std::string csv_row(const StringRep& rep, const ManiplexSummary& s) {
  std::ostringstream out;
  std::string type;
  for (size_t i = 0; i < s.type.size(); ++i)
    type += (i ? ";" : "") + std::to_string(s.type[i]);
  std::string gens = rep_json(rep)["generators"].dump();
  std::string quoted = "\"";
  for (char c : gens) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += "\"";
  out << s.q << ',' << to_string(s.family) << ',' << s.rank << ',' << type << ','
      << to_string(s.class_tag) << ',' << (s.ip ? "true" : "false") << ','
      << (s.orientable ? "true" : "false") << ',' << s.face_counts.front() << ','
      << s.face_counts.back() << ',' << to_string(s.vertex_kind) << ','
      << to_string(s.facet_kind) << ',' << quoted;
  return out.str();
}

json validation_json(const ValidationReport& report) {
  json j;
  j["ok"] = report.ok;
  json failures = json::array();
  for (const auto& v : report.failures) {
    json f;
    f["kind"] = to_string(v.kind);
    if (v.i >= 0) f["i"] = v.i;
    if (v.j >= 0) f["j"] = v.j;
    failures.push_back(std::move(f));
  }
  j["failures"] = std::move(failures);
  return j;
}

json stats_json(const CensusStats& stats) {
  json j;
  j["nodes"] = stats.nodes;
  j["closures"] = stats.closures;
  j["wall_ms"] = stats.wall_ms;
  return j;
}

json theorem_report_json(const TheoremReport& report) {
  json j;
  j["q"] = report.q;
  j["family"] = to_string(report.family);
  j["all_pass"] = report.all_pass();
  json checks = json::array();
  for (const auto& c : report.checks) {
    json cj;
    cj["name"] = c.name;
    cj["scope"] = c.scope;
    cj["pass"] = c.pass;
    cj["counterexamples"] = c.counterexamples;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string theorem_report_text(const TheoremReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  (" << c.scope << ")\n";
    for (const auto& ce : c.counterexamples) out << "      counterexample: " << ce << "\n";
  }
  out << (report.all_pass() ? "all checks passed" : "CHECKS FAILED") << " for q=" << report.q
      << " family=" << to_string(report.family) << "\n";
  return out.str();
}

}  // namespace maniplex
