#include "maniplex/analysis.hpp"

#include <cassert>
#include <ostream>
#include <string>

#include "maniplex/errors.hpp"

namespace maniplex {

namespace {

void require_valid_generating(const StringRep& rep) {
  auto report = validate(rep, true);
  if (!report.ok) {
    std::string what = "representation fails validation:";
    for (const auto& v : report.failures) what += " " + to_string(v.kind);
    throw NotValidated(what);
  }
}

SubgroupKind kind_of(const StringRep& rep, uint32_t i) {
  ClosureResult sub = parabolic_or_full(rep, i);
  if (sub.full) return SubgroupKind{SubgroupTag::Full, rep.ctx->size()};
  return identify_subgroup(*rep.ctx, sub.elements);
}

ClassTag classify_from_kinds(const StringRep& rep, const SubgroupKind& vertex,
                             const SubgroupKind& facet) {
  auto is_small = [](const SubgroupKind& k) {
    return k.tag == SubgroupTag::S4 || k.tag == SubgroupTag::A5;
  };
  const bool v_full = vertex.tag == SubgroupTag::Full;
  const bool f_full = facet.tag == SubgroupTag::Full;
  if (v_full && f_full) return ClassTag::Class1;
  if ((v_full && is_small(facet)) || (f_full && is_small(vertex))) return ClassTag::Class2;
  if (is_small(vertex) && is_small(facet)) return ClassTag::Class3;
  throw FacetTheoremViolation("vertex group " + to_string(vertex) + " / facet group " +
                              to_string(facet) + " fall outside {S4, A5, full} at q = " +
                              std::to_string(rep.ctx->q()));
}

}  // namespace

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::Class1:
      return "1";
    case ClassTag::Class2:
      return "2";
    case ClassTag::Class3:
      return "3";
    case ClassTag::None:
      return "none";
  }
  return "?";
}

uint64_t face_count(const StringRep& rep, uint32_t i) {
  require_valid_generating(rep);
  ClosureResult sub = parabolic_or_full(rep, i);
  if (sub.full) return 1;
  return rep.ctx->size() / sub.elements.size();
}

bool orientable(const StringRep& rep) {
  require_valid_generating(rep);
  const GroupContext& G = *rep.ctx;
  std::vector<uint32_t> rotations;
  for (uint32_t i = 0; i < rep.rank(); ++i)
    for (uint32_t j = i + 1; j < rep.rank(); ++j)
      rotations.push_back(G.mul(rep.gens[i], rep.gens[j]));
  auto sub = G.closure_limited(rotations, G.size() / 2);
  if (!sub) return false;  // single orbit
  assert(sub->size() * 2 == G.size());
  return true;
}

ClassTag classify(const StringRep& rep) {
  if (rep.rank() != 4) throw RankMismatch("classification is defined for rank 4 only");
  if (rep.ctx->family() != Family::PSL)
    throw PreconditionFailed("classification applies to PSL contexts only");
  require_valid_generating(rep);
  return classify_from_kinds(rep, kind_of(rep, 0), kind_of(rep, 3));
}

ManiplexSummary summarize(const StringRep& rep) {
  require_valid_generating(rep);
  const GroupContext& G = *rep.ctx;
  ManiplexSummary s;
  s.q = G.q();
  s.family = G.family();
  s.rank = rep.rank();
  s.type = type_vector(rep);
  s.flag_count = G.size();
  for (uint32_t i = 0; i < rep.rank(); ++i) {
    ClosureResult sub = parabolic_or_full(rep, i);
    uint64_t order = sub.full ? G.size() : sub.elements.size();
    s.face_counts.push_back(G.size() / order);
    if (i == 0)
      s.vertex_kind = sub.full ? SubgroupKind{SubgroupTag::Full, G.size()}
                               : identify_subgroup(G, sub.elements);
    if (i == rep.rank() - 1)
      s.facet_kind = sub.full ? SubgroupKind{SubgroupTag::Full, G.size()}
                              : identify_subgroup(G, sub.elements);
  }
  s.orientable = orientable(rep);
  s.ip = intersection_property(rep);
  s.class_tag = (s.rank == 4 && s.family == Family::PSL)
                    ? classify_from_kinds(rep, s.vertex_kind, s.facet_kind)
                    : ClassTag::None;
  return s;
}

void write_flag_graph(const StringRep& rep, std::ostream& out) {
  if (rep.ctx->q() > 13)
    throw PreconditionFailed("flag graph export supported for q <= 13 only");
  require_valid_generating(rep);
  const GroupContext& G = *rep.ctx;
  // Flags are group elements; the monodromy generators act by left
  // multiplication, so flag u is i-adjacent to rho_i * u.
  for (uint32_t i = 0; i < rep.rank(); ++i)
    for (uint32_t u = 0; u < G.size(); ++u) {
      uint32_t v = G.mul(rep.gens[i], u);
      if (u < v) out << i << ' ' << u << ' ' << v << '\n';
    }
}

}  // namespace maniplex
