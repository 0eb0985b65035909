// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fails. Heavier than the unit tests; censuses and contexts are cached and
// shared across criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "maniplex/analysis.hpp"
#include "maniplex/census.hpp"
#include "maniplex/cli.hpp"
#include "maniplex/constructions.hpp"
#include "maniplex/errors.hpp"
#include "naive_search.hpp"

using namespace maniplex;

namespace {

struct CheckFailure {
  std::string what;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw CheckFailure{what};
}

template <typename T, typename U>
void expect_eq(const T& got, const U& want, const std::string& what) {
  if (!(got == static_cast<T>(want))) {
    std::ostringstream os;
    os << what << " (got " << got << ", want " << want << ")";
    throw CheckFailure{os.str()};
  }
}

std::map<std::pair<uint32_t, Family>, ContextPtr> g_ctx;
std::map<std::tuple<uint32_t, Family, uint32_t>, CensusResult> g_census;

ContextPtr ctx(uint32_t q, Family f = Family::PSL) {
  auto& slot = g_ctx[{q, f}];
  if (!slot) slot = GroupContext::enumerate(q, f);
  return slot;
}

const CensusResult& census(uint32_t q, uint32_t rank, Family f = Family::PSL) {
  auto key = std::make_tuple(q, f, rank);
  auto it = g_census.find(key);
  if (it == g_census.end()) it = g_census.emplace(key, search(ctx(q, f), rank)).first;
  return it->second;
}

// 1. The class-3 representations are exactly the 11-cell and the 57-cell.
void criterion_class3_uniqueness() {
  {
    const CensusResult& c11 = census(11, 4);
    std::vector<ManiplexSummary> class3;
    for (const auto& rep : c11.reps) {
      ManiplexSummary s = summarize(rep);
      if (s.class_tag == ClassTag::Class3) class3.push_back(s);
    }
    expect_eq(class3.size(), size_t{1}, "exactly one class-3 rep at q = 11");
    const ManiplexSummary& s = class3.front();
    expect(s.type == std::vector<uint32_t>{3, 5, 3}, "11-cell type is {3,5,3}");
    expect_eq(s.face_counts[0], 11, "11 vertices");
    expect_eq(s.face_counts[3], 11, "11 facets");
    expect(s.vertex_kind.tag == SubgroupTag::A5 && s.facet_kind.tag == SubgroupTag::A5,
           "11-cell parabolic kinds are A5/A5");
    expect(s.ip, "11-cell satisfies the intersection property");
  }
  {
    const CensusResult& c19 = census(19, 4);
    std::vector<ManiplexSummary> class3;
    for (const auto& rep : c19.reps) {
      ManiplexSummary s = summarize(rep);
      if (s.class_tag == ClassTag::Class3) class3.push_back(s);
    }
    expect_eq(class3.size(), size_t{1}, "exactly one class-3 rep at q = 19");
    expect_eq(class3.front().face_counts[0], 57, "57 vertices");
    expect_eq(class3.front().face_counts[3], 57, "57 facets");
  }
}

// 2. No rank-4 representations over even q, checked through the CLI as well.
void criterion_even_q() {
  for (uint32_t q : {2u, 4u, 8u}) {
    expect(census(q, 4).reps.empty(),
           "rank-4 census must be empty at q = " + std::to_string(q));
    std::ostringstream out, err;
    int code = run_cli({"census", "-q", std::to_string(q), "--family", "psl", "--rank", "4"},
                       out, err);
    expect_eq(code, 0, "census CLI exit status at q = " + std::to_string(q));
    expect(out.str().empty(), "census CLI output must be empty at q = " + std::to_string(q));
  }
}

// 3. No rank-5 representations.
void criterion_rank5() {
  for (uint32_t q : {5u, 7u, 9u, 11u, 13u})
    expect(census(q, 5).reps.empty(),
           "rank-5 census must be empty at q = " + std::to_string(q));
}

// 4. Rank-3 existence boundary.
void criterion_rank3_boundary() {
  for (uint32_t q : {2u, 3u, 7u, 9u})
    expect(census(q, 3).reps.empty(),
           "rank-3 census must be empty at q = " + std::to_string(q));
  for (uint32_t q : {4u, 5u, 8u, 11u, 13u})
    expect(!census(q, 3).reps.empty(),
           "rank-3 census must be non-empty at q = " + std::to_string(q));
}

// 5. The type {3,p} construction and its rank-4 extension.
void criterion_class1() {
  for (uint32_t p : {13u, 37u, 61u, 73u, 97u, 109u}) {
    StringRep rank3 = class1_map(p);
    expect(validate(rank3, true).ok, "construction validates at p = " + std::to_string(p));
    expect(type_vector(rank3) == std::vector<uint32_t>{3, p},
           "type is {3,p} at p = " + std::to_string(p));

    StringRep rank4 = extend_map(rank3);
    expect(validate(rank4, true).ok, "extension validates at p = " + std::to_string(p));
    expect(classify(rank4) == ClassTag::Class1,
           "extension is class 1 at p = " + std::to_string(p));
    expect_eq(face_count(rank4, 3), 1, "one facet at p = " + std::to_string(p));
    expect_eq(face_count(rank4, 0), 1, "one vertex at p = " + std::to_string(p));
  }
}

// 6. The rank-4 construction with an A5 facet group.
void criterion_class2() {
  for (uint32_t p : {41u, 61u}) {
    StringRep rep = class2_rank4(p);
    expect(validate(rep, true).ok, "construction validates at p = " + std::to_string(p));
    expect(classify(rep) == ClassTag::Class2, "class 2 at p = " + std::to_string(p));
    ManiplexSummary s = summarize(rep);
    expect(s.facet_kind.tag == SubgroupTag::A5, "facet kind A5 at p = " + std::to_string(p));
    expect_eq(s.face_counts[3], rep.ctx->size() / 60,
              "facet count |G|/60 at p = " + std::to_string(p));
    if (p == 41) expect_eq(s.face_counts[3], 574, "574 facets at p = 41");
  }
}

// 7. Vertex and facet groups across the census are S4, A5 or the full group.
void criterion_facet_theorem() {
  for (uint32_t q : {5u, 7u, 9u, 11u, 13u}) {
    for (const auto& rep : census(q, 4).reps) {
      ClassTag tag = classify(rep);  // throws FacetTheoremViolation on any other kind
      (void)tag;
      ManiplexSummary s = summarize(rep);
      auto ok = [](const SubgroupKind& k) {
        return k.tag == SubgroupTag::S4 || k.tag == SubgroupTag::A5 ||
               k.tag == SubgroupTag::Full;
      };
      expect(ok(s.vertex_kind) && ok(s.facet_kind),
             "parabolic kinds at q = " + std::to_string(q));
    }
  }
}

// 8. Centralizer and centre structure.
void criterion_dickson_suite() {
  for (uint32_t q : {5u, 7u, 9u, 11u, 13u}) {
    auto G = ctx(q);
    for (uint32_t r : G->involutions()) {
      auto cent = G->centralizer(r);
      SubgroupKind kind = identify_subgroup(*G, cent);
      const uint32_t n_plus = (q + 1) / 2, n_minus = (q - 1) / 2;
      bool dihedral_ok = kind.tag == SubgroupTag::Dihedral &&
                         (kind.m == n_plus || kind.m == n_minus);
      // D_4 is the Klein four-group, reported under its abelian tag.
      bool klein_ok = (n_plus == 2 || n_minus == 2) &&
                      kind.tag == SubgroupTag::ElementaryAbelian && kind.order == 4;
      expect(dihedral_ok || klein_ok,
             "centralizer is maximal dihedral at q = " + std::to_string(q));
    }

    std::mt19937 rng(2024);
    std::uniform_int_distribution<uint32_t> pick(0, G->size() - 1);
    for (int t = 0; t < 40; ++t) {
      auto sub = G->closure_or_full(std::vector<uint32_t>{pick(rng), pick(rng)});
      if (sub.full) continue;
      const auto& H = sub.elements;
      bool abelian = true;
      for (size_t i = 0; i < H.size() && abelian; ++i)
        for (size_t j = i + 1; j < H.size(); ++j)
          if (!G->commutes(H[i], H[j])) {
            abelian = false;
            break;
          }
      if (abelian) continue;
      size_t centre = 0;
      for (uint32_t x : H) {
        bool central = true;
        for (uint32_t y : H)
          if (!G->commutes(x, y)) {
            central = false;
            break;
          }
        if (central) ++centre;
      }
      expect(centre <= 2, "centre of a non-abelian subgroup at q = " + std::to_string(q));
    }
  }
}

// 9. The pruned census equals the naive exhaustive scan.
void criterion_oracle_equivalence() {
  for (uint32_t q : {4u, 5u, 7u, 9u}) {
    auto G = ctx(q);
    for (uint32_t rank : {3u, 4u}) {
      std::set<std::vector<uint32_t>> naive;
      for (const auto& gens : testing::naive_search(*G, rank))
        naive.insert(canonical_form(StringRep(G, gens)).gens);
      std::set<std::vector<uint32_t>> pruned;
      for (const auto& rep : census(q, rank).reps) pruned.insert(rep.gens);
      expect(naive == pruned, "oracle equivalence at q = " + std::to_string(q) + ", rank = " +
                                  std::to_string(rank));
    }
  }
}

// 10. Non-orientability across the rank-4 census.
void criterion_non_orientable() {
  for (uint32_t q : {11u, 13u, 19u})
    for (const auto& rep : census(q, 4).reps)
      expect(!orientable(rep), "non-orientable at q = " + std::to_string(q));
}

}  // namespace

int main() {
  const std::pair<std::string, std::function<void()>> criteria[] = {
      {"class-3 uniqueness (11-cell at q=11, 57-cell at q=19)", criterion_class3_uniqueness},
      {"rank-4 non-existence for even q in {2,4,8}", criterion_even_q},
      {"rank-5 non-existence for q in {5,7,9,11,13}", criterion_rank5},
      {"rank-3 existence boundary", criterion_rank3_boundary},
      {"type {3,p} construction and extension, p in {13,...,109}", criterion_class1},
      {"A5-facet construction at p in {41,61}", criterion_class2},
      {"facet theorem over the full census", criterion_facet_theorem},
      {"centralizer / centre structure suite", criterion_dickson_suite},
      {"oracle equivalence with the naive scan", criterion_oracle_equivalence},
      {"non-orientability of the rank-4 census", criterion_non_orientable},
  };

  int failures = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "pass", detail;
    try {
      fn();
    } catch (const CheckFailure& f) {
      verdict = "FAIL";
      detail = f.what;
      ++failures;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("exception: ") + e.what();
      ++failures;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    std::printf("[%2d] %s  %s (%.0f ms)%s%s\n", index, verdict.c_str(), name.c_str(), ms,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }

  if (failures == 0)
    std::printf("acceptance: all %d criteria passed\n", index);
  else
    std::printf("acceptance: %d of %d criteria FAILED\n", failures, index);
  return failures == 0 ? 0 : 1;
}
