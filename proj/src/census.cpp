#include "maniplex/census.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <map>
#include <thread>
#include <tuple>

#include "maniplex/analysis.hpp"
#include "maniplex/errors.hpp"

namespace maniplex {

namespace {

std::vector<uint32_t> intersect(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Sorted involutions commuting with each involution, keyed by element index.
class CommutingTable {
 public:
  explicit CommutingTable(const GroupContext& G) {
    const auto& invs = G.involutions();
    position_.assign(G.size(), UINT32_MAX);
    for (uint32_t i = 0; i < invs.size(); ++i) position_[invs[i]] = i;
    lists_.resize(invs.size());
    for (uint32_t i = 0; i < invs.size(); ++i)
      for (uint32_t cand : invs)
        if (G.commutes(invs[i], cand)) lists_[i].push_back(cand);
  }

  const std::vector<uint32_t>& of(uint32_t involution) const {
    return lists_[position_[involution]];
  }

 private:
  std::vector<uint32_t> position_;
  std::vector<std::vector<uint32_t>> lists_;
};

struct TaskOutput {
  std::vector<std::vector<uint32_t>> found;
  uint64_t nodes = 0;
  uint64_t closures = 0;
};

// One task = a fixed (rho_0, rho_1) branch.
void run_branch(const GroupContext& G, const CommutingTable& comm, uint32_t rank, uint32_t r0,
                uint32_t r1, TaskOutput& out) {
  auto leaf = [&](std::vector<uint32_t> gens) {
    ++out.closures;
    if (G.generates_full(gens)) out.found.push_back(std::move(gens));
  };

  if (rank == 3) {
    for (uint32_t r2 : comm.of(r0)) {
      if (r2 == r0 || r2 == r1) continue;
      ++out.nodes;
      leaf({r0, r1, r2});
    }
    return;
  }

  // rho_3 is the tightest slot: it must commute with both rho_0 and rho_1.
  const auto cand01 = intersect(comm.of(r0), comm.of(r1));
  if (rank == 4) {
    for (uint32_t r3 : cand01) {
      if (r3 == r0 || r3 == r1) continue;
      ++out.nodes;
      for (uint32_t r2 : comm.of(r0)) {
        if (r2 == r0 || r2 == r1 || r2 == r3) continue;
        ++out.nodes;
        leaf({r0, r1, r2, r3});
      }
    }
    return;
  }

  assert(rank == 5);
  for (uint32_t r3 : cand01) {
    if (r3 == r0 || r3 == r1) continue;
    ++out.nodes;
    for (uint32_t r2 : comm.of(r0)) {
      if (r2 == r0 || r2 == r1 || r2 == r3) continue;
      ++out.nodes;
      for (uint32_t r4 : intersect(cand01, comm.of(r2))) {
        if (r4 == r0 || r4 == r1 || r4 == r2 || r4 == r3) continue;
        ++out.nodes;
        leaf({r0, r1, r2, r3, r4});
      }
    }
  }
}

using Fingerprint = std::tuple<std::vector<uint32_t>, std::vector<std::string>, bool>;

Fingerprint fingerprint_of(const StringRep& rep) {
  std::vector<std::string> kinds;
  for (uint32_t i = 0; i < rep.rank(); ++i) {
    ClosureResult sub = parabolic_or_full(rep, i);
    kinds.push_back(sub.full ? "full" : to_string(identify_subgroup(*rep.ctx, sub.elements)));
  }
  std::sort(kinds.begin(), kinds.end());
  return {type_vector(rep), std::move(kinds), intersection_property(rep)};
}

}  // namespace

CensusResult search(const ContextPtr& ctx, uint32_t rank, unsigned threads) {
  if (rank < 3 || rank > 5) throw PreconditionFailed("census supports ranks 3, 4 and 5");
  const auto start = std::chrono::steady_clock::now();
  const GroupContext& G = *ctx;

  CensusResult result;
  result.q = G.q();
  result.family = G.family();
  result.rank = rank;

  const CommutingTable comm(G);

  std::vector<std::pair<uint32_t, uint32_t>> tasks;
  for (uint32_t r0 : G.involution_orbit_reps())
    for (uint32_t r1 : G.involutions())
      if (r1 != r0) tasks.emplace_back(r0, r1);

  std::vector<TaskOutput> outputs(tasks.size());
  if (threads <= 1) {
    for (size_t t = 0; t < tasks.size(); ++t)
      run_branch(G, comm, rank, tasks[t].first, tasks[t].second, outputs[t]);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1))
          run_branch(G, comm, rank, tasks[t].first, tasks[t].second, outputs[t]);
      });
    for (auto& th : pool) th.join();
  }

  // Deduplicate up to isomorphism: cheap fingerprint buckets first, full
  // canonical forms only inside a bucket.
  std::map<Fingerprint, std::vector<std::vector<uint32_t>>> buckets;
  for (size_t t = 0; t < tasks.size(); ++t) {
    result.stats.nodes += outputs[t].nodes;
    result.stats.closures += outputs[t].closures;
    for (auto& gens : outputs[t].found) {
      StringRep rep(ctx, std::move(gens));
      auto& bucket = buckets[fingerprint_of(rep)];
      auto canon = canonical_form(rep).gens;
      if (std::find(bucket.begin(), bucket.end(), canon) == bucket.end())
        bucket.push_back(std::move(canon));
    }
  }

  std::vector<std::vector<uint32_t>> all;
  for (auto& [fp, bucket] : buckets)
    for (auto& canon : bucket) all.push_back(std::move(canon));
  std::sort(all.begin(), all.end());
  for (auto& gens : all) result.reps.emplace_back(ctx, std::move(gens));

  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

bool TheoremReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

std::string describe(const StringRep& rep) {
  std::string s = "gens=[";
  for (size_t i = 0; i < rep.gens.size(); ++i)
    s += (i ? "," : "") + std::to_string(rep.gens[i]);
  return s + "]";
}

}  // namespace

TheoremReport verify_structure(const ContextPtr& ctx, unsigned threads) {
  const GroupContext& G = *ctx;
  TheoremReport report;
  report.q = G.q();
  report.family = G.family();

  const CensusResult rank4 = search(ctx, 4, threads);
  std::vector<ManiplexSummary> summaries;
  summaries.reserve(rank4.reps.size());
  for (const auto& rep : rank4.reps) summaries.push_back(summarize(rep));

  const bool psl = G.family() == Family::PSL;

  {
    CheckResult check;
    check.name = "facet-kinds";
    check.scope = "all " + std::to_string(rank4.reps.size()) + " rank-4 census reps";
    auto allowed = [&](const SubgroupKind& k) {
      if (k.tag == SubgroupTag::S4 || k.tag == SubgroupTag::A5 || k.tag == SubgroupTag::Full)
        return true;
      // PGL contexts also admit the index-2 PSL_2(q) as a parabolic.
      return !psl && k.tag == SubgroupTag::PSLSub && k.subfield_q == G.q();
    };
    for (size_t i = 0; i < summaries.size(); ++i)
      if (!allowed(summaries[i].vertex_kind) || !allowed(summaries[i].facet_kind)) {
        check.pass = false;
        check.counterexamples.push_back(describe(rank4.reps[i]) + " vertex=" +
                                        to_string(summaries[i].vertex_kind) + " facet=" +
                                        to_string(summaries[i].facet_kind));
      }
    report.checks.push_back(std::move(check));
  }

  {
    CheckResult check;
    check.name = "rank-5-empty";
    const CensusResult rank5 = search(ctx, 5, threads);
    check.scope = "exhaustive rank-5 census";
    for (const auto& rep : rank5.reps) {
      check.pass = false;
      check.counterexamples.push_back(describe(rep));
    }
    report.checks.push_back(std::move(check));
  }

  if (psl) {
    // Adjoining an involution commuting with rho_0 and rho_1 to a triple
    // generating a dihedral subgroup never reaches the whole group.
    CheckResult check;
    check.name = "dihedral-extension-proper";
    constexpr int kSampleCap = 200;
    int sampled = 0;
    const auto& invs = G.involutions();
    const CommutingTable comm(G);
    for (uint32_t r0 : invs) {
      for (uint32_t r1 : invs) {
        if (r1 == r0) continue;
        for (uint32_t r2 : comm.of(r0)) {
          if (r2 == r0 || r2 == r1) continue;
          auto sub = G.closure_or_full(std::vector<uint32_t>{r0, r1, r2});
          if (sub.full || identify_subgroup(G, sub.elements).tag != SubgroupTag::Dihedral)
            continue;
          for (uint32_t r3 : intersect(comm.of(r0), comm.of(r1))) {
            if (r3 == r0 || r3 == r1 || r3 == r2) continue;
            ++sampled;
            if (G.generates_full(std::vector<uint32_t>{r0, r1, r2, r3})) {
              check.pass = false;
              check.counterexamples.push_back("gens=[" + std::to_string(r0) + "," +
                                              std::to_string(r1) + "," + std::to_string(r2) +
                                              "," + std::to_string(r3) + "]");
            }
            if (sampled >= kSampleCap) break;
          }
          if (sampled >= kSampleCap) break;
        }
        if (sampled >= kSampleCap) break;
      }
      if (sampled >= kSampleCap) break;
    }
    check.scope = "first " + std::to_string(sampled) +
                  " dihedral triples with commuting involutions";
    report.checks.push_back(std::move(check));
  }

  if (psl) {
    CheckResult check;
    check.name = "class-3-count";
    size_t class3 = 0;
    for (size_t i = 0; i < summaries.size(); ++i)
      if (summaries[i].class_tag == ClassTag::Class3) {
        ++class3;
        if (G.q() != 11 && G.q() != 19)
          check.counterexamples.push_back(describe(rank4.reps[i]));
      }
    const size_t expected = (G.q() == 11 || G.q() == 19) ? 1 : 0;
    check.scope = "rank-4 census, expected " + std::to_string(expected) + " class-3 rep(s)";
    check.pass = class3 == expected;
    report.checks.push_back(std::move(check));
  }

  if (psl && G.q() > 3) {
    CheckResult check;
    check.name = "non-orientable";
    check.scope = "all rank-4 census reps";
    for (size_t i = 0; i < summaries.size(); ++i)
      if (summaries[i].orientable) {
        check.pass = false;
        check.counterexamples.push_back(describe(rank4.reps[i]));
      }
    report.checks.push_back(std::move(check));
  }

  if (psl) {
    CheckResult check;
    check.name = "consecutive-orders-above-2";
    check.scope = "all rank-4 census reps";
    for (size_t i = 0; i < summaries.size(); ++i)
      for (uint32_t sigma : summaries[i].type)
        if (sigma <= 2) {
          check.pass = false;
          check.counterexamples.push_back(describe(rank4.reps[i]));
        }
    report.checks.push_back(std::move(check));
  }

  return report;
}

}  // namespace maniplex
