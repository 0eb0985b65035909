#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maniplex/string_rep.hpp"

namespace maniplex {

struct CensusStats {
  uint64_t nodes = 0;     // partial assignments explored
  uint64_t closures = 0;  // generation tests performed
  double wall_ms = 0;
};

// All valid generating rank-n string representations up to isomorphism,
// as canonical forms sorted lexicographically.
struct CensusResult {
  uint32_t q = 0;
  Family family = Family::PSL;
  uint32_t rank = 0;
  std::vector<StringRep> reps;
  CensusStats stats;
};

// Exhaustive backtracking over involutions with rho_0 restricted to one
// representative per Aut(G)-orbit and far-commutation pruned through
// precomputed centralizer involution lists. Every valid generating rank-n
// tuple is isomorphic to exactly one listed representation. Identical output
// for any thread count.
CensusResult search(const ContextPtr& ctx, uint32_t rank, unsigned threads = 1);

struct CheckResult {
  std::string name;
  std::string scope;
  bool pass = true;
  std::vector<std::string> counterexamples;
};

struct TheoremReport {
  uint32_t q = 0;
  Family family = Family::PSL;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

// Executable verification of the structural facts the census is expected to
// satisfy at this q (facet groups, rank bounds, class counts, orientability).
TheoremReport verify_structure(const ContextPtr& ctx, unsigned threads = 1);

}  // namespace maniplex
