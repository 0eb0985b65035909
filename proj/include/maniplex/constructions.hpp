#pragma once

#include <cstdint>

#include "maniplex/string_rep.hpp"

namespace maniplex {

// Parameters of the dihedral extension of a rank-3 representation over
// PSL_2(q), q odd: alpha = +-1 with q = alpha (mod 4), n = (q - alpha)/2
// (always even), and k the order of rho_0 rho_1, which must be an odd
// divisor of n.
struct ExtensionParams {
  int alpha = 0;
  uint32_t n = 0;
  uint32_t k = 0;
};

ExtensionParams extension_params(const StringRep& rep3);

// Rank-3 map of type {3, p} over PSL_2(p) from explicit generator matrices,
// for primes p = 1 (mod 12).
StringRep class1_map(uint32_t p);

// Rank-4 extension of a rank-3 representation: appends the involution that
// commutes with rho_0 and rho_1 such that the 4-tuple validates with
// generation, choosing the smallest element index among the candidates.
StringRep extend_map(const StringRep& rep3);

// Rank-4 representation over PSL_2(p) whose facet group is an A5, for primes
// p != 19 with p = +-1 (mod 20): finds an involution triple with product
// orders (5, 3, 2) generating an A5, then extends it.
StringRep class2_rank4(uint32_t p);

}  // namespace maniplex
