#pragma once

#include <cstdint>
#include <vector>

#include "maniplex/group.hpp"

namespace maniplex {

// Ordered tuple of involution indices (rho_0, ..., rho_{n-1}) over an
// enumerated group context. Construction only enforces rank >= 2 and index
// range; validity as a string representation is checked by validate().
struct StringRep {
  ContextPtr ctx;
  std::vector<uint32_t> gens;

  StringRep(ContextPtr context, std::vector<uint32_t> generators);

  uint32_t rank() const { return static_cast<uint32_t>(gens.size()); }
};

enum class ViolationKind : uint8_t {
  NotInvolution,
  Duplicate,
  FarCommute,
  DegenerateProduct,
  NotGenerating,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int i = -1;
  int j = -1;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  bool ok = false;
  std::vector<Violation> failures;

  bool has(ViolationKind kind) const;
};

ValidationReport validate(const StringRep& rep, bool require_generation);

// Orders of consecutive generator products (the Schlafli type).
std::vector<uint32_t> type_vector(const StringRep& rep);

// Subgroup generated by all generators except rho_i.
std::vector<uint32_t> parabolic(const StringRep& rep, uint32_t i);
ClosureResult parabolic_or_full(const StringRep& rep, uint32_t i);

// For all J, K subsets of positions: <rho_J> meet <rho_K> = <rho_{J meet K}>.
bool intersection_property(const StringRep& rep);

StringRep dual(const StringRep& rep);

// Lexicographically smallest image of the tuple under Aut(G) = PGammaL_2(q).
StringRep canonical_form(const StringRep& rep);
bool are_isomorphic(const StringRep& a, const StringRep& b);

}  // namespace maniplex
