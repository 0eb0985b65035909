#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace maniplex {

// Element of GF(p^k) as its coefficient list, lowest degree first.
struct FieldElement {
  std::vector<uint32_t> coeffs;
  bool operator==(const FieldElement&) const = default;
};

// GF(p^k) with all arithmetic backed by dense tables. Elements are handled
// as indices in [0, q); the base-p digits of an index are the polynomial
// coefficients, lowest degree first. The modulus is the lexicographically
// smallest monic irreducible of degree k (coefficients compared low-degree
// first), so field construction is deterministic. Immutable once built and
// safe for concurrent reads.
class Field {
 public:
  static Field make(uint32_t p, uint32_t k);

  uint32_t p() const { return p_; }
  uint32_t degree() const { return k_; }
  uint32_t order() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t zero() const { return 0; }
  uint32_t one() const { return 1; }

  uint32_t add(uint32_t x, uint32_t y) const { return add_[x * q_ + y]; }
  uint32_t sub(uint32_t x, uint32_t y) const { return add_[x * q_ + neg_[y]]; }
  uint32_t mul(uint32_t x, uint32_t y) const { return mul_[x * q_ + y]; }
  uint32_t neg(uint32_t x) const { return neg_[x]; }
  uint32_t inv(uint32_t x) const;
  uint32_t pow(uint32_t x, uint64_t e) const;

  // Integer key whose natural order equals lexicographic order on
  // coefficient lists (low-degree coefficient most significant).
  uint32_t lex_key(uint32_t x) const { return lex_[x]; }

  // The element a with a^2 = -1 whose coefficient list is lexicographically
  // smallest, if one exists.
  std::optional<uint32_t> sqrt_minus_one() const;

  FieldElement decode(uint32_t x) const;
  uint32_t encode(const FieldElement& e) const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement inv(const FieldElement& x) const;

  bool same_field(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  Field() = default;

  uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<uint32_t> modulus_;  // k+1 coefficients, low degree first, monic
  std::vector<uint32_t> add_, mul_, neg_, inv_, lex_, by_lex_;
};

}  // namespace maniplex
