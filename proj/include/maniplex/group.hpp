#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "maniplex/field.hpp"

namespace maniplex {

enum class Family : uint8_t { PSL, PGL };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

// Row-major 2x2 matrix of field element indices.
struct Mat {
  uint32_t a = 0, b = 0, c = 0, d = 0;
  bool operator==(const Mat&) const = default;
};

// Canonical projective representative: for PSL over odd characteristic the
// sign is fixed so the first nonzero entry (row-major, coefficients compared
// lexicographically) is the smaller of the pair; for PGL and all even q the
// matrix is scaled so its first nonzero entry is 1. Throws BadDeterminant
// unless det = 1 (PSL) resp. det != 0 (PGL).
Mat canonicalize(const Field& F, Family family, Mat m);

class GroupContext;
using ContextPtr = std::shared_ptr<const GroupContext>;

// Result of a closure computation that may stop early once the subgroup is
// known to be the whole group. elements is empty iff full.
struct ClosureResult {
  bool full = false;
  std::vector<uint32_t> elements;
};

// Fully enumerated PSL_2(q) or PGL_2(q). Elements are canonical matrices
// interned in a table sorted by serialized canonical form; all APIs deal in
// table indices. Immutable after enumerate() returns; queries are safe for
// unrestricted concurrent use.
class GroupContext {
 public:
  static ContextPtr enumerate(uint32_t q, Family family);

  const Field& field() const { return field_; }
  Family family() const { return family_; }
  uint32_t q() const { return field_.order(); }
  uint32_t size() const { return static_cast<uint32_t>(packed_.size()); }
  uint32_t identity() const { return identity_; }

  Mat matrix(uint32_t index) const;
  uint32_t index_of(Mat m) const;  // canonicalizes first

  uint32_t mul(uint32_t g, uint32_t h) const {
    return mul_table_.empty() ? raw_mul(g, h)
                              : mul_table_[static_cast<size_t>(g) * packed_.size() + h];
  }
  uint32_t inverse(uint32_t g) const { return inverse_[g]; }
  uint32_t conj(uint32_t x, uint32_t g) const { return mul(mul(inverse_[g], x), g); }
  uint32_t element_order(uint32_t g) const;
  bool commutes(uint32_t g, uint32_t h) const { return mul(g, h) == mul(h, g); }
  const std::vector<uint32_t>& involutions() const { return involutions_; }

  // Projective line PG(1,q): points 0..q-1 are [x:1], point q is [1:0].
  uint32_t point_count() const { return q() + 1; }
  uint32_t apply(uint32_t g, uint32_t point) const;
  std::vector<uint32_t> fixed_points(uint32_t g) const;

  std::vector<uint32_t> centralizer(uint32_t g) const;

  // Subgroup generated by gens (breadth-first product saturation), sorted.
  std::vector<uint32_t> closure(std::span<const uint32_t> gens) const;
  // Exact closure while its size stays <= limit; nullopt once it exceeds it.
  std::optional<std::vector<uint32_t>> closure_limited(std::span<const uint32_t> gens,
                                                       size_t limit) const;
  ClosureResult closure_or_full(std::span<const uint32_t> gens) const;
  bool generates_full(std::span<const uint32_t> gens) const;
  // Every proper subgroup has order <= this bound.
  uint32_t largest_proper_order_bound() const { return proper_bound_; }

  // Automorphism machinery. Aut = PGammaL_2(q): inner conjugation by the
  // table (all of PGL for PGL contexts and even q), the diagonal twist by
  // diag(nu,1) with nu a non-square (PSL contexts, odd q), and the Frobenius
  // field automorphism applied entrywise.
  uint32_t frobenius(uint32_t g) const;
  bool has_diagonal_twist() const { return family_ == Family::PSL && field_.p() != 2; }
  uint32_t diagonal_twist(uint32_t g) const;
  // Smallest element of each Aut-orbit of involutions, ascending.
  const std::vector<uint32_t>& involution_orbit_reps() const;

  bool same_context(const GroupContext& other) const {
    return family_ == other.family_ && field_.same_field(other.field_);
  }

 private:
  GroupContext() = default;

  uint32_t raw_mul(uint32_t g, uint32_t h) const;
  uint32_t lookup(uint64_t packed) const;
  uint64_t sort_key(uint64_t packed) const;

  Field field_;
  Family family_ = Family::PSL;
  bool scale_canonical_ = false;  // PGL or even q: scale rule instead of sign rule
  std::vector<uint64_t> packed_;
  std::vector<uint32_t> dense_index_;  // q^4-sized direct lookup for small q
  std::unordered_map<uint64_t, uint32_t> map_index_;
  uint32_t identity_ = 0;
  uint32_t proper_bound_ = 0;
  std::vector<uint32_t> inverse_;
  std::vector<uint32_t> involutions_;
  std::vector<uint32_t> mul_table_;  // |G|^2 when |G| is small enough

  mutable std::once_flag frob_once_, twist_once_, orbit_once_;
  mutable std::vector<uint32_t> frob_perm_, twist_perm_, orbit_reps_;
};

// Dickson classification of a subgroup, by structural invariants.
enum class SubgroupTag : uint8_t {
  Trivial,
  Cyclic,
  ElementaryAbelian,
  Dihedral,
  Borel,
  A4,
  S4,
  A5,
  PSLSub,
  PGLSub,
  Full,
};

struct SubgroupKind {
  SubgroupTag tag = SubgroupTag::Trivial;
  uint64_t order = 1;
  uint32_t m = 0;          // Cyclic(m); Dihedral(m) has order 2m
  uint32_t prime = 0;      // ElementaryAbelian(prime, rank)
  uint32_t rank = 0;
  uint32_t subfield_q = 0;  // PSLSub / PGLSub

  bool operator==(const SubgroupKind&) const = default;
};

std::string to_string(const SubgroupKind& kind);

// elements must be sorted and closed under product and inverse; closedness is
// spot-checked in debug builds only.
SubgroupKind identify_subgroup(const GroupContext& G, std::span<const uint32_t> elements);

}  // namespace maniplex
