#include "maniplex/group.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "maniplex/errors.hpp"

namespace maniplex {

namespace {

constexpr uint64_t kMaxGroupOrder = 1200000;
constexpr uint32_t kMulTableMax = 4096;
constexpr uint32_t kDenseIndexMaxQ = 49;
constexpr uint32_t kNoIndex = UINT32_MAX;

inline uint64_t pack(Mat m) {
  return (static_cast<uint64_t>(m.a) << 48) | (static_cast<uint64_t>(m.b) << 32) |
         (static_cast<uint64_t>(m.c) << 16) | m.d;
}

inline Mat unpack(uint64_t v) {
  return Mat{static_cast<uint32_t>(v >> 48) & 0xffffu, static_cast<uint32_t>(v >> 32) & 0xffffu,
             static_cast<uint32_t>(v >> 16) & 0xffffu, static_cast<uint32_t>(v) & 0xffffu};
}

inline uint32_t det(const Field& F, Mat m) {
  return F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
}

// Canonical projective representative, determinant already validated.
Mat canonical_project(const Field& F, bool scale_rule, Mat m) {
  if (scale_rule) {
    uint32_t lead = m.a ? m.a : m.b ? m.b : m.c ? m.c : m.d;
    if (lead != F.one()) {
      uint32_t s = F.inv(lead);
      m = Mat{F.mul(m.a, s), F.mul(m.b, s), F.mul(m.c, s), F.mul(m.d, s)};
    }
  } else {
    uint32_t lead = m.a ? m.a : m.b ? m.b : m.c ? m.c : m.d;
    if (F.lex_key(F.neg(lead)) < F.lex_key(lead))
      m = Mat{F.neg(m.a), F.neg(m.b), F.neg(m.c), F.neg(m.d)};
  }
  return m;
}

uint64_t group_order(uint32_t q, Family family) {
  uint64_t full = static_cast<uint64_t>(q) * (static_cast<uint64_t>(q) * q - 1);
  if (family == Family::PSL && q % 2 == 1) return full / 2;
  return full;
}

}  // namespace

std::string to_string(Family f) { return f == Family::PSL ? "psl" : "pgl"; }

Family family_from_string(const std::string& s) {
  if (s == "psl" || s == "PSL") return Family::PSL;
  if (s == "pgl" || s == "PGL") return Family::PGL;
  throw PreconditionFailed("unknown family '" + s + "' (expected psl or pgl)");
}

Mat canonicalize(const Field& F, Family family, Mat m) {
  const uint32_t d = det(F, m);
  if (family == Family::PSL) {
    if (d != F.one()) throw BadDeterminant("determinant must be 1 for PSL");
  } else {
    if (d == 0) throw BadDeterminant("determinant must be nonzero for PGL");
  }
  const bool scale_rule = family == Family::PGL || F.p() == 2;
  return canonical_project(F, scale_rule, m);
}

ContextPtr GroupContext::enumerate(uint32_t q, Family family) {
  // Factor q = p^k.
  if (q < 2) throw CompositeP("q must be a prime power >= 2");
  uint32_t p = 0;
  for (uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  uint32_t k = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw CompositeP("q = " + std::to_string(q) + " is not a prime power");

  const uint64_t n_expect = group_order(q, family);
  if (n_expect > kMaxGroupOrder)
    throw TooLarge("group of order " + std::to_string(n_expect) +
                   " exceeds the enumeration cap");

  std::shared_ptr<GroupContext> ctx(new GroupContext());
  GroupContext& G = *ctx;
  G.field_ = Field::make(p, k);
  G.family_ = family;
  G.scale_canonical_ = family == Family::PGL || p == 2;
  const Field& F = G.field_;

  std::vector<uint64_t> raw;
  if (family == Family::PSL && p != 2) {
    // All determinant-1 matrices; each projective element appears as +-M.
    raw.reserve(2 * n_expect);
    for (uint32_t a = 1; a < q; ++a) {
      const uint32_t ia = F.inv(a);
      for (uint32_t b = 0; b < q; ++b)
        for (uint32_t c = 0; c < q; ++c) {
          const uint32_t d = F.mul(ia, F.add(F.one(), F.mul(b, c)));
          raw.push_back(pack(canonical_project(F, false, Mat{a, b, c, d})));
        }
    }
    for (uint32_t b = 1; b < q; ++b) {
      const uint32_t c = F.neg(F.inv(b));
      for (uint32_t d = 0; d < q; ++d)
        raw.push_back(pack(canonical_project(F, false, Mat{0, b, c, d})));
    }
  } else {
    // One canonical representative per projective class: leading entry 1.
    raw.reserve(n_expect);
    for (uint32_t b = 0; b < q; ++b)
      for (uint32_t c = 0; c < q; ++c) {
        const uint32_t bc = F.mul(b, c);
        for (uint32_t d = 0; d < q; ++d)
          if (d != bc) raw.push_back(pack(Mat{F.one(), b, c, d}));
      }
    for (uint32_t c = 1; c < q; ++c)
      for (uint32_t d = 0; d < q; ++d) raw.push_back(pack(Mat{0, F.one(), c, d}));
  }

  // Deterministic table order: sort by serialized canonical form, i.e. by the
  // lexicographic key of the entries in row-major order.
  std::vector<std::pair<uint64_t, uint64_t>> keyed;
  keyed.reserve(raw.size());
  for (uint64_t v : raw) keyed.emplace_back(ctx->sort_key(v), v);
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());

  G.packed_.reserve(keyed.size());
  for (auto& [key, v] : keyed) G.packed_.push_back(v);
  if (G.packed_.size() != n_expect)
    throw Error("enumeration produced " + std::to_string(G.packed_.size()) +
                " elements, expected " + std::to_string(n_expect));

  const uint32_t n = G.size();
  if (q <= kDenseIndexMaxQ) {
    G.dense_index_.assign(static_cast<size_t>(q) * q * q * q, kNoIndex);
    for (uint32_t i = 0; i < n; ++i) {
      Mat m = unpack(G.packed_[i]);
      size_t key = ((static_cast<size_t>(m.a) * q + m.b) * q + m.c) * q + m.d;
      G.dense_index_[key] = i;
    }
  } else {
    G.map_index_.reserve(2 * n);
    for (uint32_t i = 0; i < n; ++i) G.map_index_.emplace(G.packed_[i], i);
  }

  G.identity_ = G.lookup(pack(canonical_project(F, G.scale_canonical_,
                                                Mat{F.one(), 0, 0, F.one()})));

  G.inverse_.resize(n);
  for (uint32_t i = 0; i < n; ++i) {
    Mat m = unpack(G.packed_[i]);
    Mat inv{m.d, F.neg(m.b), F.neg(m.c), m.a};  // adjugate: same projective class
    G.inverse_[i] = G.lookup(pack(canonical_project(F, G.scale_canonical_, inv)));
  }

  if (n <= kMulTableMax) {
    G.mul_table_.resize(static_cast<size_t>(n) * n);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j)
        G.mul_table_[static_cast<size_t>(i) * n + j] = G.raw_mul(i, j);
  }

  for (uint32_t i = 0; i < n; ++i)
    if (i != G.identity_ && G.mul(i, i) == G.identity_) G.involutions_.push_back(i);

  // Largest order a proper subgroup can have, from the Dickson list. Safe
  // overestimates only: used to stop closures early and declare the full
  // group.
  {
    const uint64_t gsize = n;
    std::vector<uint64_t> cand;
    if (family == Family::PGL && p != 2) {
      cand.push_back(gsize / 2);  // PSL_2(q) has index 2
    }
    const uint64_t g2 = (p == 2) ? 1 : 2;
    cand.push_back(static_cast<uint64_t>(q) * (q - 1) / g2);  // Borel
    cand.push_back(2 * static_cast<uint64_t>(q + 1) / g2);    // dihedral
    cand.push_back(2 * static_cast<uint64_t>(q - 1) / g2);
    cand.push_back(q);  // cyclic / elementary abelian
    cand.push_back(q + 1);
    cand.push_back(12);
    cand.push_back(24);
    cand.push_back(60);
    for (uint32_t a = 1; a < k; ++a)
      if (k % a == 0) {
        uint64_t qa = 1;
        for (uint32_t t = 0; t < a; ++t) qa *= p;
        cand.push_back(group_order(static_cast<uint32_t>(qa), Family::PSL));
        if (k % (2 * a) == 0) cand.push_back(group_order(static_cast<uint32_t>(qa), Family::PGL));
      }
    uint64_t best = 1;
    for (uint64_t c : cand)
      if (c < gsize && c > best) best = c;
    G.proper_bound_ = static_cast<uint32_t>(best);
  }

  return ctx;
}

uint64_t GroupContext::sort_key(uint64_t packed) const {
  Mat m = unpack(packed);
  const Field& F = field_;
  return (static_cast<uint64_t>(F.lex_key(m.a)) << 48) |
         (static_cast<uint64_t>(F.lex_key(m.b)) << 32) |
         (static_cast<uint64_t>(F.lex_key(m.c)) << 16) | F.lex_key(m.d);
}

uint32_t GroupContext::lookup(uint64_t packed) const {
  if (!dense_index_.empty()) {
    Mat m = unpack(packed);
    const uint32_t q = field_.order();
    size_t key = ((static_cast<size_t>(m.a) * q + m.b) * q + m.c) * q + m.d;
    uint32_t i = dense_index_[key];
    assert(i != kNoIndex);
    return i;
  }
  auto it = map_index_.find(packed);
  assert(it != map_index_.end());
  return it->second;
}

Mat GroupContext::matrix(uint32_t index) const { return unpack(packed_[index]); }

uint32_t GroupContext::index_of(Mat m) const {
  return lookup(pack(canonicalize(field_, family_, m)));
}

uint32_t GroupContext::raw_mul(uint32_t g, uint32_t h) const {
  const Field& F = field_;
  Mat x = unpack(packed_[g]), y = unpack(packed_[h]);
  Mat r{F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
        F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
  return lookup(pack(canonical_project(F, scale_canonical_, r)));
}

uint32_t GroupContext::element_order(uint32_t g) const {
  uint32_t acc = g, order = 1;
  while (acc != identity_) {
    acc = mul(acc, g);
    ++order;
  }
  return order;
}

uint32_t GroupContext::apply(uint32_t g, uint32_t point) const {
  const Field& F = field_;
  Mat m = unpack(packed_[g]);
  uint32_t x, y;
  if (point == q()) {
    x = F.one();
    y = 0;
  } else {
    x = point;
    y = F.one();
  }
  uint32_t nx = F.add(F.mul(m.a, x), F.mul(m.b, y));
  uint32_t ny = F.add(F.mul(m.c, x), F.mul(m.d, y));
  if (ny == 0) return q();
  return F.mul(nx, F.inv(ny));
}

std::vector<uint32_t> GroupContext::fixed_points(uint32_t g) const {
  std::vector<uint32_t> fixed;
  for (uint32_t pt = 0; pt <= q(); ++pt)
    if (apply(g, pt) == pt) fixed.push_back(pt);
  return fixed;
}

std::vector<uint32_t> GroupContext::centralizer(uint32_t g) const {
  std::vector<uint32_t> result;
  for (uint32_t h = 0; h < size(); ++h)
    if (commutes(g, h)) result.push_back(h);
  return result;
}

std::optional<std::vector<uint32_t>> GroupContext::closure_limited(
    std::span<const uint32_t> gens, size_t limit) const {
  std::vector<uint8_t> seen(size(), 0);
  std::vector<uint32_t> members;
  members.reserve(std::min(limit + 1, static_cast<size_t>(size())));
  seen[identity_] = 1;
  members.push_back(identity_);
  for (uint32_t g : gens)
    if (!seen[g]) {
      seen[g] = 1;
      members.push_back(g);
    }
  if (members.size() > limit) return std::nullopt;
  for (size_t i = 0; i < members.size(); ++i) {
    for (uint32_t g : gens) {
      uint32_t y = mul(members[i], g);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
        if (members.size() > limit) return std::nullopt;
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<uint32_t> GroupContext::closure(std::span<const uint32_t> gens) const {
  auto r = closure_limited(gens, size());
  assert(r.has_value());
  return std::move(*r);
}

ClosureResult GroupContext::closure_or_full(std::span<const uint32_t> gens) const {
  auto r = closure_limited(gens, proper_bound_);
  if (!r) return ClosureResult{true, {}};
  return ClosureResult{false, std::move(*r)};
}

bool GroupContext::generates_full(std::span<const uint32_t> gens) const {
  return !closure_limited(gens, proper_bound_).has_value();
}

uint32_t GroupContext::frobenius(uint32_t g) const {
  if (field_.degree() == 1) return g;
  std::call_once(frob_once_, [this] {
    const Field& F = field_;
    frob_perm_.resize(size());
    for (uint32_t i = 0; i < size(); ++i) {
      Mat m = unpack(packed_[i]);
      Mat fm{F.pow(m.a, F.p()), F.pow(m.b, F.p()), F.pow(m.c, F.p()), F.pow(m.d, F.p())};
      frob_perm_[i] = lookup(pack(canonical_project(F, scale_canonical_, fm)));
    }
  });
  return frob_perm_[g];
}

uint32_t GroupContext::diagonal_twist(uint32_t g) const {
  assert(has_diagonal_twist());
  std::call_once(twist_once_, [this] {
    const Field& F = field_;
    // Smallest non-square nu by lexicographic order.
    std::vector<uint8_t> is_square(F.order(), 0);
    for (uint32_t x = 0; x < F.order(); ++x) is_square[F.mul(x, x)] = 1;
    uint32_t nu = 0, best_key = UINT32_MAX;
    for (uint32_t x = 1; x < F.order(); ++x)
      if (!is_square[x] && F.lex_key(x) < best_key) {
        best_key = F.lex_key(x);
        nu = x;
      }
    assert(nu != 0);
    const uint32_t inu = F.inv(nu);
    twist_perm_.resize(size());
    for (uint32_t i = 0; i < size(); ++i) {
      Mat m = unpack(packed_[i]);
      // diag(nu,1)^-1 * M * diag(nu,1)
      Mat t{m.a, F.mul(m.b, inu), F.mul(m.c, nu), m.d};
      twist_perm_[i] = lookup(pack(canonical_project(F, scale_canonical_, t)));
    }
  });
  return twist_perm_[g];
}

const std::vector<uint32_t>& GroupContext::involution_orbit_reps() const {
  std::call_once(orbit_once_, [this] {
    std::vector<uint8_t> visited(size(), 0);
    for (uint32_t x : involutions_) {
      if (visited[x]) continue;
      orbit_reps_.push_back(x);
      // Orbit under Aut: union of conjugacy classes closed under the
      // Frobenius and diagonal-twist maps.
      std::vector<uint32_t> seeds{x};
      while (!seeds.empty()) {
        uint32_t s = seeds.back();
        seeds.pop_back();
        if (visited[s]) continue;
        for (uint32_t g = 0; g < size(); ++g) visited[conj(s, g)] = 1;
        uint32_t f = frobenius(s);
        if (!visited[f]) seeds.push_back(f);
        if (has_diagonal_twist()) {
          uint32_t t = diagonal_twist(s);
          if (!visited[t]) seeds.push_back(t);
        }
      }
    }
  });
  return orbit_reps_;
}

}  // namespace maniplex
