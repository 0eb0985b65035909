#include <algorithm>
#include <cassert>
#include <random>
#include <string>
#include <unordered_set>

#include "maniplex/errors.hpp"
#include "maniplex/group.hpp"

namespace maniplex {

namespace {

bool contains(std::span<const uint32_t> sorted, uint32_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

#ifndef NDEBUG
// Spot check closedness: products of sampled pairs stay inside.
void debug_check_subgroup(const GroupContext& G, std::span<const uint32_t> H) {
  assert(std::is_sorted(H.begin(), H.end()));
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<size_t> pick(0, H.size() - 1);
  for (int t = 0; t < 200; ++t) {
    uint32_t x = H[pick(rng)], y = H[pick(rng)];
    if (!contains(H, G.mul(x, y)))
      throw NotASubgroup("input is not closed under products");
  }
}
#endif

std::vector<uint32_t> derived_subgroup(const GroupContext& G, std::span<const uint32_t> H) {
  std::unordered_set<uint32_t> comms;
  for (uint32_t x : H)
    for (uint32_t y : H) {
      uint32_t c = G.mul(G.mul(G.inverse(x), G.inverse(y)), G.mul(x, y));
      comms.insert(c);
    }
  std::vector<uint32_t> gens(comms.begin(), comms.end());
  std::sort(gens.begin(), gens.end());
  return G.closure(gens);
}

uint64_t subgroup_order_psl(uint64_t qp) { return qp * (qp * qp - 1) / (qp % 2 == 1 ? 2 : 1); }
uint64_t subgroup_order_pgl(uint64_t qp) { return qp * (qp * qp - 1); }

}  // namespace

std::string to_string(const SubgroupKind& kind) {
  switch (kind.tag) {
    case SubgroupTag::Trivial:
      return "trivial";
    case SubgroupTag::Cyclic:
      return "cyclic(" + std::to_string(kind.m) + ")";
    case SubgroupTag::ElementaryAbelian:
      return "elab(" + std::to_string(kind.prime) + "," + std::to_string(kind.rank) + ")";
    case SubgroupTag::Dihedral:
      return "dihedral(" + std::to_string(kind.m) + ")";
    case SubgroupTag::Borel:
      return "borel(" + std::to_string(kind.order) + ")";
    case SubgroupTag::A4:
      return "a4";
    case SubgroupTag::S4:
      return "s4";
    case SubgroupTag::A5:
      return "a5";
    case SubgroupTag::PSLSub:
      return "psl(" + std::to_string(kind.subfield_q) + ")";
    case SubgroupTag::PGLSub:
      return "pgl(" + std::to_string(kind.subfield_q) + ")";
    case SubgroupTag::Full:
      return "full";
  }
  return "?";
}

SubgroupKind identify_subgroup(const GroupContext& G, std::span<const uint32_t> H) {
  if (H.empty()) throw NotASubgroup("empty element set");
#ifndef NDEBUG
  debug_check_subgroup(G, H);
#endif
  const uint64_t n = H.size();
  SubgroupKind kind;
  kind.order = n;

  if (n == G.size()) {
    kind.tag = SubgroupTag::Full;
    return kind;
  }
  if (n == 1) {
    kind.tag = SubgroupTag::Trivial;
    return kind;
  }

  std::vector<uint32_t> orders(H.size());
  for (size_t i = 0; i < H.size(); ++i) orders[i] = G.element_order(H[i]);

  bool abelian = true;
  for (size_t i = 0; i < H.size() && abelian; ++i)
    for (size_t j = i + 1; j < H.size(); ++j)
      if (!G.commutes(H[i], H[j])) {
        abelian = false;
        break;
      }

  if (abelian) {
    uint32_t max_order = *std::max_element(orders.begin(), orders.end());
    if (max_order == n) {
      kind.tag = SubgroupTag::Cyclic;
      kind.m = static_cast<uint32_t>(n);
      return kind;
    }
    uint32_t ell = 0;
    bool uniform_prime = true;
    for (size_t i = 0; i < H.size(); ++i) {
      if (H[i] == G.identity()) continue;
      if (ell == 0) ell = orders[i];
      if (orders[i] != ell) uniform_prime = false;
    }
    if (uniform_prime && ell != 0) {
      uint32_t rank = 0;
      uint64_t pw = 1;
      while (pw < n) {
        pw *= ell;
        ++rank;
      }
      if (pw == n) {
        kind.tag = SubgroupTag::ElementaryAbelian;
        kind.prime = ell;
        kind.rank = rank;
        return kind;
      }
    }
    throw Unclassified("abelian subgroup of order " + std::to_string(n) +
                       " is neither cyclic nor elementary abelian");
  }

  // Dihedral of order 2m: a cyclic subgroup of index 2 inverted by an
  // involution outside it.
  if (n % 2 == 0) {
    const uint32_t m = static_cast<uint32_t>(n / 2);
    for (size_t i = 0; i < H.size(); ++i) {
      if (orders[i] != m) continue;
      const uint32_t x = H[i];
      std::unordered_set<uint32_t> powers;
      uint32_t acc = G.identity();
      for (uint32_t t = 0; t < m; ++t) {
        powers.insert(acc);
        acc = G.mul(acc, x);
      }
      const uint32_t xinv = G.inverse(x);
      for (size_t j = 0; j < H.size(); ++j) {
        if (orders[j] != 2 || powers.count(H[j])) continue;
        const uint32_t t = H[j];
        if (G.mul(G.mul(t, x), t) == xinv) {
          kind.tag = SubgroupTag::Dihedral;
          kind.m = m;
          return kind;
        }
      }
    }
  }

  if (n == 12 || n == 24 || n == 60) {
    const auto derived = derived_subgroup(G, H);
    if (n == 12 && derived.size() == 4) {
      kind.tag = SubgroupTag::A4;
      return kind;
    }
    if (n == 24 && derived.size() == 12) {
      kind.tag = SubgroupTag::S4;
      return kind;
    }
    if (n == 60 && derived.size() == 60) {
      kind.tag = SubgroupTag::A5;
      return kind;
    }
  }

  // Subfield projective groups.
  {
    const uint32_t p = G.field().p(), r = G.field().degree();
    for (uint32_t a = 1; a <= r; ++a) {
      if (r % a != 0) continue;
      uint64_t qa = 1;
      for (uint32_t t = 0; t < a; ++t) qa *= p;
      if (qa < 4) continue;  // PSL_2(2), PSL_2(3) and their PGLs are caught above
      if (n == subgroup_order_psl(qa)) {
        const auto derived = derived_subgroup(G, H);
        if (derived.size() == n) {
          kind.tag = SubgroupTag::PSLSub;
          kind.subfield_q = static_cast<uint32_t>(qa);
          return kind;
        }
      }
      const bool pgl_possible = (2 * a <= r && r % (2 * a) == 0) || G.family() == Family::PGL;
      if (pgl_possible && n == subgroup_order_pgl(qa) && qa % 2 == 1) {
        const auto derived = derived_subgroup(G, H);
        if (derived.size() == subgroup_order_psl(qa)) {
          kind.tag = SubgroupTag::PGLSub;
          kind.subfield_q = static_cast<uint32_t>(qa);
          return kind;
        }
      }
    }
  }

  // Semidirect product of an elementary abelian p-group with a cyclic group:
  // the p-elements form a normal elementary abelian Sylow subgroup with
  // cyclic quotient.
  {
    const uint32_t p = G.field().p();
    std::vector<uint32_t> E;
    for (size_t i = 0; i < H.size(); ++i)
      if (H[i] == G.identity() || orders[i] == p) E.push_back(H[i]);
    uint64_t esize = E.size(), pw = 1;
    bool p_power = false;
    while (pw <= esize) {
      if (pw == esize) p_power = true;
      pw *= p;
    }
    if (p_power && esize > 1 && n % esize == 0 && (n / esize) % p != 0) {
      bool closed = true, abelian_e = true, normal = true;
      for (uint32_t x : E) {
        for (uint32_t y : E) {
          if (!contains(E, G.mul(x, y))) closed = false;
          if (!G.commutes(x, y)) abelian_e = false;
        }
        if (!closed || !abelian_e) break;
      }
      if (closed && abelian_e) {
        for (uint32_t h : H) {
          for (uint32_t x : E)
            if (!contains(E, G.conj(x, h))) {
              normal = false;
              break;
            }
          if (!normal) break;
        }
      }
      if (closed && abelian_e && normal) {
        const uint64_t m = n / esize;
        for (uint32_t h : H) {
          // order of the coset hE in H/E
          uint64_t t = 1;
          uint32_t acc = h;
          while (!contains(E, acc)) {
            acc = G.mul(acc, h);
            ++t;
          }
          if (t == m) {
            kind.tag = SubgroupTag::Borel;
            return kind;
          }
        }
      }
    }
  }

  throw Unclassified("no classification branch matched a subgroup of order " +
                     std::to_string(n));
}

}  // namespace maniplex
