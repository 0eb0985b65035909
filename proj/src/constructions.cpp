#include "maniplex/constructions.hpp"

#include <cassert>
#include <string>

#include "maniplex/errors.hpp"

namespace maniplex {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_basic_valid(const StringRep& rep) {
  auto report = validate(rep, false);
  if (!report.ok) throw NotValidated("input representation is not a valid string tuple");
}

}  // namespace

ExtensionParams extension_params(const StringRep& rep3) {
  if (rep3.rank() != 3) throw RankMismatch("extension starts from a rank-3 representation");
  if (rep3.ctx->family() != Family::PSL)
    throw PreconditionFailed("extension is defined over PSL contexts");
  require_basic_valid(rep3);
  const GroupContext& G = *rep3.ctx;
  const uint32_t q = G.q();
  if (q % 2 == 0) throw PreconditionFailed("extension requires odd q");

  ExtensionParams params;
  params.alpha = (q % 4 == 1) ? 1 : -1;
  params.n = (q - params.alpha) / 2;
  assert(params.n % 2 == 0);
  params.k = G.element_order(G.mul(rep3.gens[0], rep3.gens[1]));
  if (params.k % 2 == 0)
    throw PreconditionFailed("order of rho_0 rho_1 must be odd, got " +
                             std::to_string(params.k));
  if (params.n % params.k != 0)
    throw PreconditionFailed("order of rho_0 rho_1 must divide (q - alpha)/2");
  const uint32_t x = G.element_order(G.mul(rep3.gens[1], rep3.gens[2]));
  if (x < 3)
    throw PreconditionFailed("order of rho_1 rho_2 must be at least 3, got " +
                             std::to_string(x));
  return params;
}

StringRep class1_map(uint32_t p) {
  if (!is_prime(p) || p % 12 != 1)
    throw BadCongruence("p = " + std::to_string(p) + " is not a prime = 1 (mod 12)");
  ContextPtr ctx = GroupContext::enumerate(p, Family::PSL);
  const Field& F = ctx->field();
  const uint32_t a = *F.sqrt_minus_one();

  const uint32_t r0 = ctx->index_of(Mat{0, F.one(), F.neg(F.one()), 0});
  const uint32_t r1 = ctx->index_of(Mat{a, 0, F.one(), F.neg(a)});
  const uint32_t r2 = ctx->index_of(Mat{F.neg(a), 0, 0, a});

  StringRep rep(ctx, {r0, r1, r2});
  assert(validate(rep, true).ok);
  return rep;
}

StringRep extend_map(const StringRep& rep3) {
  extension_params(rep3);  // checks rank, family, parity, divisibility
  const GroupContext& G = *rep3.ctx;
  const uint32_t r0 = rep3.gens[0], r1 = rep3.gens[1], r2 = rep3.gens[2];

  for (uint32_t z : G.involutions()) {
    if (z == r0 || z == r1 || z == r2) continue;
    if (!G.commutes(z, r0) || !G.commutes(z, r1)) continue;
    StringRep candidate(rep3.ctx, {r0, r1, r2, z});
    if (validate(candidate, true).ok) {
      assert(!G.commutes(z, r2));
      return candidate;
    }
  }
  throw NotExtendible("no commuting involution yields a valid generating extension");
}

StringRep class2_rank4(uint32_t p) {
  if (!is_prime(p) || p == 19 || (p % 20 != 1 && p % 20 != 19))
    throw BadCongruence("p = " + std::to_string(p) +
                        " is not a prime = +-1 (mod 20) distinct from 19");
  ContextPtr ctx = GroupContext::enumerate(p, Family::PSL);
  const GroupContext& G = *ctx;
  const auto& invs = G.involutions();

  for (uint32_t r0 : invs) {
    for (uint32_t r1 : invs) {
      if (r1 == r0 || G.element_order(G.mul(r0, r1)) != 5) continue;
      for (uint32_t r2 : invs) {
        if (r2 == r0 || r2 == r1 || !G.commutes(r0, r2)) continue;
        if (G.element_order(G.mul(r1, r2)) != 3) continue;
        auto sub = G.closure_limited(std::vector<uint32_t>{r0, r1, r2}, 60);
        if (!sub || sub->size() != 60) continue;
        if (identify_subgroup(G, *sub).tag != SubgroupTag::A5) continue;
        return extend_map(StringRep(ctx, {r0, r1, r2}));
      }
    }
  }
  throw SearchExhausted("no involution triple generating an A5 was found");
}

}  // namespace maniplex
