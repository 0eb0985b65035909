#include "maniplex/string_rep.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "maniplex/errors.hpp"

namespace maniplex {

StringRep::StringRep(ContextPtr context, std::vector<uint32_t> generators)
    : ctx(std::move(context)), gens(std::move(generators)) {
  if (!ctx) throw PreconditionFailed("string representation needs a group context");
  if (gens.size() < 2) throw RankMismatch("rank must be at least 2");
  for (uint32_t g : gens)
    if (g >= ctx->size()) throw PreconditionFailed("generator index out of range");
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotInvolution:
      return "not_involution";
    case ViolationKind::Duplicate:
      return "duplicate";
    case ViolationKind::FarCommute:
      return "far_commute";
    case ViolationKind::DegenerateProduct:
      return "degenerate_product";
    case ViolationKind::NotGenerating:
      return "not_generating";
  }
  return "?";
}

bool ValidationReport::has(ViolationKind kind) const {
  for (const auto& v : failures)
    if (v.kind == kind) return true;
  return false;
}

ValidationReport validate(const StringRep& rep, bool require_generation) {
  const GroupContext& G = *rep.ctx;
  ValidationReport report;
  const int n = static_cast<int>(rep.rank());

  for (int i = 0; i < n; ++i)
    if (G.element_order(rep.gens[i]) != 2)
      report.failures.push_back({ViolationKind::NotInvolution, i, -1});

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rep.gens[i] == rep.gens[j]) {
        // For far pairs the degenerate product rho_i rho_j = 1 is the
        // essential failure; adjacent equal pairs are plain duplicates.
        if (j - i > 1)
          report.failures.push_back({ViolationKind::DegenerateProduct, i, j});
        report.failures.push_back({ViolationKind::Duplicate, i, j});
        continue;
      }
      if (j - i > 1) {
        uint32_t prod = G.mul(rep.gens[i], rep.gens[j]);
        if (G.mul(prod, prod) != G.identity())
          report.failures.push_back({ViolationKind::FarCommute, i, j});
      }
    }

  if (require_generation && report.failures.empty() && !G.generates_full(rep.gens))
    report.failures.push_back({ViolationKind::NotGenerating, -1, -1});

  report.ok = report.failures.empty();
  return report;
}

namespace {

void require_valid(const StringRep& rep, bool with_generation) {
  auto report = validate(rep, with_generation);
  if (!report.ok) {
    std::string what = "representation fails validation:";
    for (const auto& v : report.failures) what += " " + to_string(v.kind);
    throw NotValidated(what);
  }
}

}  // namespace

std::vector<uint32_t> type_vector(const StringRep& rep) {
  require_valid(rep, false);
  const GroupContext& G = *rep.ctx;
  std::vector<uint32_t> type;
  for (uint32_t i = 0; i + 1 < rep.rank(); ++i)
    type.push_back(G.element_order(G.mul(rep.gens[i], rep.gens[i + 1])));
  return type;
}

std::vector<uint32_t> parabolic(const StringRep& rep, uint32_t i) {
  if (i >= rep.rank()) throw PreconditionFailed("parabolic index out of range");
  std::vector<uint32_t> gens;
  for (uint32_t j = 0; j < rep.rank(); ++j)
    if (j != i) gens.push_back(rep.gens[j]);
  return rep.ctx->closure(gens);
}

ClosureResult parabolic_or_full(const StringRep& rep, uint32_t i) {
  if (i >= rep.rank()) throw PreconditionFailed("parabolic index out of range");
  std::vector<uint32_t> gens;
  for (uint32_t j = 0; j < rep.rank(); ++j)
    if (j != i) gens.push_back(rep.gens[j]);
  return rep.ctx->closure_or_full(gens);
}

bool intersection_property(const StringRep& rep) {
  require_valid(rep, true);
  const GroupContext& G = *rep.ctx;
  const uint32_t n = rep.rank();
  if (n > 12) throw TooLarge("intersection property check limited to rank <= 12");
  const uint32_t subsets = 1u << n;

  // One closure per subset of generator positions, shared by all pairs.
  std::vector<ClosureResult> sub(subsets);
  for (uint32_t mask = 0; mask < subsets; ++mask) {
    std::vector<uint32_t> gens;
    for (uint32_t i = 0; i < n; ++i)
      if (mask & (1u << i)) gens.push_back(rep.gens[i]);
    sub[mask] = G.closure_or_full(gens);
  }

  std::vector<uint32_t> meet;
  for (uint32_t j = 0; j < subsets; ++j)
    for (uint32_t k = 0; k < subsets; ++k) {
      const ClosureResult& J = sub[j];
      const ClosureResult& K = sub[k];
      const ClosureResult& JK = sub[j & k];
      if (J.full && K.full) {
        if (!JK.full) return false;
        continue;
      }
      const std::vector<uint32_t>* lhs;
      if (J.full) {
        lhs = &K.elements;
      } else if (K.full) {
        lhs = &J.elements;
      } else {
        meet.clear();
        std::set_intersection(J.elements.begin(), J.elements.end(), K.elements.begin(),
                              K.elements.end(), std::back_inserter(meet));
        lhs = &meet;
      }
      if (JK.full || *lhs != JK.elements) return false;
    }
  return true;
}

StringRep dual(const StringRep& rep) {
  std::vector<uint32_t> gens(rep.gens.rbegin(), rep.gens.rend());
  return StringRep(rep.ctx, std::move(gens));
}

StringRep canonical_form(const StringRep& rep) {
  require_valid(rep, true);
  const GroupContext& G = *rep.ctx;
  const uint32_t n = G.size();
  const uint32_t k = G.field().degree();
  const uint32_t rank = rep.rank();

  std::vector<uint32_t> best;
  std::vector<uint32_t> base = rep.gens;
  std::vector<uint32_t> cand(rank);

  for (uint32_t j = 0; j < k; ++j) {
    if (j > 0)
      for (uint32_t i = 0; i < rank; ++i) base[i] = G.frobenius(base[i]);

    for (int twist = 0; twist < (G.has_diagonal_twist() ? 2 : 1); ++twist) {
      std::vector<uint32_t> tuple = base;
      if (twist)
        for (uint32_t i = 0; i < rank; ++i) tuple[i] = G.diagonal_twist(tuple[i]);

      for (uint32_t g = 0; g < n; ++g) {
        const uint32_t gi = G.inverse(g);
        cand[0] = G.mul(G.mul(gi, tuple[0]), g);
        if (!best.empty() && cand[0] > best[0]) continue;
        bool smaller = best.empty() || cand[0] < best[0];
        bool equal_so_far = !smaller;
        uint32_t i = 1;
        for (; i < rank; ++i) {
          cand[i] = G.mul(G.mul(gi, tuple[i]), g);
          if (equal_so_far) {
            if (cand[i] > best[i]) break;
            if (cand[i] < best[i]) {
              smaller = true;
              equal_so_far = false;
            }
          }
        }
        if (i == rank && smaller) best = cand;
      }
    }
  }

  assert(!best.empty());
  return StringRep(rep.ctx, std::move(best));
}

bool are_isomorphic(const StringRep& a, const StringRep& b) {
  if (!a.ctx->same_context(*b.ctx))
    throw MixedContexts("representations live over different group contexts");
  if (a.rank() != b.rank()) return false;
  return canonical_form(a).gens == canonical_form(b).gens;
}

}  // namespace maniplex
