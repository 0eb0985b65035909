#include "maniplex/field.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "maniplex/errors.hpp"

namespace maniplex {

namespace {

constexpr uint32_t kMaxFieldOrder = 1024;

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p), coefficient i = degree i. Trailing zeros allowed.
using Poly = std::vector<uint32_t>;

int degree_of(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i]) return i;
  return -1;
}

uint32_t eval(const Poly& f, uint32_t x, uint32_t p) {
  uint64_t acc = 0;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    acc = (acc * x + f[i]) % p;
  return static_cast<uint32_t>(acc);
}

Poly poly_mul(const Poly& f, const Poly& g, uint32_t p) {
  Poly r(f.size() + g.size(), 0);
  for (size_t i = 0; i < f.size(); ++i) {
    if (!f[i]) continue;
    for (size_t j = 0; j < g.size(); ++j)
      r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(f[i]) * g[j]) % p);
  }
  return r;
}

// Reduce f modulo a monic polynomial m, in place.
void poly_mod(Poly& f, const Poly& m, uint32_t p) {
  const int dm = degree_of(m);
  assert(dm >= 0 && m[dm] == 1);
  for (int i = degree_of(f); i >= dm; i = degree_of(f)) {
    const uint32_t c = f[i];
    for (int j = 0; j <= dm; ++j) {
      uint64_t sub = static_cast<uint64_t>(c) * m[j] % p;
      f[i - dm + j] = static_cast<uint32_t>((f[i - dm + j] + p - sub) % p);
    }
  }
}

bool poly_divides(const Poly& d, Poly f, uint32_t p) {
  poly_mod(f, d, p);
  return degree_of(f) < 0;
}

// Degree-d monic candidates indexed by their low-degree coefficient tuple.
Poly monic_from_key(uint64_t key, uint32_t d, uint32_t p) {
  Poly f(d + 1, 0);
  f[d] = 1;
  for (uint32_t i = 0; i < d; ++i) {
    uint64_t w = 1;
    for (uint32_t t = i + 1; t < d; ++t) w *= p;
    f[i] = static_cast<uint32_t>(key / w % p);
  }
  return f;
}

bool is_irreducible(const Poly& f, uint32_t p, uint32_t k) {
  for (uint32_t x = 0; x < p; ++x)
    if (eval(f, x, p) == 0) return false;
  if (k <= 3) return true;  // no root <=> irreducible for degrees 2 and 3
  for (uint32_t d = 2; d <= k / 2; ++d) {
    uint64_t count = 1;
    for (uint32_t t = 0; t < d; ++t) count *= p;
    for (uint64_t key = 0; key < count; ++key)
      if (poly_divides(monic_from_key(key, d, p), f, p)) return false;
  }
  return true;
}

}  // namespace

Field Field::make(uint32_t p, uint32_t k) {
  if (!is_prime(p)) throw CompositeP("p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw BadDegree("extension degree must be at least 1");

  uint64_t q64 = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q64 *= p;
    if (q64 > kMaxFieldOrder)
      throw TooLarge("field order " + std::to_string(p) + "^" + std::to_string(k) +
                     " exceeds the supported bound");
  }
  const uint32_t q = static_cast<uint32_t>(q64);

  Field F;
  F.p_ = p;
  F.k_ = k;
  F.q_ = q;

  if (k == 1) {
    F.modulus_ = {0, 1};  // x: arithmetic degenerates to integers mod p
  } else {
    uint64_t count = 1;
    for (uint32_t t = 0; t < k; ++t) count *= p;
    for (uint64_t key = 0; key < count; ++key) {
      Poly f = monic_from_key(key, k, p);
      if (is_irreducible(f, p, k)) {
        F.modulus_ = f;
        break;
      }
    }
    assert(!F.modulus_.empty());
  }

  // Digits of index e, low degree first.
  auto digit = [&](uint32_t e, uint32_t i) {
    uint32_t w = e;
    for (uint32_t t = 0; t < i; ++t) w /= p;
    return w % p;
  };

  F.neg_.resize(q);
  F.lex_.resize(q);
  for (uint32_t e = 0; e < q; ++e) {
    uint32_t n = 0, w = 1;
    for (uint32_t i = 0; i < k; ++i) {
      n += ((p - digit(e, i)) % p) * w;
      w *= p;
    }
    F.neg_[e] = n;
    uint32_t key = 0;
    for (uint32_t i = 0; i < k; ++i) key = key * p + digit(e, i);
    F.lex_[e] = key;
  }

  F.by_lex_.assign(q, 0);
  for (uint32_t e = 0; e < q; ++e) F.by_lex_[F.lex_[e]] = e;

  F.add_.resize(static_cast<size_t>(q) * q);
  for (uint32_t x = 0; x < q; ++x)
    for (uint32_t y = 0; y < q; ++y) {
      uint32_t s = 0, w = 1;
      for (uint32_t i = 0; i < k; ++i) {
        s += ((digit(x, i) + digit(y, i)) % p) * w;
        w *= p;
      }
      F.add_[static_cast<size_t>(x) * q + y] = s;
    }

  F.mul_.resize(static_cast<size_t>(q) * q);
  for (uint32_t x = 0; x < q; ++x) {
    Poly fx(k);
    for (uint32_t i = 0; i < k; ++i) fx[i] = digit(x, i);
    for (uint32_t y = 0; y < q; ++y) {
      Poly fy(k);
      for (uint32_t i = 0; i < k; ++i) fy[i] = digit(y, i);
      Poly prod = poly_mul(fx, fy, p);
      poly_mod(prod, F.modulus_, p);
      uint32_t e = 0, w = 1;
      for (uint32_t i = 0; i < k; ++i) {
        e += (i < prod.size() ? prod[i] : 0) * w;
        w *= p;
      }
      F.mul_[static_cast<size_t>(x) * q + y] = e;
    }
  }

  F.inv_.assign(q, 0);
  for (uint32_t x = 1; x < q; ++x) {
    // Fermat: x^(q-2)
    uint32_t acc = 1, base = x;
    uint64_t e = q - 2;
    while (e) {
      if (e & 1) acc = F.mul_[static_cast<size_t>(acc) * q + base];
      base = F.mul_[static_cast<size_t>(base) * q + base];
      e >>= 1;
    }
    assert(F.mul_[static_cast<size_t>(x) * q + acc] == 1);
    F.inv_[x] = acc;
  }

  return F;
}

uint32_t Field::inv(uint32_t x) const {
  if (x == 0) throw DivisionByZero("inverse of zero");
  return inv_[x];
}

uint32_t Field::pow(uint32_t x, uint64_t e) const {
  uint32_t acc = one(), base = x;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::optional<uint32_t> Field::sqrt_minus_one() const {
  const uint32_t minus_one = neg_[one()];
  for (uint32_t key = 0; key < q_; ++key) {
    uint32_t x = by_lex_[key];
    if (mul(x, x) == minus_one) return x;
  }
  return std::nullopt;
}

FieldElement Field::decode(uint32_t x) const {
  FieldElement e;
  e.coeffs.resize(k_);
  for (uint32_t i = 0; i < k_; ++i) {
    e.coeffs[i] = x % p_;
    x /= p_;
  }
  return e;
}

uint32_t Field::encode(const FieldElement& e) const {
  if (e.coeffs.size() != k_)
    throw PreconditionFailed("coefficient list must have length " + std::to_string(k_));
  uint32_t x = 0, w = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    if (e.coeffs[i] >= p_) throw PreconditionFailed("coefficient not reduced mod p");
    x += e.coeffs[i] * w;
    w *= p_;
  }
  return x;
}

FieldElement Field::add(const FieldElement& x, const FieldElement& y) const {
  return decode(add(encode(x), encode(y)));
}
FieldElement Field::sub(const FieldElement& x, const FieldElement& y) const {
  return decode(sub(encode(x), encode(y)));
}
FieldElement Field::mul(const FieldElement& x, const FieldElement& y) const {
  return decode(mul(encode(x), encode(y)));
}
FieldElement Field::neg(const FieldElement& x) const { return decode(neg(encode(x))); }
FieldElement Field::inv(const FieldElement& x) const { return decode(inv(encode(x))); }

}  // namespace maniplex
