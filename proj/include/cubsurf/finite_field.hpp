#pragma once

#include <cstdint>
#include <vector>

#include "cubsurf/modpoly.hpp"
#include "cubsurf/rational.hpp"

namespace cubsurf {

// F_q with q = p^k <= 2^22, modulus the first monic irreducible of degree k
// when coefficient lists (top degree first) are ordered lexicographically.
// Elements are indices: 0 is zero, 1 + e stands for g^e with g the first
// primitive element.
class FiniteField {
 public:
  using Elt = std::uint32_t;

  explicit FiniteField(std::uint64_t p, unsigned k = 1);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }
  const modp::Poly& modulus() const { return modulus_; }

  static constexpr Elt zero() { return 0; }
  Elt one() const { return 1; }
  Elt from_int(std::uint64_t x) const { return prime_[x % p_]; }
  Elt from_rational(const Rational& x) const;  // throws bad_prime if p | den
  // coefficient vector over F_p, lowest degree first
  Elt from_coeffs(const std::vector<std::uint64_t>& c) const;
  std::vector<std::uint64_t> coeffs(Elt a) const;

  Elt add(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;  // throws on zero
  Elt pow(Elt a, std::uint64_t e) const;
  bool is_square(Elt a) const;  // zero counts as a square

 private:
  std::uint64_t p_, q_;
  unsigned k_;
  modp::Poly modulus_;
  std::vector<std::uint32_t> exp_;   // g^e as packed base-p digits
  std::vector<Elt> packed_to_elt_;   // inverse of exp_
  std::vector<Elt> zech_;            // 1 + g^e
  std::vector<Elt> prime_;           // images of 0..p-1
};

}  // namespace cubsurf
