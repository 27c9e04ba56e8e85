#include "cubsurf/finite_field.hpp"

#include "cubsurf/error.hpp"

namespace cubsurf {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t pack(const modp::Poly& f, std::uint64_t p) {
  std::uint64_t v = 0, w = 1;
  for (auto c : f.c) {
    v += c * w;
    w *= p;
  }
  return static_cast<std::uint32_t>(v);
}

modp::Poly unpack(std::uint64_t v, std::uint64_t p, unsigned k) {
  std::vector<std::uint64_t> c(k);
  for (unsigned j = 0; j < k; ++j, v /= p) c[j] = v % p;
  return modp::Poly(p, c);
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p, unsigned k) : p_(p), q_(1), k_(k) {
  require(modp::is_prime(p), ErrorCode::invalid_argument, "field characteristic must be prime");
  require(k >= 1 && k <= 12, ErrorCode::invalid_argument, "extension degree must be 1..12");
  for (unsigned j = 0; j < k; ++j) {
    q_ *= p;
    require(q_ <= (1u << 22), ErrorCode::budget_exceeded, "field too large for table arithmetic");
  }
  // first monic irreducible: coefficient list c_{k-1}..c_0 read as a base-p number
  for (std::uint64_t n = 0;; ++n) {
    modp::Poly f = unpack(n, p, k);
    f.c.resize(k, 0);
    f.c.push_back(1);
    if (k == 1 || modp::is_irreducible(f)) {
      modulus_ = f;
      break;
    }
  }
  auto factors = prime_divisors(q_ - 1);
  auto is_primitive = [&](const modp::Poly& g) {
    if (g.is_zero()) return false;
    for (auto r : factors)
      if (modp::powmod(g, Integer(static_cast<unsigned long>((q_ - 1) / r)), modulus_).is_one()) return false;
    return true;
  };
  modp::Poly gen;
  for (std::uint64_t v = 1; v < q_; ++v) {
    modp::Poly g = unpack(v, p, k);
    if (q_ == 2 || is_primitive(g)) {
      gen = g;
      break;
    }
  }
  exp_.resize(q_ - 1);
  packed_to_elt_.assign(q_, 0);
  if (k == 1) {
    std::uint64_t g = gen.c.empty() ? 0 : gen.c[0], cur = 1;
    for (std::uint64_t e = 0; e + 1 < q_; ++e) {
      exp_[e] = static_cast<std::uint32_t>(cur);
      cur = modp::mulmod(cur, g, p);
    }
  } else {
    modp::Poly cur = modp::Poly::constant(1, p);
    for (std::uint64_t e = 0; e + 1 < q_; ++e) {
      exp_[e] = pack(cur, p);
      cur = (cur * gen) % modulus_;
    }
  }
  for (std::uint64_t e = 0; e + 1 < q_; ++e) {
    require(packed_to_elt_[exp_[e]] == 0, ErrorCode::internal, "generator is not primitive");
    packed_to_elt_[exp_[e]] = static_cast<Elt>(e + 1);
  }
  zech_.resize(q_ - 1);
  for (std::uint64_t e = 0; e + 1 < q_; ++e) {
    std::uint64_t v = exp_[e];
    std::uint64_t low = (v % p + 1) % p;
    zech_[e] = packed_to_elt_[v - v % p + low];
  }
  prime_.resize(p);
  for (std::uint64_t x = 0; x < p; ++x) prime_[x] = packed_to_elt_[x];
}

FiniteField::Elt FiniteField::from_rational(const Rational& x) const { return from_int(modp::reduce(x, p_)); }

FiniteField::Elt FiniteField::from_coeffs(const std::vector<std::uint64_t>& c) const {
  require(c.size() <= k_, ErrorCode::invalid_argument, "too many coefficients");
  std::uint64_t v = 0, w = 1;
  for (auto x : c) {
    v += (x % p_) * w;
    w *= p_;
  }
  return packed_to_elt_[v];
}

std::vector<std::uint64_t> FiniteField::coeffs(Elt a) const {
  std::vector<std::uint64_t> c(k_, 0);
  if (a == 0) return c;
  std::uint64_t v = exp_[a - 1];
  for (unsigned j = 0; j < k_; ++j, v /= p_) c[j] = v % p_;
  return c;
}

FiniteField::Elt FiniteField::mul(Elt a, Elt b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t e = (static_cast<std::uint64_t>(a) - 1 + b - 1) % (q_ - 1);
  return static_cast<Elt>(e + 1);
}

FiniteField::Elt FiniteField::add(Elt a, Elt b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  std::uint64_t d = (static_cast<std::uint64_t>(b) + q_ - 1 - a) % (q_ - 1);
  Elt z = zech_[d];
  return z == 0 ? 0 : mul(a, z);
}

FiniteField::Elt FiniteField::neg(Elt a) const {
  if (a == 0 || p_ == 2) return a;
  return mul(a, static_cast<Elt>((q_ - 1) / 2 + 1));
}

FiniteField::Elt FiniteField::inv(Elt a) const {
  require(a != 0, ErrorCode::non_unit, "inverse of zero in a finite field");
  return static_cast<Elt>((q_ - 1 - (a - 1)) % (q_ - 1) + 1);
}

FiniteField::Elt FiniteField::pow(Elt a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return static_cast<Elt>((static_cast<unsigned __int128>(a - 1) * e) % (q_ - 1) + 1);
}

bool FiniteField::is_square(Elt a) const {
  if (a == 0 || p_ == 2) return true;
  return (a - 1) % 2 == 0;
}

}  // namespace cubsurf
