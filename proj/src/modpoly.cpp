#include "cubsurf/modpoly.hpp"

#include <algorithm>
#include <random>

#include "cubsurf/error.hpp"
#include "cubsurf/unipoly.hpp"

namespace cubsurf::modp {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  a %= q;
  while (e) {
    if (e & 1) r = mulmod(r, a, q);
    a = mulmod(a, a, q);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t q) {
  require(a % q != 0, ErrorCode::non_unit, "inverse of zero mod q");
  return powmod(a, q - 2, q);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t reduce(const Integer& x, std::uint64_t q) {
  return mpz_fdiv_ui(x.get_mpz_t(), q);
}

std::uint64_t reduce(const Rational& x, std::uint64_t q) {
  std::uint64_t d = mpz_fdiv_ui(x.get_den_mpz_t(), q);
  require(d != 0, ErrorCode::bad_prime, "prime " + std::to_string(q) + " divides a denominator");
  return mulmod(mpz_fdiv_ui(x.get_num_mpz_t(), q), invmod(d, q), q);
}

int legendre(std::uint64_t a, std::uint64_t q) {
  a %= q;
  if (a == 0) return 0;
  return powmod(a, (q - 1) / 2, q) == 1 ? 1 : -1;
}

Poly::Poly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs) : q(modulus), c(std::move(coeffs)) {
  for (auto& v : c) v %= q;
  trim();
}

Poly Poly::from_rational(const UniPoly& f, std::uint64_t modulus) {
  std::vector<std::uint64_t> c;
  for (const auto& r : f.coeffs()) c.push_back(reduce(r, modulus));
  return Poly(modulus, std::move(c));
}

Poly Poly::x(std::uint64_t modulus) { return Poly(modulus, {0, 1}); }
Poly Poly::constant(std::uint64_t v, std::uint64_t modulus) { return Poly(modulus, {v}); }

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::monic() const {
  if (c.empty()) return *this;
  return scale(*this, invmod(leading(), q));
}

Poly Poly::derivative() const {
  Poly d;
  d.q = q;
  for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(mulmod(c[i], i % q, q));
  d.trim();
  return d;
}

std::uint64_t Poly::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = addmod(mulmod(acc, x, q), c[i], q);
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.q = a.q ? a.q : b.q;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = addmod(r.c[i], b.c[i], r.q);
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.q = a.q ? a.q : b.q;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = submod(r.c[i], b.c[i], r.q);
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  r.q = a.q ? a.q : b.q;
  if (a.c.empty() || b.c.empty()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = addmod(r.c[i + j], mulmod(a.c[i], b.c[j], r.q), r.q);
  }
  r.trim();
  return r;
}

Poly scale(const Poly& a, std::uint64_t s) {
  Poly r = a;
  for (auto& v : r.c) v = mulmod(v, s % a.q, a.q);
  r.trim();
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  require(!b.is_zero(), ErrorCode::zero_polynomial, "division by zero polynomial mod q");
  const std::uint64_t q = b.q;
  rem = a;
  rem.q = q;
  quot = Poly();
  quot.q = q;
  if (a.degree() < b.degree()) return;
  const std::size_t db = static_cast<std::size_t>(b.degree());
  quot.c.assign(a.c.size() - db, 0);
  const std::uint64_t inv = invmod(b.leading(), q);
  for (std::size_t k = rem.c.size(); k-- > db;) {
    if (!rem.c[k]) continue;
    std::uint64_t f = mulmod(rem.c[k], inv, q);
    quot.c[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem.c[k - db + j] = submod(rem.c[k - db + j], mulmod(f, b.c[j], q), q);
  }
  rem.c.resize(db);
  rem.trim();
  quot.trim();
}

Poly operator%(const Poly& a, const Poly& b) {
  Poly qt, r;
  divmod(a, b, qt, r);
  return r;
}

Poly operator/(const Poly& a, const Poly& b) {
  Poly qt, r;
  divmod(a, b, qt, r);
  return qt;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
  const std::uint64_t q = a.q ? a.q : b.q;
  Poly r0 = a, r1 = b, s0 = Poly::constant(1, q), s1(q, {}), t0(q, {}), t1 = Poly::constant(1, q);
  while (!r1.is_zero()) {
    Poly qt, r;
    divmod(r0, r1, qt, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - qt * s1, t2 = t0 - qt * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::uint64_t inv = invmod(r0.leading(), q);
  s = scale(s0, inv);
  t = scale(t0, inv);
  return scale(r0, inv);
}

Poly powmod(const Poly& base, const Integer& e, const Poly& f) {
  Poly result = Poly::constant(1, f.q) % f;
  Poly b = base % f;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % f;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % f;
  }
  return result;
}

bool is_squarefree(const Poly& f) {
  if (f.degree() <= 0) return true;
  Poly d = f.derivative();
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f_in) {
  std::vector<std::pair<Poly, int>> out;
  Poly f = f_in.monic();
  const Poly x = Poly::x(f.q);
  Poly h = x % f;
  const Integer q(static_cast<unsigned long>(f.q));
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, q, f);
    Poly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

std::vector<Poly> equal_degree(const Poly& f_in, int d) {
  Poly f = f_in.monic();
  if (f.degree() == d) return {f};
  require(f.q % 2 == 1, ErrorCode::invalid_argument, "equal-degree splitting needs odd q");
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(f.degree()) * 131 + f.q);
  Integer qd = 1;
  for (int i = 0; i < d; ++i) qd *= static_cast<unsigned long>(f.q);
  Integer e = (qd - 1) / 2;
  const std::uint64_t q = f.q;
  while (true) {
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(f.degree()));
    for (auto& v : coeffs) v = rng() % q;
    Poly a(q, coeffs);
    if (a.degree() <= 0) continue;
    Poly g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto l = equal_degree(g, d), r = equal_degree(f / g, d);
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
    Poly b = powmod(a, e, f) - Poly::constant(1, q);
    g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto l = equal_degree(g, d), r = equal_degree(f / g, d);
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
  }
}

std::vector<Poly> factor_squarefree(const Poly& f) {
  std::vector<Poly> out;
  if (f.degree() <= 0) return out;
  for (auto& [g, d] : distinct_degree(f)) {
    auto parts = equal_degree(g, d);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.c.rbegin(), a.c.rend(), b.c.rbegin(), b.c.rend());
  });
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  if (!is_squarefree(f)) return false;
  auto dd = distinct_degree(f);
  return dd.size() == 1 && dd[0].second == f.degree();
}

}  // namespace cubsurf::modp
