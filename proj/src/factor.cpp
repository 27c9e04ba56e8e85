#include "cubsurf/factor.hpp"

#include <algorithm>
#include <map>

#include "cubsurf/error.hpp"
#include "cubsurf/modpoly.hpp"

namespace cubsurf {

namespace {

constexpr int kMaxSquarefreeDegree = 8;

using ZPoly = std::vector<Integer>;  // integer coefficients, lowest first

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly to_zpoly(const UniPoly& f) {
  UniPoly g = f.primitive();
  ZPoly out;
  for (const auto& c : g.coeffs()) out.push_back(c.get_num());
  return out;
}

UniPoly from_zpoly(const ZPoly& p) {
  std::vector<Rational> c;
  for (const auto& v : p) c.emplace_back(v);
  return UniPoly(std::move(c));
}

Integer smod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zmod_coeffs(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  }
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

ZPoly from_modp(const modp::Poly& p) {
  ZPoly r;
  for (auto v : p.c) r.emplace_back(static_cast<unsigned long>(v));
  return r;
}

modp::Poly to_modp(const ZPoly& p, std::uint64_t q) {
  std::vector<std::uint64_t> c;
  for (const auto& v : p) c.push_back(modp::reduce(v, q));
  return modp::Poly(q, std::move(c));
}

// Exact division test over Z; on success writes the quotient.
bool zdivides(const ZPoly& d, const ZPoly& f, ZPoly& quot) {
  if (d.empty() || f.size() < d.size()) return false;
  ZPoly r = f;
  const std::size_t dd = d.size() - 1;
  quot.assign(f.size() - dd, 0);
  const Integer& ld = d.back();
  for (std::size_t k = r.size() - 1;; --k) {
    if (r[k] != 0) {
      if (!mpz_divisible_p(r[k].get_mpz_t(), ld.get_mpz_t())) return false;
      Integer c = r[k] / ld;
      quot[k - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) r[k - dd + j] -= c * d[j];
    }
    if (k == dd) break;
  }
  for (const auto& v : r)
    if (v != 0) return false;
  ztrim(quot);
  return true;
}

// Lift f = g*h (mod q), g monic, to modulus q^k by linear Hensel steps.
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, std::uint64_t q, unsigned k) {
  modp::Poly gq = to_modp(g, q), hq = to_modp(h, q), s, t;
  modp::Poly one = modp::xgcd(gq, hq, s, t);
  require(one.is_one(), ErrorCode::internal, "Hensel factors not coprime");
  Integer m = static_cast<unsigned long>(q);
  for (unsigned step = 1; step < k; ++step) {
    ZPoly e = zsub(f, zmul(g, h));
    for (auto& c : e) {
      require(mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t()) != 0, ErrorCode::internal, "Hensel invariant");
      c /= m;
    }
    modp::Poly eq = to_modp(e, q);
    modp::Poly tau = (t * eq) % gq;
    modp::Poly sigma = (eq - tau * hq) / gq;
    ZPoly tz = from_modp(tau), sz = from_modp(sigma);
    g.resize(std::max(g.size(), tz.size()));
    for (std::size_t i = 0; i < tz.size(); ++i) g[i] += m * tz[i];
    h.resize(std::max(h.size(), sz.size()));
    for (std::size_t i = 0; i < sz.size(); ++i) h[i] += m * sz[i];
    m *= static_cast<unsigned long>(q);
    g = zmod_coeffs(g, m);
    h = zmod_coeffs(h, m);
  }
}

Integer norm_bound(const ZPoly& f) {
  // 2^deg * ||f||_2 * |lc|, rounded up; bounds coefficients of lc*factor.
  Integer s2 = 0;
  for (const auto& c : f) s2 += c * c;
  Integer n;
  mpz_sqrt(n.get_mpz_t(), s2.get_mpz_t());
  n += 1;
  Integer b = n * abs(f.back());
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), f.size() - 1);
  return b;
}

std::vector<UniPoly> zassenhaus(const ZPoly& f_in) {
  ZPoly f = f_in;
  if (f.size() <= 2) return {from_zpoly(f).monic()};
  const Integer lc = f.back();
  // Pick the candidate prime with the fewest modular factors.
  std::uint64_t best_q = 0;
  std::vector<modp::Poly> best;
  int tried = 0;
  for (std::uint64_t q = 3; tried < 6 && q < 5000; q += 2) {
    if (!modp::is_prime(q)) continue;
    if (modp::reduce(lc, q) == 0) continue;
    modp::Poly fq = to_modp(f, q);
    if (!modp::is_squarefree(fq)) continue;
    auto facs = modp::factor_squarefree(fq);
    ++tried;
    if (best_q == 0 || facs.size() < best.size()) {
      best_q = q;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  require(best_q != 0, ErrorCode::internal, "no good prime for factorization");
  if (best.size() == 1) return {from_zpoly(f).monic()};
  require(best.size() <= 12, ErrorCode::degree_unsupported, "too many modular factors for recombination");

  const Integer bound = 2 * norm_bound(f) + 1;
  unsigned k = 1;
  Integer m = static_cast<unsigned long>(best_q);
  while (m <= bound) {
    m *= static_cast<unsigned long>(best_q);
    ++k;
  }

  // Sequential multifactor lifting: f = lc * G_1 * ... * G_r (mod q^k).
  // Each round splits off one monic factor; the cofactor stays congruent to
  // lc * (remaining factors) modulo q^k.
  std::vector<ZPoly> lifted;
  ZPoly rest = f;
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    ZPoly g = from_modp(best[i]);
    modp::Poly prod_rest = modp::Poly::constant(modp::reduce(lc, best_q), best_q);
    for (std::size_t j = i + 1; j < best.size(); ++j) prod_rest = prod_rest * best[j];
    ZPoly h = from_modp(prod_rest);
    hensel_pair(rest, g, h, best_q, k);
    lifted.push_back(g);
    rest = h;
  }
  {
    Integer inv, l = lc;
    mpz_invert(inv.get_mpz_t(), l.get_mpz_t(), m.get_mpz_t());
    ZPoly mon(rest.size());
    for (std::size_t j = 0; j < rest.size(); ++j) mon[j] = rest[j] * inv;
    lifted.push_back(zmod_coeffs(mon, m));
  }

  // Subset recombination.
  std::vector<UniPoly> out;
  std::vector<bool> used(lifted.size(), false);
  ZPoly current = f;
  std::size_t remaining = lifted.size();
  for (std::size_t size = 1; 2 * size <= remaining; ++size) {
    bool found_any = true;
    while (found_any) {
      found_any = false;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (!used[i]) idx.push_back(i);
      if (2 * size > idx.size()) break;
      std::vector<bool> mask(idx.size(), false);
      std::fill(mask.begin(), mask.begin() + static_cast<long>(size), true);
      do {
        ZPoly cand{current.back()};
        for (std::size_t j = 0; j < idx.size(); ++j)
          if (mask[j]) cand = zmod_coeffs(zmul(cand, lifted[idx[j]]), m);
        for (auto& c : cand) c = smod(c, m);
        ztrim(cand);
        UniPoly prim = from_zpoly(cand).primitive();
        ZPoly pz = to_zpoly(prim), quot;
        if (zdivides(pz, current, quot)) {
          out.push_back(prim.monic());
          current = quot;
          for (std::size_t j = 0; j < idx.size(); ++j)
            if (mask[j]) used[idx[j]] = true;
          remaining -= size;
          found_any = true;
          break;
        }
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
  }
  if (current.size() > 1) out.push_back(from_zpoly(current).monic());
  return out;
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  const auto& x = a.poly.coeffs();
  const auto& y = b.poly.coeffs();
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i];
  return a.multiplicity < b.multiplicity;
}

std::vector<Integer> divisors_of(const Integer& n, bool& ok) {
  ok = true;
  Integer unf;
  FactoringLimits lim;
  lim.trial_bound = 20000;
  lim.rho_iterations = 200000;
  auto pf = factor_integer(n, unf, lim);
  if (unf != 1) {
    ok = false;
    return {};
  }
  std::vector<Integer> divs{1};
  for (const auto& pp : pf) {
    std::size_t cur = divs.size();
    if (cur * (pp.exponent + 1) > 20000) {
      ok = false;
      return {};
    }
    Integer pw = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      pw *= pp.prime;
      for (std::size_t i = 0; i < cur; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

}  // namespace

UniPoly Factorization::expand() const {
  UniPoly r = UniPoly::constant(constant);
  for (const auto& f : factors) r *= pow(f.poly, f.multiplicity);
  return r;
}

std::vector<int> Factorization::degrees() const {
  std::vector<int> d;
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) d.push_back(f.poly.degree());
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<Rational> rational_roots(const UniPoly& f) {
  require(!f.is_zero(), ErrorCode::zero_polynomial, "rational_roots of zero polynomial");
  std::vector<Rational> roots;
  UniPoly g = f.primitive();
  // strip x^k
  while (g.degree() > 0 && g.coeff(0) == 0) {
    if (roots.empty() || roots.back() != 0) roots.emplace_back(0);
    g = g / UniPoly{0, 1};
  }
  if (g.degree() <= 0) return roots;
  bool ok_a = false, ok_b = false;
  auto num = divisors_of(abs(g.coeff(0).get_num()), ok_a);
  auto den = divisors_of(abs(g.leading().get_num()), ok_b);
  if (ok_a && ok_b) {
    for (const auto& a : num)
      for (const auto& b : den) {
        if (gcd(a, b) != 1) continue;
        for (int s : {1, -1}) {
          Rational r = make_rational(a * s, b);
          if (g.eval(r) == 0) roots.push_back(r);
        }
      }
  } else {
    // Fall back to the full factorization.
    for (const auto& fc : factor_unipoly(g).factors)
      if (fc.poly.degree() == 1) roots.push_back(-fc.poly.coeff(0));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Factorization factor_unipoly(const UniPoly& f) {
  require(!f.is_zero(), ErrorCode::zero_polynomial, "factor_unipoly of zero polynomial");
  Factorization out;
  out.constant = f.leading();
  if (f.degree() == 0) return out;
  UniPoly g = f.monic();

  // Rational roots with multiplicity.
  std::vector<Factor> found;
  bool any_root_search = true;
  std::vector<Rational> roots;
  {
    // Only use the divisor route when it is cheap; zassenhaus catches the rest.
    UniPoly prim = g.primitive();
    bool ok_a = true, ok_b = true;
    if (prim.coeff(0) != 0) divisors_of(abs(prim.coeff(0).get_num()), ok_a);
    divisors_of(abs(prim.leading().get_num()), ok_b);
    any_root_search = ok_a && ok_b;
    if (any_root_search) roots = rational_roots(g);
  }
  for (const auto& r : roots) {
    UniPoly lin = UniPoly::linear_root(r);
    unsigned mult = 0;
    while (true) {
      auto [q, rem] = divmod(g, lin);
      if (!rem.is_zero()) break;
      g = q;
      ++mult;
    }
    found.push_back({lin, mult});
  }

  // Yun squarefree decomposition of the remainder.
  if (g.degree() > 0) {
    UniPoly a = g;
    UniPoly b = gcd(a, a.derivative());
    UniPoly c = a / b;
    UniPoly d = (a.derivative() / b) - c.derivative();
    unsigned i = 1;
    while (c.degree() > 0) {
      UniPoly y = gcd(c, d);
      if (y.degree() > 0) {
        require(y.degree() <= kMaxSquarefreeDegree, ErrorCode::degree_unsupported,
                "squarefree factor of degree " + std::to_string(y.degree()) + " exceeds 8");
        for (auto& irr : zassenhaus(to_zpoly(y))) found.push_back({irr, i});
      }
      c = c / y;
      d = (d / y) - c.derivative();
      ++i;
    }
  }
  std::sort(found.begin(), found.end(), factor_less);
  out.factors = std::move(found);
  return out;
}

bool is_irreducible(const UniPoly& f) {
  if (f.degree() < 1) return false;
  auto fz = factor_unipoly(f);
  return fz.factors.size() == 1 && fz.factors[0].multiplicity == 1;
}

}  // namespace cubsurf
