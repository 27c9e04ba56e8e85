#include "cubsurf/rational.hpp"

#include <algorithm>
#include <map>

#include "cubsurf/error.hpp"

namespace cubsurf {

Rational make_rational(const Integer& num, const Integer& den) {
  require(den != 0, ErrorCode::invalid_argument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    require(valid_int(s), ErrorCode::json_schema, "bad rational literal '" + s + "'");
    return Rational(Integer(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  require(valid_int(num) && valid_int(den) && den[0] != '-',
          ErrorCode::json_schema, "bad rational literal '" + s + "'");
  Integer d(strip_plus(den));
  require(d != 0, ErrorCode::json_schema, "zero denominator in '" + s + "'");
  return make_rational(Integer(strip_plus(num)), d);
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer lcm_of_denominators(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

Integer gcd_of_numerators(const std::vector<Rational>& values) {
  Integer g = 0;
  for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  return g;
}

Integer abs(const Integer& n) { return n < 0 ? Integer(-n) : n; }
int sign(const Integer& n) { return sgn(n); }
int sign(const Rational& q) { return sgn(q); }

long to_long(const Integer& n) {
  require(n.fits_slong_p(), ErrorCode::invalid_argument, "integer too large: " + n.get_str());
  return n.get_si();
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_perfect_square(const Rational& q) {
  return is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

bool is_probable_prime(const Integer& n) {
  return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
Integer pollard_rho(const Integer& n, unsigned long max_iter) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1; c < 20; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, iter = 0;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    const unsigned long m = 128;
    while (g == 1 && iter < max_iter) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer d = abs(Integer(x - y));
          q = q * d % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        iter += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        Integer d = abs(Integer(x - ys));
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out, Integer& unfactored,
                const FactoringLimits& limits, unsigned multiplicity) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += multiplicity;
    return;
  }
  Integer root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split_into(root, out, unfactored, limits, 2 * multiplicity);
    return;
  }
  Integer d = pollard_rho(n, limits.rho_iterations);
  if (d == 0) {
    for (unsigned i = 0; i < multiplicity; ++i) unfactored *= n;
    return;
  }
  split_into(d, out, unfactored, limits, multiplicity);
  split_into(Integer(n / d), out, unfactored, limits, multiplicity);
}

}  // namespace

std::vector<PrimePower> factor_integer(const Integer& n, Integer& unfactored,
                                       const FactoringLimits& limits) {
  require(n != 0, ErrorCode::zero_integer, "cannot factor zero");
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  unfactored = 1;
  for (unsigned long p = 2; p <= limits.trial_bound && Integer(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e) found[Integer(p)] += e;
  }
  if (m > 1) split_into(m, found, unfactored, limits, 1);
  std::vector<PrimePower> out;
  for (auto& [p, e] : found) out.push_back({p, e});
  return out;
}

SquarefreeResult squarefree_part(const Integer& n, const FactoringLimits& limits) {
  require(n != 0, ErrorCode::zero_integer, "squarefree_part of zero");
  SquarefreeResult r;
  r.factors = factor_integer(n, r.unfactored, limits);
  r.complete = (r.unfactored == 1);
  r.square_class = sign(n);
  r.square_root = 1;
  for (const auto& pp : r.factors) {
    if (pp.exponent % 2) r.square_class *= pp.prime;
    Integer h;
    mpz_pow_ui(h.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent / 2);
    r.square_root *= h;
  }
  // Unfactored cofactor is kept in the class; it is not a square (checked in split_into).
  r.square_class *= r.unfactored;
  return r;
}

SquarefreeResult squarefree_part(const Rational& q, const FactoringLimits& limits) {
  require(q != 0, ErrorCode::zero_integer, "squarefree_part of zero");
  // num/den ~ num*den mod squares
  Integer prod = q.get_num() * q.get_den();
  SquarefreeResult r = squarefree_part(prod, limits);
  return r;
}

}  // namespace cubsurf
