#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubsurf {

using Integer = mpz_class;
// Always canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;
using Vec = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);
// Accepts "n" or "n/d" (decimal, optional leading '-').
Rational parse_rational(std::string_view text);
// Serialized form is always "num/den".
std::string format_rational(const Rational& q);

Integer lcm_of_denominators(const std::vector<Rational>& values);
Integer gcd_of_numerators(const std::vector<Rational>& values);
Integer abs(const Integer& n);
int sign(const Integer& n);
int sign(const Rational& q);
long to_long(const Integer& n);

bool is_perfect_square(const Integer& n);
bool is_perfect_square(const Rational& q);

bool is_probable_prime(const Integer& n);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
};

struct SquarefreeResult {
  // n = square_class * (square root)^2 when complete.
  Integer square_class;
  Integer square_root;
  std::vector<PrimePower> factors;  // certificate: |n| = prod p^e * unfactored
  Integer unfactored = 1;           // composite cofactor that resisted factoring
  bool complete = true;
};

struct FactoringLimits {
  unsigned long trial_bound = 100000;
  unsigned long rho_iterations = 2000000;
};

// Squarefree kernel of n (sign kept). Throws zero_integer for n = 0.
SquarefreeResult squarefree_part(const Integer& n, const FactoringLimits& limits = {});
// Squarefree class of a nonzero rational, as an integer.
SquarefreeResult squarefree_part(const Rational& q, const FactoringLimits& limits = {});

// Factor |n| completely if possible within limits.
std::vector<PrimePower> factor_integer(const Integer& n, Integer& unfactored,
                                       const FactoringLimits& limits = {});

}  // namespace cubsurf
