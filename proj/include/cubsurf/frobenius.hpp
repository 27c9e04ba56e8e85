#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cubsurf/finite_field.hpp"
#include "cubsurf/lines27.hpp"
#include "cubsurf/surfaces.hpp"

namespace cubsurf {

using FieldPtr = std::shared_ptr<const FiniteField>;

struct ReducedCubic {
  FieldPtr field;
  std::vector<std::pair<Exponent4, FiniteField::Elt>> terms;
};

// x^T A x with the expanded coefficient of x_i x_j (i <= j) stored per pair
struct ReducedQuad {
  std::vector<std::pair<std::array<int, 2>, FiniteField::Elt>> terms;
};

struct ReducedDP4 {
  FieldPtr field;
  ReducedQuad q0, q1;
};

// Throws bad_prime when the characteristic divides a denominator or the
// reduction loses degree (zero cubic, dependent quadrics).
ReducedCubic reduce_mod_p(const CubicSurface& s, FieldPtr field);
ReducedDP4 reduce_mod_p(const DP4Surface& v, FieldPtr field);

struct EnumerationBudget {
  std::uint64_t max_points = 400'000'000;
};

// Projective F_q-points; budget_exceeded when the scan would be too long.
std::uint64_t count_points(const ReducedCubic& s, const EnumerationBudget& budget = {});
std::uint64_t count_points(const ReducedDP4& v, const EnumerationBudget& budget = {});
// F_q-rational lines contained in S, scanning all lines of P^3(F_q).
std::uint64_t census_lines(const ReducedCubic& s, const EnumerationBudget& budget = {});
// Exhaustive search for an F_q-rational singular point.
bool has_singular_point(const ReducedCubic& s, const EnumerationBudget& budget = {});
bool has_singular_point(const ReducedDP4& v, const EnumerationBudget& budget = {});

// Per-prime data extracted once from a descent: p, the blocks of letters
// (roots of each Q-irreducible factor of p, in factor order) and the split
// radicand representative.
struct FrobeniusData {
  UniPoly p;
  std::vector<UniPoly> factors;
  std::vector<std::vector<int>> blocks;
  UniPoly split_rho;
};

FrobeniusData frobenius_data(const DescentInput& input);

struct FrobSample {
  std::uint64_t q = 0;
  std::vector<FrobClass> per_block;
  FrobClass flat;
  friend bool operator==(const FrobSample&, const FrobSample&) = default;
};

// Cycle type from factoring each factor of p mod q, cycle signs by Euler's
// criterion on split_rho in F_q[T]/(g). Throws bad_prime for q = 2, q dividing
// a denominator, p not squarefree mod q, or split_rho vanishing mod some g.
FrobSample frobenius_class(const FrobeniusData& data, std::uint64_t q);
bool is_good_prime(const FrobeniusData& data, std::uint64_t q);

// Good primes in [from, to] in increasing order, at most max_samples of them.
std::vector<FrobSample> sample_classes(const FrobeniusData& data, std::uint64_t from, std::uint64_t to,
                                       std::size_t max_samples, unsigned threads = 0);

struct SubgroupReport {
  std::size_t ambient_order = 0;  // block stabilizer in T x| S5
  std::size_t order = 0;
  bool exact_class_match = false;  // class set of the subgroup equals the sampled set
  std::size_t samples = 0;
  std::size_t distinct_classes = 0;
  std::size_t candidates = 0;  // subgroups with exactly the sampled class set
  std::vector<GroupElt> generators;
  std::vector<std::size_t> orbit_lengths;
  std::string method = "sampling-based";
  friend bool operator==(const SubgroupReport&, const SubgroupReport&) = default;
};

// Subgroup H of the block stabilizer whose set of block classes equals the
// sampled set, closest in class frequencies; fallback: the subgroup generated
// by every element in a sampled class.
SubgroupReport identify_subgroup(const std::vector<FrobSample>& samples, const std::vector<std::vector<int>>& blocks);

struct LefschetzResult {
  std::uint64_t q = 0;
  int trace = 0;
  std::uint64_t count = 0;
  std::uint64_t expected = 0;
  bool ok = false;
  friend bool operator==(const LefschetzResult&, const LefschetzResult&) = default;
};

LefschetzResult lefschetz_check(const CubicSurface& s, const FrobSample& sample,
                                const EnumerationBudget& budget = {});

}  // namespace cubsurf
