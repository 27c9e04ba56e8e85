#include "cubsurf/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <optional>
#include <set>

#include "cubsurf/descent.hpp"
#include "cubsurf/error.hpp"
#include "cubsurf/factor.hpp"
#include "cubsurf/pointsearch.hpp"

namespace cubsurf {

namespace {

using Elt = FiniteField::Elt;

std::uint64_t ipow(std::uint64_t q, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned k = 0; k < e; ++k) r *= q;
  return r;
}

void check_budget(std::uint64_t n, const EnumerationBudget& b) {
  require(n <= b.max_points, ErrorCode::budget_exceeded,
          "enumeration of " + std::to_string(n) + " points exceeds the budget");
}

// Visits every normalized point of P^{n-1}(F_q): first nonzero coordinate 1.
template <class Fn>
void for_each_point(const FiniteField& f, std::size_t n, Fn&& fn) {
  std::uint64_t q = f.q();
  std::vector<Elt> x(n);
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::size_t free = n - lead - 1;
    std::uint64_t total = ipow(q, static_cast<unsigned>(free));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::fill(x.begin(), x.end(), 0);
      x[lead] = f.one();
      std::uint64_t r = idx;
      for (std::size_t k = lead + 1; k < n; ++k, r /= q) x[k] = static_cast<Elt>(r % q);
      fn(x);
    }
  }
}

std::uint64_t projective_size(std::uint64_t q, std::size_t n) {
  std::uint64_t s = 0;
  for (std::size_t k = 0; k < n; ++k) s += ipow(q, static_cast<unsigned>(k));
  return s;
}

Elt eval_cubic(const FiniteField& f, const std::vector<std::pair<Exponent4, Elt>>& terms, const std::vector<Elt>& x) {
  std::array<std::array<Elt, 4>, 4> pw;
  for (std::size_t i = 0; i < 4; ++i) {
    pw[i][0] = f.one();
    for (int e = 1; e < 4; ++e) pw[i][e] = f.mul(pw[i][e - 1], x[i]);
  }
  Elt s = 0;
  for (const auto& [e, c] : terms) {
    Elt v = c;
    for (std::size_t i = 0; i < 4; ++i)
      if (e[i]) v = f.mul(v, pw[i][e[i]]);
    s = f.add(s, v);
  }
  return s;
}

Elt eval_quad(const FiniteField& f, const ReducedQuad& q, const std::vector<Elt>& x) {
  Elt s = 0;
  for (const auto& [ij, c] : q.terms) s = f.add(s, f.mul(c, f.mul(x[ij[0]], x[ij[1]])));
  return s;
}

std::vector<std::pair<Exponent4, Elt>> partial(const FiniteField& f, const std::vector<std::pair<Exponent4, Elt>>& terms,
                                               std::size_t i) {
  std::vector<std::pair<Exponent4, Elt>> out;
  for (const auto& [e, c] : terms) {
    if (e[i] == 0) continue;
    Exponent4 d = e;
    d[i] -= 1;
    Elt v = f.mul(c, f.from_int(static_cast<std::uint64_t>(e[i])));
    if (v != 0) out.emplace_back(d, v);
  }
  return out;
}

// gradient of a reduced quadric as linear forms: row k holds d/dx_k
std::array<std::array<Elt, 5>, 5> quad_gradient(const FiniteField& f, const ReducedQuad& q) {
  std::array<std::array<Elt, 5>, 5> g{};
  for (const auto& [ij, c] : q.terms) {
    int i = ij[0], j = ij[1];
    if (i == j) {
      g[i][i] = f.add(g[i][i], f.mul(c, f.from_int(2)));
    } else {
      g[i][j] = f.add(g[i][j], c);
      g[j][i] = f.add(g[j][i], c);
    }
  }
  return g;
}

ReducedQuad reduce_quad(const QuadForm& q, const FiniteField& f) {
  ReducedQuad r;
  for (std::size_t i = 0; i < q.n(); ++i)
    for (std::size_t j = i; j < q.n(); ++j) {
      Elt c = f.from_rational(q.coeff(i, j));
      if (c != 0) r.terms.push_back({{static_cast<int>(i), static_cast<int>(j)}, c});
    }
  return r;
}

}  // namespace

ReducedCubic reduce_mod_p(const CubicSurface& s, FieldPtr field) {
  require(field != nullptr, ErrorCode::invalid_argument, "missing field");
  ReducedCubic r;
  r.field = field;
  for (const auto& [e, c] : s.f.terms()) {
    Elt v = field->from_rational(c);
    if (v != 0) r.terms.emplace_back(e, v);
  }
  require(!r.terms.empty(), ErrorCode::bad_prime, "cubic vanishes mod " + std::to_string(field->p()));
  return r;
}

ReducedDP4 reduce_mod_p(const DP4Surface& v, FieldPtr field) {
  require(field != nullptr, ErrorCode::invalid_argument, "missing field");
  require(v.q0.n() == 5 && v.q1.n() == 5, ErrorCode::invalid_argument, "DP4 quadrics need 5 variables");
  ReducedDP4 r;
  r.field = field;
  r.q0 = reduce_quad(v.q0, *field);
  r.q1 = reduce_quad(v.q1, *field);
  // rank of the 2 x 15 coefficient matrix must stay 2
  std::map<std::array<int, 2>, std::pair<Elt, Elt>> m;
  for (const auto& [ij, c] : r.q0.terms) m[ij].first = c;
  for (const auto& [ij, c] : r.q1.terms) m[ij].second = c;
  bool nonzero0 = !r.q0.terms.empty(), nonzero1 = !r.q1.terms.empty();
  bool dependent = true;
  if (nonzero0 && nonzero1) {
    for (const auto& [ij, a] : m)
      for (const auto& [kl, b] : m)
        if (field->sub(field->mul(a.first, b.second), field->mul(a.second, b.first)) != 0) dependent = false;
  }
  require(!dependent, ErrorCode::bad_prime, "quadrics become dependent mod " + std::to_string(field->p()));
  return r;
}

std::uint64_t count_points(const ReducedCubic& s, const EnumerationBudget& budget) {
  const FiniteField& f = *s.field;
  check_budget(projective_size(f.q(), 4), budget);
  std::uint64_t n = 0;
  for_each_point(f, 4, [&](const std::vector<Elt>& x) {
    if (eval_cubic(f, s.terms, x) == 0) ++n;
  });
  return n;
}

std::uint64_t count_points(const ReducedDP4& v, const EnumerationBudget& budget) {
  const FiniteField& f = *v.field;
  check_budget(projective_size(f.q(), 5), budget);
  std::uint64_t n = 0;
  for_each_point(f, 5, [&](const std::vector<Elt>& x) {
    if (eval_quad(f, v.q0, x) == 0 && eval_quad(f, v.q1, x) == 0) ++n;
  });
  return n;
}

std::uint64_t census_lines(const ReducedCubic& s, const EnumerationBudget& budget) {
  const FiniteField& f = *s.field;
  std::uint64_t q = f.q();
  require(q >= 3, ErrorCode::bad_prime, "line census needs at least four points on P^1");
  check_budget(4 * (q * q + 1) * (q * q + q + 1), budget);
  Elt minus_one = f.neg(f.one());
  std::uint64_t lines = 0;
  // row echelon basis (r, u) of a 2-plane with pivots a < b
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      std::vector<int> free_r, free_u;
      for (int j = a + 1; j < 4; ++j)
        if (j != b) free_r.push_back(j);
      for (int j = b + 1; j < 4; ++j) free_u.push_back(j);
      std::size_t nfree = free_r.size() + free_u.size();
      std::uint64_t total = ipow(q, static_cast<unsigned>(nfree));
      std::vector<Elt> r(4), u(4), pt(4);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::fill(r.begin(), r.end(), 0);
        std::fill(u.begin(), u.end(), 0);
        r[a] = f.one();
        u[b] = f.one();
        std::uint64_t k = idx;
        for (int j : free_r) {
          r[j] = static_cast<Elt>(k % q);
          k /= q;
        }
        for (int j : free_u) {
          u[j] = static_cast<Elt>(k % q);
          k /= q;
        }
        bool on = eval_cubic(f, s.terms, r) == 0 && eval_cubic(f, s.terms, u) == 0;
        for (Elt c : {f.one(), minus_one}) {
          if (!on) break;
          for (int j = 0; j < 4; ++j) pt[j] = f.add(r[j], f.mul(c, u[j]));
          on = eval_cubic(f, s.terms, pt) == 0;
        }
        if (on) ++lines;
      }
    }
  return lines;
}

bool has_singular_point(const ReducedCubic& s, const EnumerationBudget& budget) {
  const FiniteField& f = *s.field;
  check_budget(projective_size(f.q(), 4), budget);
  std::array<std::vector<std::pair<Exponent4, Elt>>, 4> grad;
  for (std::size_t i = 0; i < 4; ++i) grad[i] = partial(f, s.terms, i);
  bool found = false;
  for_each_point(f, 4, [&](const std::vector<Elt>& x) {
    if (found || eval_cubic(f, s.terms, x) != 0) return;
    for (const auto& g : grad)
      if (eval_cubic(f, g, x) != 0) return;
    found = true;
  });
  return found;
}

bool has_singular_point(const ReducedDP4& v, const EnumerationBudget& budget) {
  const FiniteField& f = *v.field;
  check_budget(projective_size(f.q(), 5), budget);
  auto g0 = quad_gradient(f, v.q0), g1 = quad_gradient(f, v.q1);
  bool found = false;
  for_each_point(f, 5, [&](const std::vector<Elt>& x) {
    if (found || eval_quad(f, v.q0, x) != 0 || eval_quad(f, v.q1, x) != 0) return;
    std::array<Elt, 5> d0{}, d1{};
    for (std::size_t k = 0; k < 5; ++k)
      for (std::size_t j = 0; j < 5; ++j) {
        d0[k] = f.add(d0[k], f.mul(g0[k][j], x[j]));
        d1[k] = f.add(d1[k], f.mul(g1[k][j], x[j]));
      }
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = a + 1; b < 5; ++b)
        if (f.sub(f.mul(d0[a], d1[b]), f.mul(d0[b], d1[a])) != 0) return;
    found = true;
  });
  return found;
}

FrobeniusData frobenius_data(const DescentInput& input) {
  FrobeniusData d;
  d.p = input.algebra.modulus();
  Factorization fz = factor_unipoly(d.p);
  int letter = 0;
  for (const auto& fac : fz.factors) {
    d.factors.push_back(fac.poly);
    std::vector<int> block;
    for (int k = 0; k < fac.poly.degree(); ++k) block.push_back(letter++);
    d.blocks.push_back(block);
  }
  require(letter == static_cast<int>(kLetters), ErrorCode::internal, "factor degrees do not add up to five");
  d.split_rho = radicand_report(input).split_rho.rep();
  return d;
}

FrobSample frobenius_class(const FrobeniusData& data, std::uint64_t q) {
  require(q > 2 && modp::is_prime(q), ErrorCode::bad_prime, "frobenius needs an odd prime");
  modp::Poly pm = modp::Poly::from_rational(data.p, q);
  require(pm.degree() == data.p.degree() && modp::is_squarefree(pm), ErrorCode::bad_prime,
          "p is not squarefree mod " + std::to_string(q));
  modp::Poly rho = modp::Poly::from_rational(data.split_rho, q);
  FrobSample s;
  s.q = q;
  for (const auto& fac : data.factors) {
    FrobClass c;
    for (const auto& g : modp::factor_squarefree(modp::Poly::from_rational(fac, q))) {
      int k = g.degree();
      Integer e;
      mpz_ui_pow_ui(e.get_mpz_t(), q, static_cast<unsigned long>(k));
      e = (e - 1) / 2;
      modp::Poly v = modp::powmod(rho % g, e, g);
      require(!v.is_zero(), ErrorCode::bad_prime, "radicand vanishes mod " + std::to_string(q));
      int sign = v.is_one() ? 1 : -1;
      require(sign == 1 || (v.degree() == 0 && v.c[0] == q - 1), ErrorCode::internal, "Euler criterion failed");
      c.emplace_back(k, sign);
    }
    std::sort(c.begin(), c.end());
    s.flat.insert(s.flat.end(), c.begin(), c.end());
    s.per_block.push_back(c);
  }
  std::sort(s.flat.begin(), s.flat.end());
  return s;
}

bool is_good_prime(const FrobeniusData& data, std::uint64_t q) {
  try {
    frobenius_class(data, q);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::bad_prime) return false;
    throw;
  }
}

std::vector<FrobSample> sample_classes(const FrobeniusData& data, std::uint64_t from, std::uint64_t to,
                                       std::size_t max_samples, unsigned threads) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = std::max<std::uint64_t>(from, 3); q <= to; ++q)
    if (modp::is_prime(q)) primes.push_back(q);
  if (threads == 0) threads = default_thread_count();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(primes.size() ? primes.size() : 1)));
  std::vector<std::optional<FrobSample>> out(primes.size());
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t)
    jobs.push_back(std::async(std::launch::async, [&, t]() {
      for (std::size_t k = t; k < primes.size(); k += threads) {
        try {
          out[k] = frobenius_class(data, primes[k]);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::bad_prime) throw;
        }
      }
    }));
  for (auto& j : jobs) j.get();
  std::vector<FrobSample> res;
  for (auto& s : out)
    if (s && res.size() < max_samples) res.push_back(*s);
  return res;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct Lattice {
  std::vector<GroupElt> elts;
  std::vector<std::uint32_t> table;  // table[a * n + b] = index of a * b
  std::size_t n = 0, ident = 0;

  explicit Lattice(std::vector<GroupElt> g) : elts(std::move(g)), n(elts.size()) {
    std::map<GroupElt, std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) idx[elts[i]] = i;
    ident = idx.at(GroupElt::identity());
    table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<std::uint32_t>(idx.at(compose(elts[a], elts[b])));
  }

  Bits closure(const std::vector<std::size_t>& gens) const {
    Bits h((n + 63) / 64, 0);
    std::vector<std::size_t> frontier{ident};
    h[ident / 64] |= 1ull << (ident % 64);
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (auto x : frontier)
        for (auto g : gens) {
          std::size_t y = table[x * n + g];
          if (!(h[y / 64] >> (y % 64) & 1)) {
            h[y / 64] |= 1ull << (y % 64);
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    return h;
  }
};

bool has(const Bits& b, std::size_t i) { return b[i / 64] >> (i % 64) & 1; }

}  // namespace

SubgroupReport identify_subgroup(const std::vector<FrobSample>& samples, const std::vector<std::vector<int>>& blocks) {
  require(!samples.empty(), ErrorCode::invalid_argument, "no samples to identify a subgroup from");
  Lattice lat(block_stabilizer(blocks));
  std::size_t n = lat.n;
  std::map<std::vector<FrobClass>, int> class_id;
  std::vector<int> cls(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto c = class_of(lat.elts[a], blocks);
    auto it = class_id.emplace(c, static_cast<int>(class_id.size())).first;
    cls[a] = it->second;
  }
  std::map<int, double> target;
  for (const auto& s : samples) {
    auto it = class_id.find(s.per_block);
    require(it != class_id.end(), ErrorCode::internal, "sampled class outside the block stabilizer");
    target[it->second] += 1.0 / static_cast<double>(samples.size());
  }
  std::vector<bool> allowed(n);
  for (std::size_t a = 0; a < n; ++a) allowed[a] = target.count(cls[a]) > 0;
  auto all_allowed = [&](const Bits& h) {
    for (std::size_t a = 0; a < n; ++a)
      if (has(h, a) && !allowed[a]) return false;
    return true;
  };

  SubgroupReport rep;
  rep.ambient_order = n;
  rep.samples = samples.size();
  rep.distinct_classes = target.size();

  // subgroups all of whose elements lie in sampled classes, as joins of cyclic ones
  std::vector<std::size_t> cyclic_gen;
  std::set<Bits> cyclic_seen;
  for (std::size_t a = 0; a < n; ++a) {
    if (!allowed[a]) continue;
    Bits c = lat.closure({a});
    if (all_allowed(c) && cyclic_seen.insert(c).second) cyclic_gen.push_back(a);
  }
  constexpr std::size_t kCap = 100000;
  std::map<Bits, std::vector<std::size_t>> subgroups;
  std::vector<Bits> work;
  Bits trivial = lat.closure({});
  subgroups[trivial] = {};
  work.push_back(trivial);
  bool capped = false;
  while (!work.empty() && !capped) {
    Bits h = work.back();
    work.pop_back();
    std::vector<std::size_t> gens = subgroups[h];
    for (auto c : cyclic_gen) {
      if (has(h, c)) continue;
      std::vector<std::size_t> g2 = gens;
      g2.push_back(c);
      Bits k = lat.closure(g2);
      if (!all_allowed(k) || subgroups.count(k)) continue;
      subgroups[k] = g2;
      work.push_back(k);
      if (subgroups.size() > kCap) {
        capped = true;
        break;
      }
    }
  }

  const Bits* best = nullptr;
  double best_dist = 0;
  std::size_t best_order = 0;
  if (!capped) {
    for (const auto& [h, gens] : subgroups) {
      std::map<int, double> freq;
      std::size_t order = 0;
      for (std::size_t a = 0; a < n; ++a)
        if (has(h, a)) {
          ++order;
          freq[cls[a]] += 1;
        }
      if (freq.size() != target.size()) continue;
      ++rep.candidates;
      double dist = 0;
      for (auto& [c, v] : freq) dist += std::abs(v / static_cast<double>(order) - target[c]);
      if (!best || dist < best_dist - 1e-12 || (std::abs(dist - best_dist) <= 1e-12 && order < best_order)) {
        best = &h;
        best_dist = dist;
        best_order = order;
      }
    }
  }
  Bits chosen;
  if (best) {
    chosen = *best;
    rep.exact_class_match = true;
  } else {
    std::vector<std::size_t> gens;
    for (std::size_t a = 0; a < n; ++a)
      if (allowed[a]) gens.push_back(a);
    chosen = lat.closure(gens);
    rep.method = "sampling-based upper bound";
  }
  // small generating set, greedy in element order
  std::vector<std::size_t> gens;
  Bits current = lat.closure({});
  for (std::size_t a = 0; a < n; ++a) {
    if (!has(chosen, a) || has(current, a)) continue;
    gens.push_back(a);
    current = lat.closure(gens);
  }
  for (std::size_t a = 0; a < n; ++a)
    if (has(chosen, a)) ++rep.order;
  for (auto g : gens) rep.generators.push_back(lat.elts[g]);
  rep.orbit_lengths = orbit_lengths(rep.generators);
  return rep;
}

LefschetzResult lefschetz_check(const CubicSurface& s, const FrobSample& sample, const EnumerationBudget& budget) {
  LefschetzResult r;
  r.q = sample.q;
  r.trace = Lines27::instance().pic_trace(representative(sample.flat));
  auto field = std::make_shared<const FiniteField>(sample.q);
  r.count = count_points(reduce_mod_p(s, field), budget);
  long long expected = static_cast<long long>(sample.q * sample.q) +
                       static_cast<long long>(r.trace) * static_cast<long long>(sample.q) + 1;
  r.expected = static_cast<std::uint64_t>(expected);
  r.ok = expected >= 0 && r.count == r.expected;
  return r;
}

}  // namespace cubsurf
