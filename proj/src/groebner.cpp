#include "cubsurf/groebner.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "cubsurf/error.hpp"

namespace cubsurf {

namespace {

// Integral polynomial, terms in decreasing grevlex order.
using ITerm = std::pair<Monomial, Integer>;
using IPoly = std::vector<ITerm>;

IPoly to_integral(const MPoly& f) {
  MPoly p = f.primitive();
  IPoly out;
  out.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) out.emplace_back(m, c.get_num());
  return out;
}

MPoly to_rational(std::size_t n, const IPoly& f) {
  std::vector<MPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f) terms.emplace_back(m, Rational(c));
  return MPoly::from_terms(n, std::move(terms));
}

void make_primitive(IPoly& f) {
  if (f.empty()) return;
  Integer g = 0;
  for (const auto& t : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  if (f.front().second < 0) g = -g;
  if (g != 1)
    for (auto& t : f) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
}

// sa * f[from..] - sb * q * g[1..]; the leading terms cancel by construction.
IPoly elim_step(const IPoly& f, std::size_t from, const Integer& sa, const Integer& sb, const Monomial& q,
                const IPoly& g) {
  IPoly out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 1;
  Integer tmp;
  while (i < f.size() || j < g.size()) {
    int c;
    Monomial mg;
    if (j < g.size()) mg = q * g[j].first;
    if (i == f.size())
      c = -1;
    else if (j == g.size())
      c = 1;
    else
      c = grevlex_compare(f[i].first, mg);
    if (c > 0) {
      out.emplace_back(f[i].first, sa * f[i].second);
      ++i;
    } else if (c < 0) {
      out.emplace_back(mg, -sb * g[j].second);
      ++j;
    } else {
      tmp = sa * f[i].second - sb * g[j].second;
      if (tmp != 0) out.emplace_back(mg, tmp);
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of f modulo basis; result primitive (or empty).
IPoly reduce(IPoly f, const std::vector<IPoly>& basis, std::size_t skip = static_cast<std::size_t>(-1)) {
  IPoly rem;
  std::size_t head = 0;
  while (head < f.size()) {
    const Monomial& lm = f[head].first;
    const IPoly* div = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (basis[k].front().first.divides(lm)) {
        div = &basis[k];
        break;
      }
    }
    if (!div) {
      rem.push_back(f[head]);
      ++head;
      continue;
    }
    const Integer& a = f[head].second;
    const Integer& b = div->front().second;
    Integer d = gcd(a, b);
    Integer sa = b / d, sb = a / d;
    Monomial q = div->front().first.quotient_of(lm);
    f = elim_step(f, head + 1, sa, sb, q, *div);
    head = 0;
    if (sa != 1 && sa != -1)
      for (auto& t : rem) t.second *= sa;
    else if (sa == -1)
      for (auto& t : rem) t.second = -t.second;
    // joint content of rem and f
    Integer g = 0;
    for (const auto& t : rem) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
      if (g == 1) break;
    }
    if (g != 1)
      for (const auto& t : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
        if (g == 1) break;
      }
    if (g > 1) {
      for (auto& t : rem) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
      for (auto& t : f) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
    }
  }
  make_primitive(rem);
  return rem;
}

IPoly spoly(const IPoly& f, const IPoly& g) {
  Monomial l = lcm(f.front().first, g.front().first);
  Integer a = f.front().second, b = g.front().second;
  Integer d = gcd(a, b);
  // (b/d) * (l/lm f) * f - (a/d) * (l/lm g) * g
  IPoly lhs;
  Monomial qf = f.front().first.quotient_of(l);
  lhs.reserve(f.size());
  for (const auto& t : f) lhs.emplace_back(qf * t.first, t.second);
  IPoly out = elim_step(lhs, 1, b / d, a / d, g.front().first.quotient_of(l), g);
  make_primitive(out);
  return out;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

MPoly s_polynomial(const MPoly& f, const MPoly& g) {
  require(!f.is_zero() && !g.is_zero() && f.nvars() == g.nvars(), ErrorCode::invalid_argument,
          "s_polynomial needs nonzero polynomials in the same ring");
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  auto shift = [&](const MPoly& p) -> MPoly {
    Monomial q = p.leading_monomial().quotient_of(l);
    std::vector<MPoly::Term> terms;
    for (const auto& [m, c] : p.terms()) terms.emplace_back(q * m, c / p.leading_coeff());
    return MPoly::from_terms(p.nvars(), std::move(terms));
  };
  return shift(f) - shift(g);
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis) {
  std::vector<IPoly> ib;
  for (const auto& b : basis) {
    require(b.nvars() == f.nvars(), ErrorCode::invalid_argument, "variable count mismatch");
    if (!b.is_zero()) ib.push_back(to_integral(b));
  }
  if (f.is_zero()) return f;
  return to_rational(f.nvars(), reduce(to_integral(f), ib)).monic();
}

GroebnerBasis buchberger(const std::vector<MPoly>& gens, GroebnerStats* stats, bool stop_at_unit) {
  require(!gens.empty(), ErrorCode::invalid_argument, "buchberger needs at least one generator");
  std::size_t n = gens.front().nvars();
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  GroebnerBasis out;
  out.nvars = n;
  auto unit = [&]() {
    out.generators = {MPoly::constant(n, 1)};
    return out;
  };

  std::vector<IPoly> g;
  for (const auto& f : gens) {
    require(f.nvars() == n, ErrorCode::invalid_argument, "variable count mismatch");
    if (f.is_zero()) continue;
    if (f.is_constant()) return unit();
    g.push_back(to_integral(f));
  }
  if (g.empty()) {
    out.generators = {};
    return out;
  }

  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pair = [&](std::size_t i, std::size_t j) {
    queue.push_back({i, j, lcm(g[i].front().first, g[j].front().first)});
    pending.insert({i, j});
    ++st.pairs_total;
  };
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) add_pair(i, j);
  auto in_queue = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    // normal strategy: smallest lcm, then oldest pair
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue.size(); ++k) {
      int c = grevlex_compare(queue[k].lcm, queue[best].lcm);
      if (c < 0 || (c == 0 && std::pair(queue[k].j, queue[k].i) < std::pair(queue[best].j, queue[best].i)))
        best = k;
    }
    Pair p = queue[best];
    const IPoly& fi = g[p.i];
    const IPoly& fj = g[p.j];
    bool skip = false;
    if (coprime(fi.front().first, fj.front().first)) {
      ++st.skipped_coprime;
      skip = true;
    } else {
      for (std::size_t k = 0; k < g.size() && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        if (g[k].front().first.divides(p.lcm) && !in_queue(p.i, k) && !in_queue(p.j, k)) {
          ++st.skipped_chain;
          skip = true;
        }
      }
    }
    IPoly h;
    if (!skip) h = reduce(spoly(fi, fj), g);
    queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(best));
    pending.erase({p.i, p.j});
    if (skip) continue;
    if (h.empty()) {
      ++st.zero_reductions;
      continue;
    }
    if (h.size() == 1 && h.front().first.is_one()) {
      if (stop_at_unit) return unit();
      g = {h};
      queue.clear();
      pending.clear();
      break;
    }
    g.push_back(std::move(h));
    for (std::size_t i = 0; i + 1 < g.size(); ++i) add_pair(i, g.size() - 1);
  }

  // minimal basis: drop elements whose leading monomial is divisible by another's
  std::vector<IPoly> minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    bool drop = false;
    for (std::size_t m = 0; m < g.size() && !drop; ++m) {
      if (m == k) continue;
      const Monomial& a = g[m].front().first;
      const Monomial& b = g[k].front().first;
      if (a.divides(b) && (!(a == b) || m < k)) drop = true;
    }
    if (!drop) minimal.push_back(g[k]);
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) minimal[k] = reduce(minimal[k], minimal, k);
  std::sort(minimal.begin(), minimal.end(),
            [](const IPoly& a, const IPoly& b) { return grevlex_compare(a.front().first, b.front().first) < 0; });
  for (const auto& f : minimal) out.generators.push_back(to_rational(n, f).monic());
  return out;
}

bool is_unit_ideal(const std::vector<MPoly>& gens) { return buchberger(gens, nullptr, true).is_unit(); }

std::vector<MPoly> singular_locus(const CubicSurface& s) {
  require(!s.f.is_zero(), ErrorCode::zero_polynomial, "zero cubic form");
  MPoly f = MPoly::from(s.f);
  std::vector<MPoly> gens{f};
  for (std::size_t i = 0; i < 4; ++i) gens.push_back(f.derivative(i));
  return gens;
}

std::vector<MPoly> singular_locus(const DP4Surface& v) {
  validate(v);
  MPoly q0 = MPoly::from(v.q0), q1 = MPoly::from(v.q1);
  std::vector<MPoly> gens{q0, q1};
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b) {
      MPoly m = q0.derivative(a) * q1.derivative(b) - q0.derivative(b) * q1.derivative(a);
      if (!m.is_zero()) gens.push_back(m);
    }
  return gens;
}

namespace {

SmoothnessReport chart_tests(const std::vector<MPoly>& gens) {
  std::size_t n = gens.front().nvars();
  std::vector<std::future<bool>> jobs;
  for (std::size_t i = 0; i < n; ++i)
    jobs.push_back(std::async(std::launch::async, [&gens, i]() {
      std::vector<MPoly> chart;
      for (const auto& f : gens) chart.push_back(f.dehomogenize(i));
      return is_unit_ideal(chart);
    }));
  SmoothnessReport r;
  r.smooth = true;
  for (auto& j : jobs) {
    bool u = j.get();
    r.chart_unit.push_back(u);
    r.smooth = r.smooth && u;
  }
  return r;
}

}  // namespace

SmoothnessReport smoothness(const CubicSurface& s) { return chart_tests(singular_locus(s)); }
SmoothnessReport smoothness(const DP4Surface& v) { return chart_tests(singular_locus(v)); }

}  // namespace cubsurf
