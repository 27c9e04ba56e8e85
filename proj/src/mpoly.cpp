#include "cubsurf/mpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cubsurf/error.hpp"

namespace cubsurf {

Monomial Monomial::variable(std::size_t i, unsigned power) {
  require(i < kMaxVars, ErrorCode::invalid_argument, "variable index out of range");
  Monomial m;
  m.e[i] = static_cast<std::uint16_t>(power);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& m) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVars; ++i) q.e[i] = static_cast<std::uint16_t>(m.e[i] - e[i]);
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

namespace {

struct Greater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

MPoly combine(std::size_t n, const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b, int sb) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : grevlex_compare(a[i].first, b[j].first);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.emplace_back(b[j].first, sb > 0 ? b[j].second : Rational(-b[j].second));
      ++j;
    } else {
      Rational s = sb > 0 ? Rational(a[i].second + b[j].second) : Rational(a[i].second - b[j].second);
      if (s != 0) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return MPoly::from_terms(n, std::move(out));
}

}  // namespace

MPoly::MPoly(std::size_t nvars) : n_(nvars) {
  require(nvars >= 1 && nvars <= kMaxVars, ErrorCode::invalid_argument, "MPoly supports 1..5 variables");
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  if (c != 0) p.t_.emplace_back(Monomial{}, c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  require(i < nvars, ErrorCode::invalid_argument, "variable index out of range");
  MPoly p(nvars);
  p.t_.emplace_back(Monomial::variable(i), Rational(1));
  return p;
}

MPoly MPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  MPoly p(nvars);
  std::map<Monomial, Rational, Greater> acc;
  bool sorted = true;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    for (std::size_t i = nvars; i < kMaxVars; ++i)
      require(terms[k].first.e[i] == 0, ErrorCode::invalid_argument, "exponent on a missing variable");
    if (terms[k].second == 0 || (k > 0 && grevlex_compare(terms[k - 1].first, terms[k].first) <= 0)) sorted = false;
  }
  if (sorted) {
    p.t_ = std::move(terms);
    return p;
  }
  for (auto& [m, c] : terms) acc[m] += c;
  for (auto& [m, c] : acc)
    if (c != 0) p.t_.emplace_back(m, c);
  return p;
}

MPoly MPoly::from(const CubicForm4& f) {
  std::vector<Term> terms;
  for (const auto& [e, c] : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < 4; ++i) m.e[i] = static_cast<std::uint16_t>(e[i]);
    terms.emplace_back(m, c);
  }
  return from_terms(4, std::move(terms));
}

MPoly MPoly::from(const QuadForm& q) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < q.n(); ++i)
    for (std::size_t j = i; j < q.n(); ++j) {
      Rational c = q.coeff(i, j);
      if (c != 0) terms.emplace_back(Monomial::variable(i) * Monomial::variable(j), c);
    }
  return from_terms(q.n(), std::move(terms));
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, static_cast<int>(t.first.degree()));
  return d;
}

Rational MPoly::coeff(const Monomial& m) const {
  for (const auto& t : t_)
    if (t.first == m) return t.second;
  return 0;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coeff();
  return inv * *this;
}

MPoly MPoly::primitive() const {
  if (is_zero()) return *this;
  Vec cs;
  for (const auto& t : t_) cs.push_back(t.second);
  Integer den = lcm_of_denominators(cs);
  Vec scaled;
  for (const auto& c : cs) scaled.push_back(c * den);
  Integer g = gcd_of_numerators(scaled);
  Rational s = make_rational(den, g);
  if (leading_coeff() < 0) s = -s;
  return s * *this;
}

MPoly MPoly::derivative(std::size_t i) const {
  require(i < n_, ErrorCode::invalid_argument, "variable index out of range");
  std::vector<Term> out;
  for (const auto& [m, c] : t_) {
    if (m.e[i] == 0) continue;
    Monomial d = m;
    d.e[i] -= 1;
    out.emplace_back(d, c * m.e[i]);
  }
  return from_terms(n_, std::move(out));
}

MPoly MPoly::dehomogenize(std::size_t i) const {
  require(i < n_ && n_ >= 2, ErrorCode::invalid_argument, "cannot dehomogenize");
  std::vector<Term> out;
  for (const auto& [m, c] : t_) {
    Monomial d;
    std::size_t k = 0;
    for (std::size_t v = 0; v < n_; ++v)
      if (v != i) d.e[k++] = m.e[v];
    out.emplace_back(d, c);
  }
  return from_terms(n_ - 1, std::move(out));
}

Rational MPoly::evaluate(const Vec& x) const {
  require(x.size() == n_, ErrorCode::invalid_argument, "point dimension mismatch");
  Rational s = 0;
  for (const auto& [m, c] : t_) {
    Rational v = c;
    for (std::size_t i = 0; i < n_; ++i)
      for (unsigned k = 0; k < m.e[i]; ++k) v *= x[i];
    s += v;
  }
  return s;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.t_) t.second = -t.second;
  return p;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  require(a.n_ == b.n_, ErrorCode::invalid_argument, "variable count mismatch");
  return combine(a.n_, a.t_, b.t_, 1);
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  require(a.n_ == b.n_, ErrorCode::invalid_argument, "variable count mismatch");
  return combine(a.n_, a.t_, b.t_, -1);
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  require(a.n_ == b.n_, ErrorCode::invalid_argument, "variable count mismatch");
  std::vector<MPoly::Term> out;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) out.emplace_back(ma * mb, ca * cb);
  return MPoly::from_terms(a.n_, std::move(out));
}

MPoly operator*(const Rational& s, const MPoly& a) {
  MPoly p(a.n_);
  if (s == 0) return p;
  p.t_ = a.t_;
  for (auto& t : p.t_) t.second *= s;
  return p;
}

std::string MPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    Rational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    bool unit = a == 1 && !m.is_one();
    if (!unit) os << a.get_str();
    bool need_star = !unit;
    for (std::size_t i = 0; i < n_; ++i) {
      if (m.e[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << i;
      if (m.e[i] > 1) os << "^" << m.e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace cubsurf
