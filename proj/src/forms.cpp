#include "cubsurf/forms.hpp"

#include <algorithm>
#include <sstream>

#include "cubsurf/error.hpp"

namespace cubsurf {

namespace {

std::string var(std::size_t i) { return "x" + std::to_string(i); }

void append_term(std::ostringstream& os, const Rational& c, const std::string& mono, bool& first) {
  if (c == 0) return;
  Rational a = c < 0 ? Rational(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  first = false;
  if (a != 1 || mono.empty()) {
    os << a.get_str();
    if (!mono.empty()) os << "*";
  }
  os << mono;
}

Matrix checked_change(const Matrix& m, std::size_t n) {
  require(m.rows() == n && m.is_square(), ErrorCode::invalid_argument, "change of variables has wrong shape");
  require(det(m) != 0, ErrorCode::invalid_argument, "change of variables is not invertible");
  return m;
}

// sparse product used by cubic substitution
using Sparse = std::map<Exponent4, Rational>;

Sparse times_linear(const Sparse& s, const Vec& lin) {
  Sparse out;
  for (const auto& [e, c] : s)
    for (int i = 0; i < 4; ++i) {
      if (lin[i] == 0) continue;
      Exponent4 f = e;
      ++f[i];
      out[f] += c * lin[i];
    }
  return out;
}

}  // namespace

LinForm LinForm::coordinate(std::size_t n, std::size_t i) {
  Vec c(n);
  c.at(i) = 1;
  return LinForm(std::move(c));
}

bool LinForm::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& a) { return a == 0; });
}

Rational LinForm::operator()(const Vec& x) const {
  require(x.size() == c.size(), ErrorCode::invalid_argument, "linear form dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * x[i];
  return s;
}

LinForm LinForm::primitive() const {
  if (is_zero()) return *this;
  Integer l = lcm_of_denominators(c);
  Vec d(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) d[i] = c[i] * l;
  Integer g = gcd_of_numerators(d);
  Rational s = Rational(1) / Rational(g);
  auto lead = std::find_if(d.begin(), d.end(), [](const Rational& a) { return a != 0; });
  if (*lead < 0) s = -s;
  for (auto& a : d) a *= s;
  return LinForm(std::move(d));
}

QuadForm::QuadForm(Matrix gram) : g_(std::move(gram)) {
  require(g_.is_symmetric(), ErrorCode::invalid_argument, "Gram matrix must be symmetric");
}

QuadForm QuadForm::from_upper(std::size_t n, const Vec& upper) {
  require(upper.size() == n * (n + 1) / 2, ErrorCode::invalid_argument, "wrong number of quadratic coefficients");
  Matrix g(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++k) {
      if (i == j) {
        g(i, i) = upper[k];
      } else {
        g(i, j) = upper[k] / 2;
        g(j, i) = g(i, j);
      }
    }
  return QuadForm(std::move(g));
}

QuadForm QuadForm::product(const LinForm& l, const LinForm& m) {
  require(l.n() == m.n(), ErrorCode::invalid_argument, "linear forms of different size");
  std::size_t n = l.n();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = (l.c[i] * m.c[j] + l.c[j] * m.c[i]) / 2;
  return QuadForm(std::move(g));
}

Vec QuadForm::upper() const {
  Vec u;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = i; j < n(); ++j) u.push_back(coeff(i, j));
  return u;
}

Rational QuadForm::coeff(std::size_t i, std::size_t j) const {
  return i == j ? g_(i, i) : Rational(2 * g_(i, j));
}

std::string QuadForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = i; j < n(); ++j)
      append_term(os, coeff(i, j), i == j ? var(i) + "^2" : var(i) + "*" + var(j), first);
  if (first) os << "0";
  return os.str();
}

void CubicForm4::add(const Exponent4& e, const Rational& c) {
  require(e[0] >= 0 && e[1] >= 0 && e[2] >= 0 && e[3] >= 0 && e[0] + e[1] + e[2] + e[3] == 3,
          ErrorCode::invalid_argument, "cubic exponent must be a nonnegative 4-tuple of total degree 3");
  if (c == 0) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) t_.erase(it);
}

void CubicForm4::set(const Exponent4& e, const Rational& c) {
  t_.erase(e);
  add(e, c);
}

Rational CubicForm4::coeff(const Exponent4& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rational(0) : it->second;
}

CubicForm4 CubicForm4::operator+(const CubicForm4& o) const {
  CubicForm4 r = *this;
  for (const auto& [e, c] : o.t_) r.add(e, c);
  return r;
}

CubicForm4 CubicForm4::operator-(const CubicForm4& o) const {
  CubicForm4 r = *this;
  for (const auto& [e, c] : o.t_) r.add(e, -c);
  return r;
}

CubicForm4 operator*(const Rational& s, const CubicForm4& f) {
  CubicForm4 r;
  if (s == 0) return r;
  for (const auto& [e, c] : f.t_) r.t_.emplace(e, s * c);
  return r;
}

Rational CubicForm4::max_abs_coeff() const {
  Rational m = 0;
  for (const auto& [e, c] : t_) m = std::max(m, Rational(::abs(c)));
  return m;
}

CubicForm4 CubicForm4::primitive() const {
  if (t_.empty()) return *this;
  Vec cs;
  for (const auto& [e, c] : t_) cs.push_back(c);
  Integer l = lcm_of_denominators(cs);
  for (auto& c : cs) c *= l;
  Rational s = Rational(l) / Rational(gcd_of_numerators(cs));
  if (t_.begin()->second < 0) s = -s;
  return s * *this;
}

std::vector<Exponent4> CubicForm4::monomials() {
  std::vector<Exponent4> out;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int c = 0; a + b + c <= 3; ++c) out.push_back({a, b, c, 3 - a - b - c});
  return out;
}

std::string CubicForm4::to_string() const {
  std::ostringstream os;
  bool first = true;
  // highest powers of x0 first
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    std::string mono;
    for (std::size_t i = 0; i < 4; ++i) {
      int k = it->first[i];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var(i);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    append_term(os, it->second, mono, first);
  }
  if (first) os << "0";
  return os.str();
}

CubicForm4 multiply(const LinForm& l, const QuadForm& q) {
  require(l.n() == 4 && q.n() == 4, ErrorCode::invalid_argument, "multiply expects four variables");
  CubicForm4 r;
  for (std::size_t k = 0; k < 4; ++k) {
    if (l.c[k] == 0) continue;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) {
        Rational c = q.coeff(i, j);
        if (c == 0) continue;
        Exponent4 e{0, 0, 0, 0};
        ++e[k];
        ++e[i];
        ++e[j];
        r.add(e, l.c[k] * c);
      }
  }
  return r;
}

ProjPoint::ProjPoint(const std::vector<Integer>& coords) : x_(coords) {
  Integer g = 0;
  for (const auto& a : x_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  require(g != 0, ErrorCode::invalid_argument, "projective point with all coordinates zero");
  auto lead = std::find_if(x_.begin(), x_.end(), [](const Integer& a) { return a != 0; });
  if (*lead < 0) g = -g;
  for (auto& a : x_) a /= g;
}

namespace {
std::vector<Integer> clear_denominators(const Vec& v) {
  Integer l = lcm_of_denominators(v);
  std::vector<Integer> out;
  for (const auto& a : v) {
    Rational s = a * l;
    out.push_back(s.get_num());
  }
  return out;
}
std::vector<Integer> from_longs(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long a : v) out.emplace_back(a);
  return out;
}
}  // namespace

ProjPoint::ProjPoint(const Vec& coords) : ProjPoint(clear_denominators(coords)) {}

ProjPoint::ProjPoint(std::initializer_list<long> coords) : ProjPoint(from_longs(coords)) {}

Vec ProjPoint::as_vec() const {
  Vec v;
  for (const auto& a : x_) v.emplace_back(a);
  return v;
}

Integer ProjPoint::height() const {
  Integer h = 0;
  for (const auto& a : x_) h = std::max(h, Integer(cubsurf::abs(a)));
  return h;
}

std::string ProjPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (i) s += " : ";
    s += x_[i].get_str();
  }
  return s + ")";
}

std::strong_ordering ProjPoint::cmp(const ProjPoint& a, const ProjPoint& b) {
  if (a.x_.size() != b.x_.size()) return a.x_.size() <=> b.x_.size();
  for (std::size_t i = 0; i < a.x_.size(); ++i) {
    int c = ::cmp(a.x_[i], b.x_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

ProjLine ProjLine::from_points(const ProjPoint& p, const ProjPoint& q) {
  require(p.n() == 4 && q.n() == 4, ErrorCode::invalid_argument, "lines live in P^3");
  Vec entries = p.as_vec();
  Vec qv = q.as_vec();
  entries.insert(entries.end(), qv.begin(), qv.end());
  Matrix m(2, 4, entries);
  require(rank(m) == 2, ErrorCode::invalid_argument, "line through coincident points");
  auto ker = kernel(m);
  ProjLine line;
  line.p_ = p;
  line.q_ = q;
  line.l0_ = LinForm(ker[0]).primitive();
  line.l1_ = LinForm(ker[1]).primitive();
  return line;
}

ProjLine ProjLine::from_forms(const LinForm& l0, const LinForm& l1) {
  require(l0.n() == 4 && l1.n() == 4, ErrorCode::invalid_argument, "lines live in P^3");
  Vec entries = l0.c;
  entries.insert(entries.end(), l1.c.begin(), l1.c.end());
  Matrix m(2, 4, entries);
  require(rank(m) == 2, ErrorCode::invalid_argument, "dependent linear forms do not cut a line");
  auto ker = kernel(m);
  ProjLine line;
  line.p_ = ProjPoint(ker[0]);
  line.q_ = ProjPoint(ker[1]);
  line.l0_ = l0;
  line.l1_ = l1;
  return line;
}

ProjLine ProjLine::from_parts(const ProjPoint& p, const ProjPoint& q, const LinForm& l0, const LinForm& l1) {
  ProjLine line = from_points(p, q);
  ProjLine cut = from_forms(l0, l1);
  require(line.same_as(cut), ErrorCode::invalid_argument, "points and forms describe different lines");
  line.l0_ = l0;
  line.l1_ = l1;
  return line;
}

bool ProjLine::same_as(const ProjLine& o) const {
  for (const auto& pt : {o.p_, o.q_}) {
    Vec v = pt.as_vec();
    if (l0_(v) != 0 || l1_(v) != 0) return false;
  }
  return true;
}

Rational BinaryQuintic::operator()(const Rational& lambda, const Rational& mu) const {
  Rational s = 0;
  for (int i = 5; i >= 0; --i) {
    Rational term = c[i];
    for (int k = 0; k < i; ++k) term *= lambda;
    for (int k = 0; k < 5 - i; ++k) term *= mu;
    s += term;
  }
  return s;
}

UniPoly BinaryQuintic::in_lambda() const { return UniPoly(Vec(c.begin(), c.end())); }

bool BinaryQuintic::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& a) { return a == 0; });
}

Rational evaluate(const QuadForm& q, const Vec& x) {
  require(x.size() == q.n(), ErrorCode::invalid_argument, "point dimension mismatch");
  const Matrix& g = q.gram();
  Rational s = 0;
  for (std::size_t i = 0; i < q.n(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < q.n(); ++j) row += g(i, j) * x[j];
    s += x[i] * row;
  }
  return s;
}

Rational evaluate(const CubicForm4& f, const Vec& x) {
  require(x.size() == 4, ErrorCode::invalid_argument, "point dimension mismatch");
  Rational s = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational t = c;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Vec gradient(const QuadForm& q, const Vec& x) {
  require(x.size() == q.n(), ErrorCode::invalid_argument, "point dimension mismatch");
  Vec g = q.gram() * x;
  for (auto& a : g) a *= 2;
  return g;
}

Vec gradient(const CubicForm4& f, const Vec& x) {
  require(x.size() == 4, ErrorCode::invalid_argument, "point dimension mismatch");
  Vec g(4);
  for (const auto& [e, c] : f.terms())
    for (int v = 0; v < 4; ++v) {
      if (e[v] == 0) continue;
      Rational t = c * e[v];
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < e[i] - (i == v ? 1 : 0); ++k) t *= x[i];
      g[v] += t;
    }
  return g;
}

bool contains_point(const QuadForm& q, const ProjPoint& p) { return evaluate(q, p.as_vec()) == 0; }

bool contains_point(const CubicForm4& f, const ProjPoint& p) { return evaluate(f, p.as_vec()) == 0; }

QuadForm substitute(const QuadForm& q, const Matrix& change) {
  checked_change(change, q.n());
  return QuadForm(change.transpose() * q.gram() * change);
}

CubicForm4 substitute(const CubicForm4& f, const Matrix& change) {
  checked_change(change, 4);
  std::array<Vec, 4> rows;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rows[i].push_back(change(i, j));
  CubicForm4 out;
  for (const auto& [e, c] : f.terms()) {
    Sparse s{{Exponent4{0, 0, 0, 0}, c}};
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < e[i]; ++k) s = times_linear(s, rows[i]);
    for (const auto& [m, v] : s) out.add(m, v);
  }
  return out;
}

Restriction restrict_to_hyperplane(const QuadForm& q, const LinForm& l) {
  require(l.n() == q.n(), ErrorCode::invalid_argument, "hyperplane dimension mismatch");
  require(!l.is_zero(), ErrorCode::invalid_argument, "restriction to the zero linear form");
  std::size_t n = q.n();
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (::abs(l.c[i]) > ::abs(l.c[k])) k = i;
  Matrix b(n, n - 1);
  std::size_t col = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    b(j, col) = 1;
    b(k, col) = -l.c[j] / l.c[k];
    ++col;
  }
  Restriction r;
  r.form = QuadForm(b.transpose() * q.gram() * b);
  r.basis = std::move(b);
  r.eliminated = k;
  return r;
}

BinaryQuintic pencil_determinant(const QuadForm& q0, const QuadForm& q1) {
  require(q0.n() == 5 && q1.n() == 5, ErrorCode::invalid_argument, "pencil_determinant expects forms in 5 variables");
  // interpolate through (lambda : 1), lambda = 0..5
  Vec xs, vals;
  for (int i = 0; i < 6; ++i) {
    xs.emplace_back(i);
    vals.push_back(det(Rational(i) * q0.gram() + q1.gram()));
  }
  UniPoly f = interpolate(xs, vals);
  BinaryQuintic b;
  for (int i = 0; i < 6; ++i) b.c[i] = f.coeff(i);
  return b;
}

bool contains_line(const CubicForm4& f, const ProjLine& line) {
  // a binary cubic vanishing at four distinct points of P^1 is zero
  Vec p = line.p().as_vec(), q = line.q().as_vec();
  const std::pair<int, int> st[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  for (auto [s, t] : st) {
    Vec x(4);
    for (int i = 0; i < 4; ++i) x[i] = s * p[i] + t * q[i];
    if (evaluate(f, x) != 0) return false;
  }
  return true;
}

Inertia signature(const QuadForm& q) {
  Matrix a = q.gram();
  std::size_t n = a.rows();
  Inertia in;
  std::size_t i = 0;
  for (; i < n; ++i) {
    std::size_t piv = i;
    while (piv < n && a(piv, piv) == 0) ++piv;
    if (piv == n) {
      // all remaining diagonal entries vanish; x_i += x_j creates 2 a_ij
      bool found = false;
      for (std::size_t r = i; r < n && !found; ++r)
        for (std::size_t c = r + 1; c < n && !found; ++c) {
          if (a(r, c) == 0) continue;
          for (std::size_t k = 0; k < n; ++k) a(r, k) += a(c, k);
          for (std::size_t k = 0; k < n; ++k) a(k, r) += a(k, c);
          piv = r;
          found = true;
        }
      if (!found) break;
    }
    if (piv != i) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(piv, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, piv));
    }
    const Rational d = a(i, i);
    for (std::size_t r = i + 1; r < n; ++r) {
      if (a(r, i) == 0) continue;
      Rational f = a(r, i) / d;
      for (std::size_t k = i; k < n; ++k) a(r, k) -= f * a(i, k);
      for (std::size_t k = i; k < n; ++k) a(k, r) = a(r, k);
    }
    (d > 0 ? in.positive : in.negative)++;
  }
  in.zero = n - in.positive - in.negative;
  return in;
}

}  // namespace cubsurf
