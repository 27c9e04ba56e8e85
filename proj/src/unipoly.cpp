#include "cubsurf/unipoly.hpp"

#include "cubsurf/error.hpp"

namespace cubsurf {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly(std::vector<Rational>{-r, 1}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  Rational l = leading();
  for (auto& c : r.c_) c /= l;
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Rational UniPoly::content() const {
  if (is_zero()) return 0;
  Integer l = lcm_of_denominators(c_);
  std::vector<Rational> scaled;
  for (const auto& c : c_) scaled.push_back(c * l);
  Integer g = gcd_of_numerators(scaled);
  Rational cont = make_rational(g, l);
  if (leading() < 0) cont = -cont;
  return cont;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  Rational cont = content();
  UniPoly r = *this;
  for (auto& c : r.c_) c /= cont;
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rational c = c_[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    bool unit = (c == 1) && i > 0;
    if (!unit) out += c.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  require(!b.is_zero(), ErrorCode::zero_polynomial, "division by zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> q(r.size() - db);
  const Rational lb = bc.back();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    Rational f = r[k] / lb;
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * bc[j];
  }
  r.resize(db);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    UniPoly r = (x % y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

void xgcd(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& s, UniPoly& t) {
  UniPoly r0 = a, r1 = b, s0 = UniPoly::constant(1), s1, t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    g = r0;
    s = s0;
    t = t0;
    return;
  }
  Rational l = r0.leading();
  g = r0 * (1 / l);
  s = s0 * (1 / l);
  t = t0 * (1 / l);
}

UniPoly pow(const UniPoly& a, unsigned e) {
  UniPoly r = UniPoly::constant(1), b = a;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

UniPoly compose(const UniPoly& g, const UniPoly& f) {
  UniPoly acc;
  const auto& gc = g.coeffs();
  for (std::size_t i = gc.size(); i-- > 0;) acc = acc * f + UniPoly::constant(gc[i]);
  return acc;
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  require(xs.size() == ys.size(), ErrorCode::invalid_argument, "interpolation sizes differ");
  UniPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= UniPoly::linear_root(xs[j]);
      denom *= xs[i] - xs[j];
    }
    require(denom != 0, ErrorCode::invalid_argument, "interpolation nodes must be distinct");
    out += basis * Rational(ys[i] / denom);
  }
  return out;
}

bool is_squarefree(const UniPoly& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {
Rational rpow(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}
}  // namespace

Rational resultant(const UniPoly& a, const UniPoly& b) {
  // Euclidean recursion over Q: res(a,b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} res(b, r).
  if (a.is_zero() || b.is_zero()) return 0;
  int da = a.degree(), db = b.degree();
  if (da == 0) return rpow(a.leading(), db);
  if (db == 0) return rpow(b.leading(), da);
  UniPoly r = a % b;
  if (r.is_zero()) return 0;
  Rational sgn = ((da * db) % 2) ? -1 : 1;
  int dr = r.degree();
  return sgn * rpow(b.leading(), da - dr) * resultant(b, r);
}

Rational discriminant(const UniPoly& f) {
  int n = f.degree();
  require(n >= 1, ErrorCode::invalid_argument, "discriminant of constant");
  Rational sgn = ((n * (n - 1) / 2) % 2) ? -1 : 1;
  return sgn * resultant(f, f.derivative()) / f.leading();
}

}  // namespace cubsurf
