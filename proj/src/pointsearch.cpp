#include "cubsurf/pointsearch.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <type_traits>

#include "cubsurf/error.hpp"

namespace cubsurf {

namespace {

using i128 = __int128;

// Integer coefficient of x_i x_j (i <= j) for both quadrics, in a permuted
// coordinate order.
struct IntQuadrics {
  std::array<std::array<Integer, 5>, 5> c[2];
  Integer max_abs = 0;
};

IntQuadrics integer_coefficients(const DP4Surface& v, const std::array<int, 5>& perm) {
  IntQuadrics out;
  for (int f = 0; f < 2; ++f) {
    const QuadForm& q = f == 0 ? v.q0 : v.q1;
    Integer l = lcm_of_denominators(q.gram().entries());
    // coefficient of y_a y_b where y_a = x_perm[a]
    for (int a = 0; a < 5; ++a)
      for (int b = a; b < 5; ++b) {
        int i = perm[a], j = perm[b];
        Rational c = (i == j ? q.gram()(i, i) : Rational(2 * q.gram()(i, j))) * l;
        out.c[f][a][b] = c.get_num();
        out.max_abs = std::max(out.max_abs, Integer(cubsurf::abs(out.c[f][a][b])));
      }
  }
  return out;
}

template <class Z>
Z to_z(const Integer& n) {
  if constexpr (std::is_same_v<Z, Integer>) {
    return n;
  } else {
    // callers guarantee |n| < 2^100
    Integer hi = n / (Integer(1) << 62), lo = n - hi * (Integer(1) << 62);
    return static_cast<i128>(hi.get_si()) * (static_cast<i128>(1) << 62) + lo.get_si();
  }
}

template <class Z>
struct Poly4 {
  std::array<Z, 5> c{};  // c[k] x3^k
  int deg() const {
    for (int k = 4; k >= 0; --k)
      if (c[k] != 0) return k;
    return -1;
  }
  Z eval(long x) const {
    Z s = 0;
    for (int k = 4; k >= 0; --k) s = s * Z(x) + c[k];
    return s;
  }
};

template <class Z>
Poly4<Z> mul(const Poly4<Z>& a, const Poly4<Z>& b) {
  Poly4<Z> r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; i + j < 5; ++j)
      if (a.c[i] != 0 && b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

template <class Z>
Poly4<Z> sub(const Poly4<Z>& a, const Poly4<Z>& b) {
  Poly4<Z> r;
  for (int i = 0; i < 5; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

long double to_ld(const i128& v) { return static_cast<long double>(v); }
long as_long(const i128& v) { return static_cast<long>(v); }
long as_long(const Integer& v) { return v.get_si(); }
long double to_ld(const Integer& v) { return static_cast<long double>(v.get_d()); }

// Integer neighbours of the real roots of f and of its derivatives.
template <class Z>
std::vector<long> root_candidates(const Poly4<Z>& f, long h) {
  std::array<long double, 5> c{};
  for (int k = 0; k < 5; ++k) c[k] = to_ld(f.c[k]);
  int d = f.deg();
  std::vector<long double> marks;
  // derivative chain: roots of the k-th derivative bracket those of the (k-1)-th
  std::vector<std::vector<long double>> chain;
  for (int k = 0; k <= d; ++k) {
    std::vector<long double> g(d + 1 - k);
    for (int i = 0; i <= d - k; ++i) {
      long double fact = 1;
      for (int t = 0; t < k; ++t) fact *= static_cast<long double>(i + k - t);
      g[i] = c[i + k] * fact;
    }
    chain.push_back(std::move(g));
  }
  auto eval = [](const std::vector<long double>& g, long double x) {
    long double s = 0;
    for (std::size_t i = g.size(); i-- > 0;) s = s * x + g[i];
    return s;
  };
  const long double lo = -static_cast<long double>(h) - 2, hi = static_cast<long double>(h) + 2;
  std::vector<long double> roots;  // roots of chain[k+1]
  for (int k = d - 1; k >= 0; --k) {
    const auto& g = chain[k];
    std::vector<long double> pts{lo};
    for (auto r : roots)
      if (r > lo && r < hi) pts.push_back(r);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    std::vector<long double> found;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      long double a = pts[i], b = pts[i + 1];
      long double fa = eval(g, a), fb = eval(g, b);
      if (fa == 0) found.push_back(a);
      if ((fa < 0) == (fb < 0)) continue;
      for (int it = 0; it < 200 && b - a > 1e-9L * (1 + std::fabs(a)); ++it) {
        long double m = (a + b) / 2, fm = eval(g, m);
        if ((fm < 0) == (fa < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      found.push_back((a + b) / 2);
    }
    marks.insert(marks.end(), roots.begin(), roots.end());
    roots = std::move(found);
  }
  marks.insert(marks.end(), roots.begin(), roots.end());
  std::vector<long> out;
  for (auto r : marks) {
    long base = static_cast<long>(std::floor(r));
    for (long x = base - 1; x <= base + 2; ++x)
      if (x >= -h && x <= h) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Integer roots t with |t| <= h of a t^2 + b t + c (not all zero).
template <class Z>
std::vector<long> small_roots(const Z& a, const Z& b, const Z& c, long h) {
  std::vector<long> out;
  auto push = [&](const Z& num, const Z& den) {
    if (den == 0 || num % den != 0) return;
    Z t = num / den;
    if (t >= Z(-h) && t <= Z(h)) out.push_back(as_long(t));
  };
  if (a == 0) {
    if (b != 0) push(-c, b);
    return out;
  }
  Z disc = b * b - Z(4) * a * c;
  if (disc < 0) return out;
  Z s;
  if constexpr (std::is_same_v<Z, Integer>) {
    if (!is_perfect_square(disc)) return out;
    s = sqrt(disc);
  } else {
    long double approx = std::sqrt(static_cast<long double>(disc));
    s = static_cast<i128>(approx);
    while (s * s > disc) --s;
    while ((s + 1) * (s + 1) <= disc) ++s;
    if (s * s != disc) return out;
  }
  push(-b + s, Z(2) * a);
  if (s != 0) push(-b - s, Z(2) * a);
  return out;
}

bool primitive(const std::array<long, 5>& x) {
  long g = 0;
  for (long v : x) g = std::gcd(g, std::labs(v));
  return g == 1;
}

struct Searcher {
  const IntQuadrics& q;
  long h;

  template <class Z>
  Z value(int f, const std::array<long, 5>& x) const {
    Z s = 0;
    for (int a = 0; a < 5; ++a)
      for (int b = a; b < 5; ++b)
        if (x[a] != 0 && x[b] != 0) s += to_z<Z>(q.c[f][a][b]) * Z(x[a]) * Z(x[b]);
    return s;
  }

  template <class Z>
  void record_if_point(const std::array<long, 5>& x, std::vector<std::array<long, 5>>& out) const {
    if (!primitive(x)) return;
    if (value<Z>(0, x) == 0 && value<Z>(1, x) == 0) out.push_back(x);
  }

  // both quadrics restricted to fixed (y0, y1, y2)
  template <class Z>
  void fibre(long y0, long y1, long y2, std::vector<std::array<long, 5>>& out) const {
    const long y[3] = {y0, y1, y2};
    Z A[2];
    Poly4<Z> B[2], C[2];
    for (int f = 0; f < 2; ++f) {
      const auto& c = q.c[f];
      A[f] = to_z<Z>(c[4][4]);
      B[f].c[1] = to_z<Z>(c[3][4]);
      C[f].c[2] = to_z<Z>(c[3][3]);
      for (int i = 0; i < 3; ++i) {
        if (y[i] == 0) continue;
        B[f].c[0] += to_z<Z>(c[i][4]) * Z(y[i]);
        C[f].c[1] += to_z<Z>(c[i][3]) * Z(y[i]);
        for (int j = i; j < 3; ++j)
          if (y[j] != 0) C[f].c[0] += to_z<Z>(c[i][j]) * Z(y[i]) * Z(y[j]);
      }
    }
    Poly4<Z> a0{}, a1{};
    a0.c[0] = A[0];
    a1.c[0] = A[1];
    // Sylvester resultant of two quadratics in y4
    Poly4<Z> u = sub(mul(a0, C[1]), mul(a1, C[0]));
    Poly4<Z> w = sub(mul(a0, B[1]), mul(a1, B[0]));
    Poly4<Z> z = sub(mul(B[0], C[1]), mul(B[1], C[0]));
    Poly4<Z> r = sub(mul(u, u), mul(w, z));
    std::vector<long> x3s;
    if (r.deg() < 0) {
      for (long t = -h; t <= h; ++t) x3s.push_back(t);
    } else {
      for (long t : root_candidates(r, h))
        if (r.eval(t) == 0) x3s.push_back(t);
    }
    for (long t : x3s) {
      Z b0 = B[0].eval(t), c0 = C[0].eval(t), b1 = B[1].eval(t), c1 = C[1].eval(t);
      std::vector<long> x4s;
      if (A[0] != 0 || b0 != 0 || c0 != 0) {
        x4s = small_roots(A[0], b0, c0, h);
      } else if (A[1] != 0 || b1 != 0 || c1 != 0) {
        x4s = small_roots(A[1], b1, c1, h);
      } else {
        for (long s = -h; s <= h; ++s) x4s.push_back(s);
      }
      for (long s : x4s) record_if_point<Z>({y0, y1, y2, t, s}, out);
    }
  }

  template <class Z>
  void run_slice(long y0_begin, long y0_end, std::vector<std::array<long, 5>>& out) const {
    for (long y0 = y0_begin; y0 < y0_end; ++y0)
      for (long y1 = (y0 == 0 ? 0 : -h); y1 <= h; ++y1)
        for (long y2 = (y0 == 0 && y1 == 0 ? 1 : -h); y2 <= h; ++y2) fibre<Z>(y0, y1, y2, out);
  }

  // points with y0 = y1 = y2 = 0, and the naive scan used when no variable
  // carries a square term
  template <class Z>
  void scan_tail(std::vector<std::array<long, 5>>& out) const {
    for (long t = 0; t <= h; ++t)
      for (long s = (t == 0 ? 1 : -h); s <= h; ++s) record_if_point<Z>({0, 0, 0, t, s}, out);
  }

  template <class Z>
  void naive(long y0_begin, long y0_end, std::vector<std::array<long, 5>>& out) const {
    for (long y0 = y0_begin; y0 < y0_end; ++y0)
      for (long y1 = (y0 == 0 ? 0 : -h); y1 <= h; ++y1)
        for (long y2 = (y0 == 0 && y1 == 0 ? 1 : -h); y2 <= h; ++y2)
          for (long t = -h; t <= h; ++t)
            for (long s = -h; s <= h; ++s) record_if_point<Z>({y0, y1, y2, t, s}, out);
  }
};

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("CUBSURF_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

bool verify_point(const DP4Surface& v, const ProjPoint& p) {
  require(p.n() == 5, ErrorCode::invalid_argument, "point must have 5 coordinates");
  return contains_point(v.q0, p) && contains_point(v.q1, p);
}

SearchResult search(const DP4Surface& v, const SearchOptions& opts) {
  validate(v);
  require(opts.height >= 1, ErrorCode::invalid_argument, "height bound must be at least 1");
  auto start = std::chrono::steady_clock::now();
  const long h = opts.height;

  // eliminate a variable with a square term; it becomes the last coordinate
  int elim = -1;
  for (int i = 4; i >= 0 && elim < 0; --i)
    if (v.q0.gram()(i, i) != 0 || v.q1.gram()(i, i) != 0) elim = i;
  std::array<int, 5> perm{0, 1, 2, 3, 4};
  if (elim >= 0) std::swap(perm[elim], perm[4]);
  IntQuadrics q = integer_coefficients(v, perm);
  Searcher s{q, h};

  // every specialized coefficient is bounded by 15 * max|c| * h^2; the
  // resultant terms stay below 8 * bound^4
  Integer bound = Integer(15) * q.max_abs * h * h;
  const bool wide = bound > Integer("1000000000");

  unsigned threads = opts.threads ? opts.threads : default_thread_count();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(h + 1)));
  std::vector<std::vector<std::array<long, 5>>> parts(threads + 1);
  auto work = [&](unsigned id) {
    // y0 ranges over 0..h (first nonzero coordinate positive)
    long total = h + 1;
    long b = id * total / threads, e = (id + 1) * total / threads;
    if (elim < 0) {
      if (wide) s.naive<Integer>(b, e, parts[id]);
      else s.naive<i128>(b, e, parts[id]);
    } else if (wide) {
      s.run_slice<Integer>(b, e, parts[id]);
    } else {
      s.run_slice<i128>(b, e, parts[id]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < threads; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& t : pool) t.join();
  if (wide) s.scan_tail<Integer>(parts[threads]);
  else s.scan_tail<i128>(parts[threads]);

  SearchResult res;
  res.height_bound = h;
  res.threads_used = threads;
  for (const auto& part : parts)
    for (const auto& y : part) {
      std::vector<Integer> x(5);
      for (int a = 0; a < 5; ++a) x[perm[a]] = y[a];
      res.points.emplace_back(x);
    }
  std::sort(res.points.begin(), res.points.end());
  res.points.erase(std::unique(res.points.begin(), res.points.end()), res.points.end());
  for (const auto& p : res.points)
    require(verify_point(v, p), ErrorCode::internal, "point search returned a point off the surface");
  res.milliseconds = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace cubsurf
