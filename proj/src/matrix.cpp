#include "cubsurf/matrix.hpp"

#include <utility>

#include "cubsurf/error.hpp"
#include "cubsurf/unipoly.hpp"

namespace cubsurf {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(data_.size() == rows * cols, ErrorCode::invalid_argument, "matrix entry count mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (e != 0) return false;
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::invalid_argument, "matrix add shape");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::invalid_argument, "matrix sub shape");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, ErrorCode::invalid_argument, "matrix mul shape");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (auto& e : c.data_) e *= s;
  return c;
}

std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& v) {
  require(a.cols_ == v.size(), ErrorCode::invalid_argument, "matrix-vector shape");
  std::vector<Rational> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Scales each row to integers; returns the product of the scale factors.
IntRows to_integer_rows(const Matrix& m, Integer& scale) {
  IntRows rows(m.rows(), std::vector<Integer>(m.cols()));
  scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational v = m(i, j) * l;
      rows[i][j] = v.get_num();
    }
    scale *= l;
  }
  return rows;
}

struct Echelon {
  IntRows rows;
  std::vector<std::size_t> pivots;
  int swap_sign = 1;
};

// Fraction-free Bareiss echelon form on integer rows. Entries below and left
// of pivots become zero; every entry stays a minor of the input.
Echelon bareiss(IntRows rows, std::size_t col_limit) {
  Echelon e;
  const std::size_t n = rows.size();
  const std::size_t m = n ? rows[0].size() : 0;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < std::min(m, col_limit) && r < n; ++c) {
    std::size_t p = r;
    while (p < n && rows[p][c] == 0) ++p;
    if (p == n) continue;
    if (p != r) {
      std::swap(rows[p], rows[r]);
      e.swap_sign = -e.swap_sign;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < m; ++j) {
        Integer t = rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        rows[i][j] = std::move(t);
      }
      rows[i][c] = 0;
    }
    // Rows above r are untouched; entries left of c in row r are already 0.
    prev = rows[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  e.rows = std::move(rows);
  return e;
}

}  // namespace

Rational det(const Matrix& m) {
  require(m.is_square(), ErrorCode::non_square_matrix, "det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer scale;
  Echelon e = bareiss(to_integer_rows(m, scale), n);
  if (e.pivots.size() < n) return 0;
  // Bareiss leaves det(scaled) in the last pivot.
  Rational d(e.rows[n - 1][n - 1] * e.swap_sign);
  return d / Rational(scale);
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Integer scale;
  return bareiss(to_integer_rows(m, scale), m.cols()).pivots.size();
}

std::vector<std::size_t> pivot_columns(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  Integer scale;
  return bareiss(to_integer_rows(m, scale), m.cols()).pivots;
}

UniPoly charpoly(const Matrix& m) {
  require(m.is_square(), ErrorCode::non_square_matrix, "charpoly of non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    Matrix amk = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return UniPoly(std::move(c));
}

std::optional<std::vector<Rational>> solve_linear(const Matrix& m, const std::vector<Rational>& rhs) {
  require(rhs.size() == m.rows(), ErrorCode::invalid_argument, "solve_linear rhs size");
  const std::size_t n = m.rows(), k = m.cols();
  Matrix aug(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(i, j);
    aug(i, k) = rhs[i];
  }
  Integer scale;
  Echelon e = bareiss(to_integer_rows(aug, scale), k + 1);
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  std::vector<Rational> x(k);
  for (std::size_t r = e.pivots.size(); r-- > 0;) {
    std::size_t c = e.pivots[r];
    Rational s(e.rows[r][k]);
    for (std::size_t j = c + 1; j < k; ++j)
      if (e.rows[r][j] != 0 && x[j] != 0) s -= Rational(e.rows[r][j]) * x[j];
    x[c] = s / Rational(e.rows[r][c]);
  }
  return x;
}

std::vector<std::vector<Rational>> kernel(const Matrix& m) {
  const std::size_t k = m.cols();
  std::vector<std::vector<Rational>> basis;
  if (m.rows() == 0) {
    for (std::size_t f = 0; f < k; ++f) {
      std::vector<Rational> v(k);
      v[f] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  Integer scale;
  Echelon e = bareiss(to_integer_rows(m, scale), k);
  std::vector<bool> is_pivot(k, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < k; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(k);
    x[f] = 1;
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
      std::size_t c = e.pivots[r];
      Rational s = 0;
      for (std::size_t j = c + 1; j < k; ++j)
        if (e.rows[r][j] != 0 && x[j] != 0) s -= Rational(e.rows[r][j]) * x[j];
      x[c] = s / Rational(e.rows[r][c]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  require(m.is_square(), ErrorCode::non_square_matrix, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  require(rank(m) == n, ErrorCode::invalid_argument, "matrix not invertible");
  Matrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    auto col = solve_linear(m, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
  }
  return inv;
}

}  // namespace cubsurf
