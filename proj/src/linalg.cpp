#include "qhopf/linalg.hpp"

#include <numeric>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

/// lcm of the conductors, or 0 once the field gets too wide for the integer path.
std::uint32_t common_conductor(const std::vector<CycNumber>& data, std::uint32_t n) {
  for (const auto& x : data) {
    if (x.is_zero() || n % x.conductor() == 0) continue;
    n = std::lcm(n, x.conductor());
    if (euler_phi(n) > 8) return 0;
  }
  return n;
}

/// data[i] = Σ_s ints[i * width + s] ζ_n^s / den with a common denominator.
void clear_denominators(const std::vector<CycNumber>& data, std::uint32_t n, std::size_t width,
                        std::vector<mpz_class>& ints, mpz_class& den) {
  std::vector<CycNumber> lifted;
  lifted.reserve(data.size());
  den = 1;
  for (const auto& x : data) {
    lifted.push_back(x.is_zero() ? x : x.lift(n));
    for (const auto& q : lifted.back().coeffs()) {
      if (sgn(q) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
  }
  ints.assign(data.size() * width, mpz_class());
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    const auto& coeffs = lifted[i].coeffs();
    for (std::size_t s = 0; s < coeffs.size() && s < width; ++s) {
      if (sgn(coeffs[s]) == 0) continue;
      mpz_class& v = ints[i * width + s];
      v = den / coeffs[s].get_den();
      v *= coeffs[s].get_num();
    }
  }
}

bool nonzero(const std::vector<mpz_class>& ints, std::size_t at, std::size_t width) {
  for (std::size_t s = 0; s < width; ++s) {
    if (sgn(ints[at + s]) != 0) return true;
  }
  return false;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNumber(1L);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const CycNumber& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_scalar() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r == c) {
        if ((*this)(r, c) != (*this)(0, 0)) return false;
      } else if (!(*this)(r, c).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

CycNumber Matrix::trace() const {
  CycNumber t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<CycNumber> Matrix::column(std::size_t c) const {
  std::vector<CycNumber> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const std::vector<CycNumber>& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!rhs.data_[i].is_zero()) data_[i] += rhs.data_[i];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!rhs.data_[i].is_zero()) data_[i] -= rhs.data_[i];
  }
  return *this;
}

Matrix& Matrix::operator*=(const CycNumber& s) {
  for (auto& x : data_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

void Matrix::add_scaled(const CycNumber& s, const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!rhs.data_[i].is_zero()) data_[i].add_product(s, rhs.data_[i]);
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  const std::uint32_t n =
      a.rows_ * a.cols_ * b.cols_ >= 4096 ? common_conductor(b.data_, common_conductor(a.data_, 1)) : 0;
  if (n != 0) {
    // integer coefficients: one gcd per output entry instead of one per multiply-add
    const std::size_t w = euler_phi(n), wide = 2 * w - 1;
    std::vector<mpz_class> ia, ib;
    mpz_class da, db;
    clear_denominators(a.data_, n, w, ia, da);
    clear_denominators(b.data_, n, w, ib, db);
    std::vector<mpz_class> acc(out.data_.size() * wide);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::size_t xa = (r * a.cols_ + k) * w;
        if (!nonzero(ia, xa, w)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          const std::size_t yb = (k * b.cols_ + c) * w;
          mpz_class* z = &acc[(r * b.cols_ + c) * wide];
          for (std::size_t s = 0; s < w; ++s) {
            if (sgn(ia[xa + s]) == 0) continue;
            for (std::size_t t = 0; t < w; ++t) {
              if (sgn(ib[yb + t]) != 0) mpz_addmul(z[s + t].get_mpz_t(), ia[xa + s].get_mpz_t(), ib[yb + t].get_mpz_t());
            }
          }
        }
      }
    }
    const mpz_class den = da * db;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
      if (!nonzero(acc, i * wide, wide)) continue;
      std::vector<Rational> coeffs(wide);
      for (std::size_t s = 0; s < wide; ++s) coeffs[s] = Rational(acc[i * wide + s], den);
      out.data_[i] = CycNumber::from_coeffs(n, std::move(coeffs));
    }
    return out;
  }
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNumber& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const CycNumber& y = b(k, c);
        if (!y.is_zero()) out(r, c).add_product(x, y);
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<CycNumber> Matrix::operator*(const std::vector<CycNumber>& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  std::vector<CycNumber> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r].add_product((*this)(r, c), v[c]);
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const CycNumber& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
      }
    }
  }
  return out;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(row, k));
    }
    const CycNumber inv = m(row, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k) {
      if (!m(row, k).is_zero()) m(row, k) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      const CycNumber f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!m(row, k).is_zero()) m(r, k) -= f * m(row, k);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw SingularMatrix("non-square matrix has no inverse");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = CycNumber(1L);
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  }
  return out;
}

std::vector<std::vector<CycNumber>> nullspace(const Matrix& m) {
  Matrix r = m;
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<CycNumber>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycNumber> v(m.cols());
    v[free] = CycNumber(1L);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& m) {
  Matrix r = m;
  return row_reduce(r).size();
}

Matrix column_basis(const Matrix& m) {
  Matrix r = m;
  const auto pivots = row_reduce(r);
  Matrix out(m.rows(), pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) out.set_column(i, m.column(pivots[i]));
  return out;
}

std::optional<std::vector<CycNumber>> solve(const Matrix& a, const std::vector<CycNumber>& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side has wrong length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<CycNumber> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

Eigen::MatrixXcd to_complex(const Matrix& m) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).to_complex();
    }
  }
  return out;
}

}  // namespace qhopf
