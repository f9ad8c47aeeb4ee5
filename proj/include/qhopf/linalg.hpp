#pragma once

// Dense exact matrices over cyclotomic numbers.

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qhopf/cyclotomic.hpp"

namespace qhopf {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycNumber& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycNumber& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;
  bool is_scalar() const;
  CycNumber trace() const;
  Matrix transpose() const;
  std::vector<CycNumber> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<CycNumber>& v);

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const CycNumber& s);
  /// this += s * rhs
  void add_scaled(const CycNumber& s, const Matrix& rhs);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const CycNumber& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<CycNumber> operator*(const std::vector<CycNumber>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycNumber> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

/// Throws SingularMatrix.
Matrix inverse(const Matrix& m);

/// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

/// Basis of {x : m x = 0}.
std::vector<std::vector<CycNumber>> nullspace(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Linearly independent columns of m spanning its image.
Matrix column_basis(const Matrix& m);

/// Some solution of A x = b, or nullopt.
std::optional<std::vector<CycNumber>> solve(const Matrix& a, const std::vector<CycNumber>& b);

Eigen::MatrixXcd to_complex(const Matrix& m);

}  // namespace qhopf
