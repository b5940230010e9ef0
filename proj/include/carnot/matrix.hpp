#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "carnot/rational.hpp"

namespace carnot {

using Vec = std::vector<Rational>;

Rational dot(const Vec& a, const Vec& b);
Vec& add_scaled(Vec& a, const Rational& c, const Vec& b);  // a += c*b
bool is_zero(const Vec& v);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Rational& c) const;
  bool operator==(const Matrix& rhs) const = default;

  Vec apply(const Vec& x) const;   // this * x
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);

  bool is_zero() const;
  bool is_symmetric() const;

  /// Stacks rows of `top` over rows of `bottom` (equal column counts).
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  /// Joins columns side by side (equal row counts).
  static Matrix hstack(const Matrix& left, const Matrix& right);
  /// Builds a matrix whose rows are the given vectors.
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

}  // namespace carnot
