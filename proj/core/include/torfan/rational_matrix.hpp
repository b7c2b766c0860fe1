#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "torfan/rational.hpp"

namespace torfan {

using RationalVector = std::vector<BigRational>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  // Matrix whose columns are the given vectors (all of length `rows`).
  static RationalMatrix from_columns(std::size_t rows, const std::vector<RationalVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigRational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigRational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalMatrix operator*(const BigRational& c) const;
  RationalVector operator*(const RationalVector& v) const;
  bool operator==(const RationalMatrix& other) const = default;

  RationalMatrix transpose() const;
  RationalMatrix pow(unsigned e) const;
  bool is_zero() const;
  BigRational trace() const;

  std::size_t rank() const;
  BigRational determinant() const;
  // Basis of {v : A v = 0}.
  std::vector<RationalVector> nullspace() const;
  // Basis of the column space, taken from pivot columns.
  std::vector<RationalVector> column_space() const;
  // Some solution of A x = b, or nullopt when inconsistent.
  std::optional<RationalVector> solve(const RationalVector& b) const;
  // Throws Inconsistent when singular.
  RationalMatrix inverse() const;

  ComplexMatrix to_complex() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> a_;
};

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

}  // namespace torfan
