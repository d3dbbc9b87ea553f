#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ptmnc/rational.hpp"

namespace ptmnc {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalVector matvec(const RationalMatrix& m, const RationalVector& v);
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
Rational dot(const RationalVector& a, const RationalVector& b);

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_cols;  // rank == pivot_cols.size()
};

RrefResult rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

// Basis of ker(m) from the RREF free-variable parametrization, one vector per
// free column in ascending order, each scaled to integer entries with gcd 1
// and positive leading nonzero entry. Deterministic.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

// Any exact solution of m*x = b, or nullopt when inconsistent.
std::optional<RationalVector> solve_linear(const RationalMatrix& m,
                                           const RationalVector& b);

// Scales v to integer entries (gcd 1) and makes the first nonzero entry
// positive. The zero vector is returned unchanged.
RationalVector integerize(const RationalVector& v);

}  // namespace ptmnc
