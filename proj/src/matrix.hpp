#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace cforge {

// Dense row-major matrix over F_p.
class MatrixF {
 public:
  MatrixF() : field_(2), rows_(0), cols_(0) {}
  MatrixF(PrimeField f, uint32_t rows, uint32_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  static MatrixF identity(PrimeField f, uint32_t n);

  PrimeField field() const { return field_; }
  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }

  uint32_t at(uint32_t i, uint32_t j) const { return a_[size_t(i) * cols_ + j]; }
  void set(uint32_t i, uint32_t j, uint32_t v) { a_[size_t(i) * cols_ + j] = v % field_.modulus(); }

  const uint32_t* row(uint32_t i) const { return a_.data() + size_t(i) * cols_; }
  uint32_t* row(uint32_t i) { return a_.data() + size_t(i) * cols_; }

  bool is_zero() const;
  bool is_identity() const;

  MatrixF operator+(const MatrixF& o) const;
  MatrixF operator-(const MatrixF& o) const;
  MatrixF operator*(const MatrixF& o) const;  // skips zero entries of *this
  MatrixF scaled(uint32_t c) const;
  MatrixF transposed() const;

  bool operator==(const MatrixF& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const MatrixF& o) const { return !(*this == o); }

  // first nonzero entry in row-major order, as ((i, j), value)
  std::optional<std::pair<std::pair<uint32_t, uint32_t>, uint32_t>> first_nonzero() const;

  std::string to_text() const;  // "matrix <r> <c> mod <p>" + rows

 private:
  PrimeField field_;
  uint32_t rows_, cols_;
  std::vector<uint32_t> a_;
};

MatrixF kronecker(const MatrixF& a, const MatrixF& b);
MatrixF matrix_from_text(const std::string& text);
MatrixF matrix_from_rows(PrimeField f, const std::vector<std::vector<uint32_t>>& rows);

// Row reduction. Pivoting is deterministic: scan columns left to right and
// take the first row with a nonzero entry. p = 2 runs on bit-packed rows.
struct Rref {
  MatrixF m;
  std::vector<uint32_t> pivots;  // pivot column per pivot row
  uint32_t rank() const { return uint32_t(pivots.size()); }
};

Rref rref(const MatrixF& m);
uint32_t rank(const MatrixF& m);

// columns span the right nullspace {v : M v = 0}; canonical free-variable basis
MatrixF nullspace_basis(const MatrixF& m);

// any X with A X = B (free variables zero), or nullopt if inconsistent
std::optional<MatrixF> solve(const MatrixF& a, const MatrixF& b);
std::optional<MatrixF> inverse(const MatrixF& m);

MatrixF hstack(const MatrixF& a, const MatrixF& b);
MatrixF block_diag(const std::vector<MatrixF>& blocks);

}  // namespace cforge
