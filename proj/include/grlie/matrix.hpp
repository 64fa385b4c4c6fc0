#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grlie/rational.hpp"

namespace grlie {

using Vec = std::vector<Rational>;

bool is_zero_vec(const Vec& v);
/// y += c * x
void axpy(Vec& y, const Rational& c, const Vec& x);

/// Dense rectangular matrix of exact rationals, row major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Vec row(std::size_t r) const;
  Matrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Vec matvec(const Matrix& m, const Vec& v);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

/// Reduced row echelon form by Gaussian elimination with first-nonzero
/// pivoting. Exact, deterministic, row space preserving.
RrefResult rref(Matrix m);

/// True iff v is a rational linear combination of the basis vectors.
/// Throws std::invalid_argument on length mismatch.
bool span_contains(const std::vector<Vec>& basis, const Vec& v);

/// Basis of the null space of m, one vector per free column in ascending
/// column order; m * k = 0 exactly for each returned k.
std::vector<Vec> kernel(const Matrix& m);

/// Greedy basis extension: the returned ambient vectors, together with sub,
/// form a basis of span(ambient). Vectors are taken from ambient in the
/// given order and returned unmodified. Throws std::invalid_argument when
/// span(sub) is not contained in span(ambient).
std::vector<Vec> complement(const std::vector<Vec>& sub,
                            const std::vector<Vec>& ambient);

/// Incrementally maintained reduced echelon basis: rows have unit leading
/// entries at strictly increasing pivot columns and zeros above/below each
/// pivot. Insertion order does not affect the final row set's span.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  /// Reduces v against the rows; returns true when v was independent and
  /// the basis grew.
  bool insert(Vec v);
  bool contains(Vec v) const;
  /// Remainder of v after reduction against the rows.
  Vec reduce(Vec v) const;
  /// Coefficients expressing v in the current rows, or nullopt when v is
  /// outside the span.
  std::optional<Vec> coordinates(const Vec& v) const;

  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t dimension() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  bool operator==(const EchelonBasis&) const = default;

 private:
  std::size_t width_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace grlie
