#include "grlie/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace grlie {

bool is_zero_vec(const Vec& v) {
  for (const auto& c : v) {
    if (!is_zero(c)) return false;
  }
  return true;
}

void axpy(Vec& y, const Rational& c, const Vec& x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy length mismatch");
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) {
      throw std::invalid_argument("ragged rows in Matrix::from_rows");
    }
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vec matvec(const Matrix& m, const Vec& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("matvec length mismatch");
  Vec out(m.rows(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  }
  return out;
}

RrefResult rref(Matrix m) {
  RrefResult result;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = m.rows();
    for (std::size_t r = pivot_row; r < m.rows(); ++r) {
      if (!is_zero(m(r, col))) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(found, c), m(pivot_row, c));
      }
    }
    const Rational inv = Rational(1) / m(pivot_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || is_zero(m(r, col))) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) -= factor * m(pivot_row, c);
      }
    }
    result.pivot_columns.push_back(col);
    ++pivot_row;
  }
  result.rank = result.pivot_columns.size();
  result.reduced = std::move(m);
  return result;
}

bool span_contains(const std::vector<Vec>& basis, const Vec& v) {
  EchelonBasis eb(v.size());
  for (const auto& b : basis) {
    if (b.size() != v.size()) {
      throw std::invalid_argument("span_contains length mismatch");
    }
    eb.insert(b);
  }
  return eb.contains(v);
}

std::vector<Vec> kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivot_columns) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec k(m.cols(), Rational(0));
    k[f] = 1;
    for (std::size_t row = 0; row < r.rank; ++row) {
      k[r.pivot_columns[row]] = -r.reduced(row, f);
    }
    basis.push_back(std::move(k));
  }
  return basis;
}

std::vector<Vec> complement(const std::vector<Vec>& sub,
                            const std::vector<Vec>& ambient) {
  const std::size_t width = !ambient.empty() ? ambient[0].size()
                            : !sub.empty()   ? sub[0].size()
                                             : 0;
  EchelonBasis ambient_span(width);
  for (const auto& a : ambient) ambient_span.insert(a);
  for (const auto& s : sub) {
    if (!ambient_span.contains(s)) {
      throw std::invalid_argument(
          "complement: sub is not contained in the ambient span");
    }
  }
  EchelonBasis eb(width);
  for (const auto& s : sub) eb.insert(s);
  std::vector<Vec> extension;
  for (const auto& a : ambient) {
    if (eb.insert(a)) extension.push_back(a);
  }
  return extension;
}

bool EchelonBasis::insert(Vec v) {
  if (v.size() != width_) {
    throw std::invalid_argument("EchelonBasis width mismatch");
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = v[pivots_[r]];
    if (!is_zero(c)) axpy(v, -c, rows_[r]);
  }
  std::size_t p = width_;
  for (std::size_t i = 0; i < width_; ++i) {
    if (!is_zero(v[i])) {
      p = i;
      break;
    }
  }
  if (p == width_) return false;
  const Rational inv = Rational(1) / v[p];
  for (auto& c : v) c *= inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = rows_[r][p];
    if (!is_zero(c)) axpy(rows_[r], -c, v);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) -
                   pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Vec EchelonBasis::reduce(Vec v) const {
  if (v.size() != width_) {
    throw std::invalid_argument("EchelonBasis width mismatch");
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = v[pivots_[r]];
    if (!is_zero(c)) axpy(v, -c, rows_[r]);
  }
  return v;
}

bool EchelonBasis::contains(Vec v) const { return is_zero_vec(reduce(std::move(v))); }

std::optional<Vec> EchelonBasis::coordinates(const Vec& v) const {
  if (v.size() != width_) {
    throw std::invalid_argument("EchelonBasis width mismatch");
  }
  // Rows are in reduced form, so the coefficient of row r is just the
  // coordinate of v at that row's pivot.
  Vec coeffs(rows_.size());
  Vec remainder = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    coeffs[r] = v[pivots_[r]];
    if (!is_zero(coeffs[r])) axpy(remainder, -coeffs[r], rows_[r]);
  }
  if (!is_zero_vec(remainder)) return std::nullopt;
  return coeffs;
}

}  // namespace grlie
