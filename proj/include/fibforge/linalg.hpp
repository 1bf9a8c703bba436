// Small dense exact linear algebra, generic over the coefficient field.
#pragma once

#include <vector>

#include "fibforge/nfelem.hpp"
#include "fibforge/rat.hpp"

namespace fibforge {

// Uniform field interface for Rat, NFElem and similar exact types.
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static Rat zero(const Rat&) { return 0; }
  static Rat one(const Rat&) { return 1; }
  static bool is_zero(const Rat& x) { return x == 0; }
  static Rat inv(const Rat& x) { return Rat(1) / x; }
};

template <>
struct FieldOps<NFElem> {
  static NFElem zero(const NFElem& like) { return NFElem::zero(like.field()); }
  static NFElem one(const NFElem& like) { return NFElem::one(like.field()); }
  static bool is_zero(const NFElem& x) { return x.is_zero(); }
  static NFElem inv(const NFElem& x) { return x.inverse(); }
};

template <class F>
class Mat {
 public:
  Mat(std::size_t rows, std::size_t cols, const F& zero)
      : r_(rows), c_(cols), a_(rows, std::vector<F>(cols, zero)) {}

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  F& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  const F& at(std::size_t i, std::size_t j) const { return a_[i][j]; }

  // Reduced row echelon form in place; returns pivot column per pivot row.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
      std::size_t sel = row;
      while (sel < r_ && FieldOps<F>::is_zero(a_[sel][col])) ++sel;
      if (sel == r_) continue;
      std::swap(a_[sel], a_[row]);
      F inv = FieldOps<F>::inv(a_[row][col]);
      for (std::size_t j = col; j < c_; ++j) a_[row][j] = a_[row][j] * inv;
      for (std::size_t i = 0; i < r_; ++i) {
        if (i == row || FieldOps<F>::is_zero(a_[i][col])) continue;
        F factor = a_[i][col];
        for (std::size_t j = col; j < c_; ++j) a_[i][j] = a_[i][j] - factor * a_[row][j];
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Mat copy = *this;
    return copy.rref().size();
  }

  // Basis of the right kernel.
  std::vector<std::vector<F>> kernel(const F& zero, const F& one) const {
    Mat copy = *this;
    std::vector<std::size_t> pivots = copy.rref();
    std::vector<bool> is_pivot(c_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free_col = 0; free_col < c_; ++free_col) {
      if (is_pivot[free_col]) continue;
      std::vector<F> v(c_, zero);
      v[free_col] = one;
      for (std::size_t i = 0; i < pivots.size(); ++i)
        v[pivots[i]] = zero - copy.a_[i][free_col];
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t r_, c_;
  std::vector<std::vector<F>> a_;
};

// Determinant over a field by Gaussian elimination with pivoting.
template <class F>
F mat_det(Mat<F> m, const F& zero, const F& one) {
  std::size_t n = m.rows();
  F det = one;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t sel = k;
    while (sel < n && FieldOps<F>::is_zero(m.at(sel, k))) ++sel;
    if (sel == n) return zero;
    if (sel != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m.at(sel, j), m.at(k, j));
      det = zero - det;
    }
    det = det * m.at(k, k);
    F inv = FieldOps<F>::inv(m.at(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (FieldOps<F>::is_zero(m.at(i, k))) continue;
      F factor = m.at(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) m.at(i, j) = m.at(i, j) - factor * m.at(k, j);
    }
  }
  return det;
}

}  // namespace fibforge
