#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "orbitc/common.hpp"

namespace orbitc {

// Scalar adapters so the same dense-matrix code runs over exact rationals
// (CRat) and over complex doubles.
template <class S> struct ScalarOps;

template <> struct ScalarOps<CRat> {
  using Real = Rat;
  static CRat from_rat(const Rat& r) { return CRat(r); }
  static CRat imag_unit() { return crat_i(); }
  static CRat conj(const CRat& z) { return z.conj(); }
  static bool is_zero(const CRat& z) { return z.is_zero(); }
  static Real real(const CRat& z) { return z.re; }
  static Real imag(const CRat& z) { return z.im; }
};

template <> struct ScalarOps<std::complex<double>> {
  using Real = double;
  static std::complex<double> from_rat(const Rat& r) { return {r.get_d(), 0.0}; }
  static std::complex<double> imag_unit() { return {0.0, 1.0}; }
  static std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }
  static bool is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0, 0.0); }
  static Real real(const std::complex<double>& z) { return z.real(); }
  static Real imag(const std::complex<double>& z) { return z.imag(); }
};

/// Small dense square-ish matrix; value semantics throughout.
template <class S>
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat r(x.rows_, x.cols_);
    for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat r(x.rows_, x.cols_);
    for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
    return r;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const S& xik = x(i, k);
        if (ScalarOps<S>::is_zero(xik)) continue;
        for (int j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }
  friend Mat operator*(const S& c, const Mat& x) {
    Mat r(x.rows_, x.cols_);
    for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = c * x.a_[k];
    return r;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  Mat conj_transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = ScalarOps<S>::conj((*this)(i, j));
    return r;
  }

  S trace() const {
    S t{};
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<S> a_;
};

using MatQ = Mat<CRat>;
using MatZ = Mat<std::complex<double>>;

/// Exact inverse by Gauss-Jordan; nullopt if singular.
std::optional<MatQ> invert_exact(const MatQ& m);

/// Rank of a stack of exact rational row vectors. Destroys its argument.
int rank_rows_exact(std::vector<std::vector<Rat>>& rows);

/// Numerical rank: singular values above rel_tol * sigma_max.
int rank_rows_numeric(const std::vector<std::vector<double>>& rows, double rel_tol);

}  // namespace orbitc
