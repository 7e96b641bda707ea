#pragma once

// Small fixed-size complex matrices and the handful of numerical routines the
// simulator needs: modified Bessel functions I0/I1, Hermitian eigenvalues,
// PSD square roots, singular values and a monotone bisection root finder.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

#include "cvq/errors.hpp"

namespace cvq {

using cplx = std::complex<double>;

template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t dim = N;

  constexpr SquareMatrix() = default;

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static SquareMatrix diagonal(const std::array<double, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * N + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * N + j]; }

  SquareMatrix adjoint() const {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  SquareMatrix conjugate() const {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.data_[k] = std::conj(data_[k]);
    return r;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  // Largest elementwise modulus of (this - other).
  double max_abs_diff(const SquareMatrix& other) const {
    double m = 0.0;
    for (std::size_t k = 0; k < N * N; ++k) m = std::max(m, std::abs(data_[k] - other.data_[k]));
    return m;
  }

  double hermiticity_error() const { return max_abs_diff(adjoint()); }
  bool is_hermitian(double tol) const { return hermiticity_error() <= tol; }

  bool is_unitary(double tol) const {
    return (adjoint() * (*this)).max_abs_diff(identity()) <= tol;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  SquareMatrix& operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, cplx s) { return a *= s; }
  friend SquareMatrix operator*(cplx s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<cplx, N * N> data_{};
};

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;

// Kronecker product of two 2x2 matrices, first factor on the slow index.
Matrix4 kron(const Matrix2& a, const Matrix2& b);

// Modified Bessel function of the first kind I_order(y), order in {0, 1},
// 0 <= y <= 60. Ascending power series; relative error ~1e-15.
double bessel_i(int order, double y);

inline constexpr double kBesselMaxArgument = 60.0;

// Ascending real eigenvalues of a Hermitian 4x4 matrix.
// Throws ContractViolation when the input is not Hermitian within 1e-10.
std::array<double, 4> eigvals_hermitian4(const Matrix4& h);

// Hermitian PSD square root. Eigenvalues in [-1e-8, 0) are clamped to zero;
// anything more negative throws NotPositiveSemidefinite.
Matrix4 sqrt_psd4(const Matrix4& m);

// Singular values of a general complex 4x4 matrix, descending. Computed from
// the spectrum of the Hermitian dilation [[0, M], [M^dagger, 0]] so small
// singular values keep absolute accuracy ~ eps * ||M||.
std::array<double, 4> singular_values4(const Matrix4& m);

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kPsdClampTolerance = 1e-10;
inline constexpr double kPsdErrorTolerance = 1e-8;

// Root of f(x) = target for nondecreasing f on [lo, hi].
// Returns x with |f(x) - target| <= tol or with the bracket narrowed below tol.
template <class F>
double bisect_increasing(F&& f, double target, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw DomainError("bisect_increasing: tol must be positive");
  if (!(lo <= hi)) throw BracketError("bisect_increasing: lo > hi");
  const double flo = f(lo);
  const double fhi = f(hi);
  if (!(flo <= target && target <= fhi)) {
    throw BracketError("bisect_increasing: target " + std::to_string(target) +
                       " not bracketed by [" + std::to_string(flo) + ", " + std::to_string(fhi) +
                       "]");
  }
  if (std::abs(flo - target) <= tol) return lo;
  if (std::abs(fhi - target) <= tol) return hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (std::abs(fm - target) <= tol) return mid;
    if (fm < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace cvq
