#include "cvq/numerics.hpp"

#include <algorithm>

namespace cvq {

namespace {

template <std::size_t N>
using RealSquare = std::array<double, N * N>;

// Cyclic Jacobi diagonalization of a real symmetric matrix, in place.
// On return the diagonal of `a` holds the eigenvalues; when `v` is non-null it
// receives the eigenvectors as columns.
template <std::size_t N>
void jacobi_symmetric(RealSquare<N>& a, RealSquare<N>* v) {
  if (v) {
    v->fill(0.0);
    for (std::size_t i = 0; i < N; ++i) (*v)[i * N + i] = 1.0;
  }
  double frob = 0.0;
  for (double x : a) frob += x * x;
  if (frob == 0.0) return;
  const double stop = frob * 1e-34;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) off += a[p * N + q] * a[p * N + q];
    if (off <= stop) break;

    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = a[p * N + q];
        if (apq == 0.0) continue;
        const double app = a[p * N + p];
        const double aqq = a[q * N + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a[k * N + p];
          const double akq = a[k * N + q];
          a[k * N + p] = c * akp - s * akq;
          a[k * N + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a[p * N + k];
          const double aqk = a[q * N + k];
          a[p * N + k] = c * apk - s * aqk;
          a[q * N + k] = s * apk + c * aqk;
        }
        a[p * N + q] = 0.0;
        a[q * N + p] = 0.0;

        if (v) {
          for (std::size_t k = 0; k < N; ++k) {
            const double vkp = (*v)[k * N + p];
            const double vkq = (*v)[k * N + q];
            (*v)[k * N + p] = c * vkp - s * vkq;
            (*v)[k * N + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }
}

// Real symmetric embedding [[Re H, -Im H], [Im H, Re H]] of a Hermitian matrix.
// Every eigenvalue of H appears twice in the embedding.
template <std::size_t N>
RealSquare<2 * N> real_embedding(const SquareMatrix<N>& h) {
  constexpr std::size_t M = 2 * N;
  RealSquare<M> e{};
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      // Symmetrize so rounding-level non-Hermiticity cannot break the embedding.
      const cplx hij = 0.5 * (h(i, j) + std::conj(h(j, i)));
      e[i * M + j] = hij.real();
      e[(i + N) * M + (j + N)] = hij.real();
      e[i * M + (j + N)] = -hij.imag();
      e[(i + N) * M + j] = hij.imag();
    }
  }
  return e;
}

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const SquareMatrix<N>& h) {
  constexpr std::size_t M = 2 * N;
  auto e = real_embedding(h);
  jacobi_symmetric<M>(e, nullptr);
  std::array<double, M> doubled{};
  for (std::size_t i = 0; i < M; ++i) doubled[i] = e[i * M + i];
  std::sort(doubled.begin(), doubled.end());
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return out;
}

void require_hermitian(const Matrix4& h, const char* who) {
  const double err = h.hermiticity_error();
  if (!(err <= kHermitianTolerance)) {
    throw ContractViolation(std::string(who) + ": input not Hermitian (deviation " +
                            std::to_string(err) + ")");
  }
}

}  // namespace

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

double bessel_i(int order, double y) {
  if (order != 0 && order != 1) throw DomainError("bessel_i: order must be 0 or 1");
  if (!(y >= 0.0 && y <= kBesselMaxArgument)) {
    throw DomainError("bessel_i: argument " + std::to_string(y) + " outside [0, 60]");
  }
  const double half = 0.5 * y;
  const double q = half * half;
  double term = order == 0 ? 1.0 : half;
  double sum = term;
  for (int m = 1; m < 500; ++m) {
    term *= q / (static_cast<double>(m) * static_cast<double>(m + order));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

std::array<double, 4> eigvals_hermitian4(const Matrix4& h) {
  require_hermitian(h, "eigvals_hermitian4");
  return hermitian_eigenvalues(h);
}

Matrix4 sqrt_psd4(const Matrix4& m) {
  require_hermitian(m, "sqrt_psd4");
  constexpr std::size_t M = 8;
  auto e = real_embedding(m);
  RealSquare<M> vecs{};
  jacobi_symmetric<M>(e, &vecs);

  std::array<double, M> root{};
  for (std::size_t i = 0; i < M; ++i) {
    const double lambda = e[i * M + i];
    if (lambda < -kPsdErrorTolerance) {
      throw NotPositiveSemidefinite("sqrt_psd4: eigenvalue " + std::to_string(lambda) +
                                    " below -1e-8");
    }
    root[i] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }

  // sqrt of the embedding is the embedding of the sqrt.
  Matrix4 s;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      double re = 0.0;
      double im = 0.0;
      for (std::size_t k = 0; k < M; ++k) {
        re += vecs[i * M + k] * root[k] * vecs[j * M + k];
        im += vecs[(i + 4) * M + k] * root[k] * vecs[j * M + k];
      }
      s(i, j) = cplx(re, im);
    }
  }
  // Exact Hermiticity.
  for (std::size_t i = 0; i < 4; ++i) {
    s(i, i) = s(i, i).real();
    for (std::size_t j = i + 1; j < 4; ++j) {
      const cplx avg = 0.5 * (s(i, j) + std::conj(s(j, i)));
      s(i, j) = avg;
      s(j, i) = std::conj(avg);
    }
  }
  return s;
}

std::array<double, 4> singular_values4(const Matrix4& m) {
  SquareMatrix<8> dilation;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      dilation(i, j + 4) = m(i, j);
      dilation(j + 4, i) = std::conj(m(i, j));
    }
  const auto eig = hermitian_eigenvalues(dilation);  // ascending: -s1..-s4, s4..s1
  std::array<double, 4> sv{};
  for (std::size_t i = 0; i < 4; ++i) {
    // Average the +s and -s copies; both carry the same absolute error.
    sv[i] = std::max(0.0, 0.5 * (eig[7 - i] - eig[i]));
  }
  return sv;
}

}  // namespace cvq
