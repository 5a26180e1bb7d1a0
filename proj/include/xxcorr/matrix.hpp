#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace xxcorr {

using cplx = std::complex<double>;

inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Binary entropy in bits, h(p) = -p log2 p - (1-p) log2 (1-p). The trailing
// + 0.0 turns the IEEE -0.0 produced at p in {0, 1} into +0.0.
inline double binary_entropy(double p) { return -xlog2x(p) - xlog2x(1.0 - p) + 0.0; }

// Dense complex matrix of dimension 2 or 4, stored inline (no heap).
// Basis order for dim 4 is {|00>, |01>, |10>, |11>} with the first qubit (A)
// indexing the high bit: row index = 2*a + b.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim) : dim_(dim) {
    if (dim != 2 && dim != 4) throw std::invalid_argument("ComplexMatrix: dim must be 2 or 4");
  }

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }

  cplx& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * dim_ + c]; }
  const cplx& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * dim_ + c]; }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_same_dim(o);
    for (int i = 0; i < dim_ * dim_; ++i) data_[i] += o.data_[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    check_same_dim(o);
    for (int i = 0; i < dim_ * dim_; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  ComplexMatrix& operator*=(cplx s) {
    for (int i = 0; i < dim_ * dim_; ++i) data_[i] *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.check_same_dim(b);
    const int n = a.dim_;
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  ComplexMatrix conjugate() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) out(r, c) = std::conj((*this)(r, c));
    return out;
  }

  cplx trace() const {
    cplx t{};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (int i = 0; i < dim_ * dim_; ++i) m = std::max(m, std::abs(data_[i]));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (int i = 0; i < dim_ * dim_; ++i) s += std::norm(data_[i]);
    return std::sqrt(s);
  }

  double hermiticity_defect() const {
    double m = 0.0;
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c)
        m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
  }

  bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

 private:
  void check_same_dim(const ComplexMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  }

  int dim_;
  std::array<cplx, 16> data_{};
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

inline ComplexMatrix pauli_y() {
  ComplexMatrix m(2);
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = cplx(0.0, 1.0);
  return m;
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

inline ComplexMatrix identity2() { return ComplexMatrix::identity(2); }

// Tensor product, first factor on qubit A: out(2i+k, 2j+l) = a(i,j) * b(k,l).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("kron: both factors must be dim 2");
  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

enum class Qubit { A, B };

// Reduced operator of the kept qubit; requires a Hermitian input.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, Qubit keep) {
  if (rho.dim() != 4) throw std::invalid_argument("partial_trace: input must be dim 4");
  if (!rho.is_hermitian(1e-10)) throw std::invalid_argument("partial_trace: input not Hermitian");
  ComplexMatrix out(2);
  if (keep == Qubit::A) {
    for (int a = 0; a < 2; ++a)
      for (int ap = 0; ap < 2; ++ap)
        out(a, ap) = rho(2 * a + 0, 2 * ap + 0) + rho(2 * a + 1, 2 * ap + 1);
  } else {
    for (int b = 0; b < 2; ++b)
      for (int bp = 0; bp < 2; ++bp)
        out(b, bp) = rho(0 + b, 0 + bp) + rho(2 + b, 2 + bp);
  }
  return out;
}

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, same order
};

// Cyclic Jacobi sweeps for complex Hermitian matrices (dim 2 or 4).
// Each (p,q) plane rotation first removes the phase of the pivot, then applies
// the classic symmetric Schur rotation; converges unconditionally at this size.
inline SpectralDecomposition eig_hermitian(const ComplexMatrix& m) {
  if (!m.is_hermitian(1e-10)) throw std::invalid_argument("eig_hermitian: input not Hermitian");
  const int n = m.dim();

  ComplexMatrix a(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  // Convergence must stay relative to the matrix norm: quantities like
  // sqrt(rho)*rho~*sqrt(rho) can have norm far below 1, and an absolute
  // cutoff would accept the raw diagonal as the spectrum.
  const double scale = a.frobenius_norm();
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off2 = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off2 += std::norm(a(p, q));
    if (std::sqrt(2.0 * off2) <= 1e-15 * scale) break;

    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const cplx g = a(p, q);
        const double ag = std::abs(g);
        if (ag == 0.0) continue;
        const cplx u = g / ag;  // pivot phase
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * ag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- U^dag A U and V <- V U with U = [[c, s], [-s*u', c*u']],
        // u' = conj(u); the phase factor reduces the pivot to the real case.
        const cplx su = s * std::conj(u);
        for (int r = 0; r < n; ++r) {
          const cplx arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - su * arq;
          a(r, q) = s * arp + c * std::conj(u) * arq;
          const cplx vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - su * vrq;
          v(r, q) = s * vrp + c * std::conj(u) * vrq;
        }
        for (int col = 0; col < n; ++col) {
          const cplx apc = a(p, col), aqc = a(q, col);
          a(p, col) = c * apc - s * u * aqc;
          a(q, col) = s * apc + c * u * aqc;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  SpectralDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (int j = 0; j < n; ++j) {
    const int src = order[j];
    out.eigenvalues[j] = a(src, src).real();
    for (int r = 0; r < n; ++r) out.eigenvectors(r, j) = v(r, src);
    // Deterministic phase: first component above noise made real positive.
    for (int r = 0; r < n; ++r) {
      const cplx e = out.eigenvectors(r, j);
      if (std::abs(e) > 1e-12) {
        const cplx ph = std::conj(e) / std::abs(e);
        for (int rr = 0; rr < n; ++rr) out.eigenvectors(rr, j) *= ph;
        break;
      }
    }
  }
  return out;
}

// Singular values by one-sided Jacobi: column pairs are orthogonalized in
// place by right rotations and each sigma is read off as a final column norm.
// Working on the columns directly (never forming the Gram matrix as data)
// keeps the absolute error of small singular values near machine epsilon times
// the matrix norm instead of its square root.
inline std::vector<double> singular_values(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix k = m;
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double hpp = 0.0, hqq = 0.0;
        cplx g = 0.0;
        for (int r = 0; r < n; ++r) {
          hpp += std::norm(k(r, p));
          hqq += std::norm(k(r, q));
          g += std::conj(k(r, p)) * k(r, q);
        }
        const double ag = std::abs(g);
        if (ag <= 1e-14 * std::sqrt(hpp) * std::sqrt(hqq)) continue;
        const cplx u = g / ag;
        const double tau = (hqq - hpp) / (2.0 * ag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx su = s * std::conj(u);
        for (int r = 0; r < n; ++r) {
          const cplx krp = k(r, p), krq = k(r, q);
          k(r, p) = c * krp - su * krq;
          k(r, q) = s * krp + c * std::conj(u) * krq;
        }
        rotated = true;
      }
    if (!rotated) break;
  }
  std::vector<double> sig(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double nn = 0.0;
    for (int r = 0; r < n; ++r) nn += std::norm(k(r, j));
    sig[j] = std::sqrt(nn);
  }
  std::sort(sig.begin(), sig.end(), std::greater<double>());
  return sig;
}

// Validates Hermiticity, unit trace, and positive semidefiniteness within
// roundoff tolerances; returns the ascending eigenvalues for reuse.
inline std::vector<double> require_state(const ComplexMatrix& rho) {
  if (!rho.is_hermitian(1e-10)) throw std::invalid_argument("not a state: not Hermitian");
  if (std::abs(rho.trace() - cplx(1.0)) > 1e-8)
    throw std::invalid_argument("not a state: trace not 1");
  auto eig = eig_hermitian(rho);
  if (eig.eigenvalues.front() < -1e-10)
    throw std::invalid_argument("not a state: negative eigenvalue");
  return std::move(eig.eigenvalues);
}

// Von Neumann entropy in bits. Eigenvalues in [-1e-10, 0) are clamped to 0;
// anything more negative, or a non-unit trace, is rejected as not a state.
inline double von_neumann_entropy(const ComplexMatrix& rho) {
  if (!rho.is_hermitian(1e-10)) throw std::invalid_argument("von_neumann_entropy: not Hermitian");
  if (std::abs(rho.trace() - cplx(1.0)) > 1e-10)
    throw std::invalid_argument("von_neumann_entropy: trace not 1");
  const auto eig = eig_hermitian(rho);
  double s = 0.0;
  for (double lam : eig.eigenvalues) {
    if (lam < -1e-10) throw std::invalid_argument("von_neumann_entropy: negative eigenvalue");
    s -= xlog2x(std::max(lam, 0.0));
  }
  return s + 0.0;  // pure states would otherwise yield -0.0
}

}  // namespace xxcorr
