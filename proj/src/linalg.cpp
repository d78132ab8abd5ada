#include "hsent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hsent {

namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 4) throw std::invalid_argument("ComplexMatrix: dim must be 2 or 4");
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) { check_dim(dim); }

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix a(dim);
  for (int i = 0; i < dim; ++i) a(i, i) = 1.0;
  return a;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  ComplexMatrix r = *this;
  r += o;
  return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  ComplexMatrix r = *this;
  r -= o;
  return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dim mismatch");
  for (int i = 0; i < dim_ * dim_; ++i) m_[i] += o.m_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dim mismatch");
  for (int i = 0; i < dim_ * dim_; ++i) m_[i] -= o.m_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double s) {
  for (int i = 0; i < dim_ * dim_; ++i) m_[i] *= s;
  return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dim mismatch");
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < dim_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i);
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(i, j));
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dim mismatch");
  double m = 0.0;
  for (int i = 0; i < dim_ * dim_; ++i) m = std::max(m, std::abs(m_[i] - o.m_[i]));
  return m;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) {
  ComplexMatrix r = a;
  r *= s;
  return r;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix r = a;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = s * a(i, j);
  return r;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dim mismatch");
  Complex s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) s += std::conj(a(i, j)) * b(i, j);
  return s;
}

double hs_norm_sq(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) s += std::norm(a(i, j));
  return s;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("tensor expects 2x2 factors");
  ComplexMatrix r(4);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) r(2 * i + j, 2 * k + l) = a(i, k) * b(j, l);
  return r;
}

Vec4 matvec(const ComplexMatrix& a, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i) {
    Complex s = 0.0;
    for (int j = 0; j < 4; ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Vec2 matvec2(const ComplexMatrix& a, const Vec2& v) {
  return {a(0, 0) * v[0] + a(0, 1) * v[1], a(1, 0) * v[0] + a(1, 1) * v[1]};
}

ComplexMatrix outer(const Vec4& v) {
  ComplexMatrix r(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = v[i] * std::conj(v[j]);
  return r;
}

ComplexMatrix outer2(const Vec2& v) {
  ComplexMatrix r(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = v[i] * std::conj(v[j]);
  return r;
}

Complex dot(const Vec4& a, const Vec4& b) {
  Complex s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Complex dot2(const Vec2& a, const Vec2& b) { return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]; }

double norm(const Vec4& v) { return std::sqrt(std::real(dot(v, v))); }
double norm2v(const Vec2& v) { return std::sqrt(std::real(dot2(v, v))); }

ComplexMatrix pauli_x() {
  ComplexMatrix s(2);
  s(0, 1) = 1.0;
  s(1, 0) = 1.0;
  return s;
}

ComplexMatrix pauli_y() {
  ComplexMatrix s(2);
  s(0, 1) = Complex(0.0, -1.0);
  s(1, 0) = Complex(0.0, 1.0);
  return s;
}

ComplexMatrix pauli_z() {
  ComplexMatrix s(2);
  s(0, 0) = 1.0;
  s(1, 1) = -1.0;
  return s;
}

//---------------------------------------------------------------------------
// Cyclic Jacobi for complex Hermitian matrices.
//
// Each rotation zeroes one off-diagonal pair (p,q).  With beta = H(p,q) =
// |beta| u the plane rotation
//     J = [ c        s u ]
//         [ -s u*    c   ]      (acting on coordinates p,q)
// is unitary, and J† H J has zero (p,q) entry when t = s/c solves
// t^2 + 2 theta t - 1 = 0 with theta = (H(q,q)-H(p,p)) / (2|beta|).
// The smaller-magnitude root keeps rotations gentle, which is what makes
// cyclic Jacobi unconditionally convergent.
//---------------------------------------------------------------------------

namespace {

double offdiag_norm_sq(const ComplexMatrix& h) {
  double s = 0.0;
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return s;
}

}  // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix& a, double herm_tol) {
  const int n = a.dim();
  // symmetrise; reject inputs that are materially non-Hermitian
  ComplexMatrix h(n);
  double dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex hij = 0.5 * (a(i, j) + std::conj(a(j, i)));
      dev = std::max(dev, std::abs(a(i, j) - hij));
      h(i, j) = hij;
    }
  if (dev > herm_tol) throw std::invalid_argument("eig_hermitian: input not Hermitian within tolerance");

  ComplexMatrix v = ComplexMatrix::identity(n);
  constexpr double kOffTol = 1e-13;  // on the off-diagonal HS norm
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (std::sqrt(offdiag_norm_sq(h)) < kOffTol) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const Complex beta = h(p, q);
        const double ab = std::abs(beta);
        if (ab < 1e-300) continue;
        const Complex u = beta / ab;
        const double theta = (std::real(h(q, q)) - std::real(h(p, p))) / (2.0 * ab);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // columns: col_p <- c col_p - s u* col_q ; col_q <- s u col_p + c col_q
        for (int r = 0; r < n; ++r) {
          const Complex hp = h(r, p), hq = h(r, q);
          h(r, p) = c * hp - s * std::conj(u) * hq;
          h(r, q) = s * u * hp + c * hq;
          const Complex vp = v(r, p), vq = v(r, q);
          v(r, p) = c * vp - s * std::conj(u) * vq;
          v(r, q) = s * u * vp + c * vq;
        }
        // rows: row_p <- c row_p - s u row_q ; row_q <- s u* row_p + c row_q
        for (int cidx = 0; cidx < n; ++cidx) {
          const Complex hp = h(p, cidx), hq = h(q, cidx);
          h(p, cidx) = c * hp - s * u * hq;
          h(q, cidx) = s * std::conj(u) * hp + c * hq;
        }
        // pin the exactly-known entries to kill rounding residue
        h(p, q) = 0.0;
        h(q, p) = 0.0;
        h(p, p) = std::real(h(p, p));
        h(q, q) = std::real(h(q, q));
      }
  }

  EigenDecomposition out;
  out.dim = n;
  out.vectors = ComplexMatrix(n);

  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.begin() + n,
            [&](int x, int y) { return std::real(h(x, x)) < std::real(h(y, y)); });
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = std::real(h(order[k], order[k]));
    for (int r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

MatrixLog2 matrix_log2(const ComplexMatrix& a, double support_tol) {
  MatrixLog2 out;
  out.eig = eig_hermitian(a);
  const int n = a.dim();
  if (out.eig.eigenvalues[0] < -support_tol)
    throw std::domain_error("matrix_log2: negative eigenvalue below -support_tol");

  out.value = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    const double lam = out.eig.eigenvalues[k];
    if (lam <= support_tol) continue;  // kernel direction, contributes 0
    out.support[k] = true;
    ++out.rank;
    const double l2 = std::log2(lam);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out.value(i, j) += l2 * out.eig.vectors(i, k) * std::conj(out.eig.vectors(j, k));
  }
  return out;
}

ComplexMatrix matrix_exp2(const ComplexMatrix& a) {
  const EigenDecomposition e = eig_hermitian(a);
  const int n = a.dim();
  ComplexMatrix r(n);
  for (int k = 0; k < n; ++k) {
    const double f = std::exp2(e.eigenvalues[k]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(i, j) += f * e.vectors(i, k) * std::conj(e.vectors(j, k));
  }
  return r;
}

}  // namespace hsent
