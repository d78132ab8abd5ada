#ifndef HSENT_LINALG_HPP
#define HSENT_LINALG_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace hsent {

using Complex = std::complex<double>;
using Vec2 = std::array<Complex, 2>;
using Vec4 = std::array<Complex, 4>;

// Dense complex square matrix of dimension 2 or 4, row-major.
// The dimension is fixed at construction; storage is inline so values
// are cheap to copy and safe to share across threads.
class ComplexMatrix {
public:
  explicit ComplexMatrix(int dim);
  static ComplexMatrix identity(int dim);
  static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

  int dim() const { return dim_; }

  Complex& operator()(int r, int c) { return m_[r * dim_ + c]; }
  const Complex& operator()(int r, int c) const { return m_[r * dim_ + c]; }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;  // matrix product
  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(double s);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  // max |entry| difference; matrices must have equal dimension
  double max_abs_diff(const ComplexMatrix& o) const;

private:
  int dim_;
  std::array<Complex, 16> m_{};
};

ComplexMatrix operator*(double s, const ComplexMatrix& a);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

// tr(A† B); conjugate-symmetric, hs_inner(A,A) real and >= 0
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
// tr(A† A)
double hs_norm_sq(const ComplexMatrix& a);

// Kronecker product of two 2x2 matrices in the basis order
// |00>,|01>,|10>,|11| (first factor = slow index).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

Vec4 matvec(const ComplexMatrix& a, const Vec4& v);
Vec2 matvec2(const ComplexMatrix& a, const Vec2& v);

// |v><v| (no normalisation applied)
ComplexMatrix outer(const Vec4& v);
ComplexMatrix outer2(const Vec2& v);

Complex dot(const Vec4& a, const Vec4& b);   // <a|b>
Complex dot2(const Vec2& a, const Vec2& b);
double norm(const Vec4& v);
double norm2v(const Vec2& v);

// Pauli matrices (2x2)
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// Hermitian eigendecomposition, eigenvalues ascending, V unitary with
// A = V diag(w) V†.  Input is symmetrised as (A+A†)/2 first; inputs that
// are non-Hermitian beyond herm_tol are rejected.
struct EigenDecomposition {
  std::array<double, 4> eigenvalues{};  // first dim() entries valid
  ComplexMatrix vectors{4};             // eigenvectors as columns
  int dim = 0;
};

EigenDecomposition eig_hermitian(const ComplexMatrix& a, double herm_tol = 1e-10);

// Spectral log base 2 of a PSD matrix, taken on the support.  Eigenvalues
// <= support_tol contribute 0 to the log; which eigenvalues were kept is
// reported so callers can reason about the kernel.  Eigenvalues below
// -support_tol are rejected.
struct MatrixLog2 {
  ComplexMatrix value{4};
  std::array<bool, 4> support{};  // aligned with eig.eigenvalues
  int rank = 0;
  EigenDecomposition eig;
};

MatrixLog2 matrix_log2(const ComplexMatrix& a, double support_tol = 1e-12);

// exp2 of a Hermitian matrix (spectral), the inverse of matrix_log2 on
// full-rank inputs
ComplexMatrix matrix_exp2(const ComplexMatrix& a);

}  // namespace hsent

#endif
