#ifndef HSENT_STATES_HPP
#define HSENT_STATES_HPP

#include <vector>

#include "hsent/linalg.hpp"

namespace hsent {

// Two-qubit density matrix.  Construction always validates: Hermitian
// within 1e-10, trace 1 within 1e-10, smallest eigenvalue >= -1e-10.
class DensityMatrix {
public:
  static DensityMatrix from_matrix(const ComplexMatrix& m);
  const ComplexMatrix& matrix() const { return mat_; }
  int dim() const { return mat_.dim(); }

private:
  explicit DensityMatrix(const ComplexMatrix& m) : mat_(m) {}
  ComplexMatrix mat_;
};

// Index into the Bell basis, 1-based:
//   1: (|00> + |11>)/sqrt2    2: (|00> - |11>)/sqrt2
//   3: (|01> + |10>)/sqrt2    4: (|01> - |10>)/sqrt2
class BellIndex {
public:
  explicit BellIndex(int i);
  int value() const { return i_; }

private:
  int i_;
};

Vec4 bell_vector(BellIndex i);
DensityMatrix bell_projector(BellIndex i);

// equal mixture (P_i + P_j)/2 of two distinct Bell projectors; separable
DensityMatrix phi_mix(BellIndex i, BellIndex j);

// Werner-type state eps P_i + (1-eps) I/4, eps in [0,1]
DensityMatrix werner(BellIndex i, double eps);

// Schmidt form of a two-qubit pure state: coefficients a >= b >= 0 with
// a^2 + b^2 = 1, and one unitary frame per factor (columns = local Schmidt
// vectors).  The represented state is (frame1 (x) frame2)(a|00> + b|11>).
struct SchmidtForm {
  double a = 1.0;
  double b = 0.0;
  ComplexMatrix frame1{2};
  ComplexMatrix frame2{2};
};

// throws std::invalid_argument if s violates the SchmidtForm invariants
void validate_schmidt(const SchmidtForm& s, double tol = 1e-10);

SchmidtForm schmidt_decompose(const Vec4& psi);          // pre: unit vector
DensityMatrix pure_from_schmidt(const SchmidtForm& s);   // rank-1 projector

// transpose on the second factor: ((i,j),(k,l)) -> ((i,l),(k,j))
ComplexMatrix partial_transpose(const ComplexMatrix& m);

// trace out one factor (1 or 2), leaving a 2x2 matrix over the other
ComplexMatrix partial_trace(const ComplexMatrix& m, int traced_factor);

// PPT test: smallest eigenvalue of the partial transpose >= -tol.
// For two qubits PPT characterises separability exactly.
bool is_ppt(const DensityMatrix& rho, double tol = 1e-9);
double min_pt_eigenvalue(const ComplexMatrix& m);

// product channel K (x) L given by independent Kraus sets on each factor
struct LocalChannel {
  std::vector<ComplexMatrix> kraus1;  // 2x2 each
  std::vector<ComplexMatrix> kraus2;
};

LocalChannel local_unitary_channel(const ComplexMatrix& u1, const ComplexMatrix& u2);
LocalChannel depolarizing_channel(double p1, double p2);

// apply (sum_k K_k (x) L_l) rho (.)† ; rejects non-trace-preserving factors
DensityMatrix apply_local_channel(const DensityMatrix& rho, const LocalChannel& ch);

}  // namespace hsent

#endif
