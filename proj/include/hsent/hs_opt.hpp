#ifndef HSENT_HS_OPT_HPP
#define HSENT_HS_OPT_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hsent/states.hpp"

namespace hsent {

// rank-1 projector |chi x xi><chi x xi| onto a product vector
struct ProductProjector {
  Vec2 chi{Complex(1.0), Complex(0.0)};
  Vec2 xi{Complex(1.0), Complex(0.0)};
  ComplexMatrix matrix() const;
  Vec4 product_vector() const;
};

// convex combination of product projectors
struct SeparableApprox {
  std::vector<ProductProjector> atoms;
  std::vector<double> weights;
};

void validate_separable_approx(const SeparableApprox& s);
DensityMatrix assemble_state(const SeparableApprox& s);

struct SolverConfig {
  int max_iters = 5000;
  double tol = 1e-6;        // on the Frank-Wolfe duality gap
  int lmo_restarts = 8;     // random multistarts inside the linear oracle
  int lmo_inner_iters = 50; // alternating steps per start
  std::uint64_t seed = 1;
};

struct EntanglementResult {
  double value = 0.0;          // squared HS distance to the basepoint
  SeparableApprox basepoint;   // explicit separable decomposition
  double gap = 0.0;            // last duality gap
  int iterations = 0;
  bool converged = false;
};

struct LmoResult {
  ProductProjector atom;
  double objective = 0.0;  // <atom, M> at the returned atom
};

// Linear minimisation oracle: approximately minimise tr(M omega) over
// product projectors omega by alternating 2x2 eigenproblems.  Starts from
// a fixed set of single-qubit axis states, the product factors of the
// minimal eigenvector of M, and cfg.lmo_restarts seeded random points; the
// best value found wins (global optimality is not guaranteed).
LmoResult lmo_product_projector(const ComplexMatrix& m, const SolverConfig& cfg = {});

// Frank-Wolfe solve of  min_{rho separable} |rho - sigma|^2  starting from
// the maximally mixed state.  Stops when the duality gap drops below
// cfg.tol or after cfg.max_iters steps.  Fully deterministic for a fixed
// (sigma, cfg).  If trace is non-null it receives the objective value at
// every iterate (monotone non-increasing, exact line search).
EntanglementResult nearest_separable(const DensityMatrix& sigma, const SolverConfig& cfg = {},
                                     std::vector<double>* trace = nullptr);

// Batch driver, OpenMP-parallel over inputs; items are independent so the
// results are bit-identical to the serial reference below.
std::vector<EntanglementResult> nearest_separable_batch(const std::vector<DensityMatrix>& sigmas,
                                                        const SolverConfig& cfg = {});
std::vector<EntanglementResult> nearest_separable_batch_serial(
    const std::vector<DensityMatrix>& sigmas, const SolverConfig& cfg = {});

// thrown by certify_basepoint when the candidate is not separable (PPT fails)
struct CertificateRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CertificateReport {
  double min_derivative = 0.0;  // min over product projectors of the
                                // directional derivative of |.-sigma|^2 at
                                // the candidate
  ProductProjector witness;     // where the minimum was attained
  bool passed = false;          // min_derivative >= -1e-7
};

// First-order optimality certificate: candidate is the nearest separable
// state to sigma iff no product projector is a descent direction, i.e.
//   min_omega 2 tr((sigma - c)(c - omega)) >= 0.
// Refuses candidates that fail the PPT test (not in the feasible set).
CertificateReport certify_basepoint(const DensityMatrix& sigma, const DensityMatrix& candidate,
                          const SolverConfig& cfg = {});

}  // namespace hsent

#endif
