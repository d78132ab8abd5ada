#ifndef HSENT_CLOSED_FORM_HPP
#define HSENT_CLOSED_FORM_HPP

#include <array>
#include <string>

#include "hsent/states.hpp"

namespace hsent {

// which closed-form branch produced a result
enum class Regime { separable, bell_mixture, pure_central, pure_edge_conjecture };

std::string regime_name(Regime r);

// closed-form value together with the separable state attaining it
struct BasepointResult {
  double entanglement = 0.0;
  DensityMatrix basepoint;
  Regime regime = Regime::separable;
};

// State family  sigma = lambda_i P_i + sum_{j != i} lambda_j Phi_ij,
// where P_i is the distinguished Bell projector and Phi_ij = (P_i + P_j)/2.
// lambdas is indexed by Bell index - 1; entries must be >= 0 and sum to 1.
struct BellMixture {
  BellIndex i{1};                 // the distinguished Bell index
  std::array<double, 4> lambdas{1.0, 0.0, 0.0, 0.0};
};

void validate_bell_mixture(const BellMixture& m);
DensityMatrix bell_mixture_state(const BellMixture& m);

// E = lambda_i^2 / 3 with basepoint lambda_i W_{i,1/3} + sum lambda_j Phi_ij
BasepointResult ehs_bell_mixture(const BellMixture& m);

// Werner state eps P_i + (1-eps) I/4 as a BellMixture (needs eps >= 1/3)
BellMixture werner_mixture(BellIndex i, double eps);

// Pure-state results are parametrised by the square a2 = a^2 of the larger
// Schmidt coefficient of  a|00> + b|11>,  a2 in [1/2, 1] canonically but any
// a2 in [0,1] is accepted (a and b enter symmetrically).
//
// central interval: [1/2 - sqrt5/6, 1/2 + sqrt5/6], where the projection of
// sigma onto the plane spanned by the separable-boundary parabola is PSD
double central_a2_low();
double central_a2_high();

// candidate nearest point sigma - ab(4 P_1 - I)/3; PSD only in the central
// interval (equivalently 3ab >= 1), but defined for every a2 in [0,1]
ComplexMatrix central_candidate(double a2);

// smallest eigenvalue of central_candidate, in closed form
double central_candidate_min_eigenvalue(double a2);

// E = 4 a^2 b^2 / 3 on the central interval; basepoint = central_candidate
BasepointResult ehs_pure_central(double a2);

// Edge regime (a2 outside the open central interval): the conjectured
// nearest point is the parabola point p(t) with t the admissible root of
//   6 t^3 - 9 t^2 + (5 - a^2 + 2ab - b^2) t + (-1 - ab + b^2) = 0,
// and E is the squared distance |sigma - p(t)|^2.
std::array<double, 4> edge_cubic_coeffs(double a2);  // {c3, c2, c1, c0}
double edge_cubic_root(double a2);                   // admissible t in [0,1]
BasepointResult ehs_pure_edge(double a2);

// dispatch on a2: central interval (closed) -> central, else edge
BasepointResult ehs_pure(double a2);

// closed-form result for a general pure state, conjugated into its frame
BasepointResult ehs_pure_schmidt(const SchmidtForm& s);

// point s^2 P00 + (1-s)^2 P11 + 2 s(1-s) PT(P_3) of the boundary parabola;
// unit trace, PSD with smallest eigenvalue exactly 0, always PPT
DensityMatrix parabola_point(double s);

// E of the line mix  lam sigma + (1-lam) basepoint  =  lam^2 |sigma-basepoint|^2
double scaled_entanglement(const DensityMatrix& sigma, const DensityMatrix& basepoint,
                           double lam);

}  // namespace hsent

#endif
