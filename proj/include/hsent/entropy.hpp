#ifndef HSENT_ENTROPY_HPP
#define HSENT_ENTROPY_HPP

#include "hsent/states.hpp"

namespace hsent {

struct RelEntropyValue {
  double value = 0.0;             // +infinity when support_violated
  bool support_violated = false;  // supp(sigma) not inside supp(rho)
};

// S(sigma||rho) = tr(sigma log2 sigma - sigma log2 rho), in bits.
// +infinity (support_violated) when sigma has weight outside rho's support,
// decided at eigenvalue threshold 1e-10.
RelEntropyValue relative_entropy(const DensityMatrix& sigma, const DensityMatrix& rho);

// binary entropy of a2 in bits with 0 log 0 := 0; exactly symmetric about
// a2 = 1/2 (the argument is folded before evaluation)
double evn_pure(double a2);

// slack of the inequality E_vN >= E_HS / 2: returns e_vn - e_hs/2, negative
// iff the inequality is violated
double prop3_check(double e_vn, double e_hs);

// true iff the entropy measure and the HS measure order the two pure states
// the same way, ties compared at 1e-12
bool same_order_check(double a2_1, double a2_2);

}  // namespace hsent

#endif
