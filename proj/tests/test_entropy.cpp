// Relative entropy, pure-state von Neumann entanglement, and the inequality
// chain linking the entropy measure to the HS measure.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hsent/closed_form.hpp"
#include "hsent/entropy.hpp"
#include "hsent/rng.hpp"
#include "test_util.hpp"

using namespace hsent;
using testutil::random_density;

TEST_CASE("relative entropy reference values") {
  const DensityMatrix bell = bell_projector(BellIndex(1));
  const DensityMatrix w = werner(BellIndex(1), 1.0 / 3.0);

  const RelEntropyValue self = relative_entropy(w, w);
  CHECK_FALSE(self.support_violated);
  CHECK(std::abs(self.value) <= 1e-9);

  // Psi1's eigenvector has W-eigenvalue 1/2, so S = -log2(1/2) = 1
  const RelEntropyValue bw = relative_entropy(bell, w);
  CHECK_FALSE(bw.support_violated);
  CHECK(std::abs(bw.value - 1.0) <= 1e-9);

  // S(Psi1 || I/4) = log2 4 = 2
  const RelEntropyValue bi = relative_entropy(
      bell, DensityMatrix::from_matrix(0.25 * ComplexMatrix::identity(4)));
  CHECK(std::abs(bi.value - 2.0) <= 1e-9);

  // disjoint supports
  const RelEntropyValue disj = relative_entropy(bell, bell_projector(BellIndex(2)));
  CHECK(disj.support_violated);
  CHECK(std::isinf(disj.value));
}

TEST_CASE("Klein and Pinsker-type bounds on 1000 random pairs") {
  PhiloxRng rng(51, 0);
  for (int k = 0; k < 1000; ++k) {
    const DensityMatrix sigma = random_density(rng);  // full rank a.s.
    const DensityMatrix rho = random_density(rng);
    const RelEntropyValue s = relative_entropy(sigma, rho);
    REQUIRE_FALSE(s.support_violated);
    CHECK(s.value >= 0.0);  // Klein inequality
    // the estimate behind the entropy/HS comparison
    CHECK(s.value >= 0.5 * hs_norm_sq(sigma.matrix() - rho.matrix()) - 1e-9);
  }
}

TEST_CASE("binary entropy reference values and exact symmetry") {
  CHECK(std::abs(evn_pure(0.5) - 1.0) <= 1e-15);
  CHECK(evn_pure(0.0) == 0.0);
  CHECK(evn_pure(1.0) == 0.0);
  CHECK(std::abs(evn_pure(0.25) - 0.811278124459132864) <= 1e-12);
  CHECK_THROWS_AS((void)evn_pure(1.5), std::domain_error);

  // symmetry is exact: pairs (x, 1-x) generated from x >= 1/2 subtract exactly
  PhiloxRng rng(52, 0);
  for (int k = 0; k < 200; ++k) {
    const double x = 0.5 + 0.5 * rng.uniform();
    CHECK(evn_pure(x) == evn_pure(1.0 - x));
  }
  for (int k = 0; k <= 64; ++k) {
    const double x = k / 64.0;  // dyadic grid: 1-x is exact
    CHECK(evn_pure(x) == evn_pure(1.0 - x));
  }
}

TEST_CASE("prop3 slack at reference points") {
  CHECK(std::abs(prop3_check(1.0, 1.0 / 3.0) - 5.0 / 6.0) <= 1e-15);
  CHECK(prop3_check(0.0, 0.0) == 0.0);
  const double slack = prop3_check(evn_pure(0.25), ehs_pure(0.25).entanglement);
  CHECK(std::abs(slack - (0.811278124459132864 - 0.125)) <= 1e-12);
  CHECK_THROWS_AS((void)prop3_check(-0.1, 0.0), std::domain_error);
}

TEST_CASE("entropy/HS inequality chain at the HS basepoint") {
  PhiloxRng rng(53, 0);
  for (int k = 0; k < 100; ++k) {
    const double a2 = rng.uniform();
    const BasepointResult r = ehs_pure(a2);
    CHECK(prop3_check(evn_pure(a2), r.entanglement) >= -1e-9);

    // the proof inequality evaluated at the HS basepoint: S >= E_HS / 2
    SchmidtForm s;
    s.a = std::sqrt(std::max(a2, 1.0 - a2));
    s.b = std::sqrt(std::min(a2, 1.0 - a2));
    s.frame1 = ComplexMatrix::identity(2);
    s.frame2 = ComplexMatrix::identity(2);
    const BasepointResult canon = ehs_pure(s.a * s.a);
    const RelEntropyValue rel = relative_entropy(pure_from_schmidt(s), canon.basepoint);
    CHECK(rel.value >= 0.5 * canon.entanglement - 1e-9);
  }
}

TEST_CASE("both measures order pure states identically") {
  CHECK(same_order_check(0.5, 0.3));
  CHECK(same_order_check(0.3, 0.5));
  CHECK(same_order_check(0.2, 0.8));  // symmetric pair: double tie
  for (const double a2 : {0.0, 0.1, 0.5, 0.77, 1.0}) CHECK(same_order_check(a2, a2));

  PhiloxRng rng(54, 0);
  for (int k = 0; k < 1000; ++k) CHECK(same_order_check(rng.uniform(), rng.uniform()));
}
