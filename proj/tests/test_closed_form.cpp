// Closed-form entanglement results: Bell-mixture family, central pure-state
// interval, edge cubic, boundary parabola, and the scaling identity.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hsent/closed_form.hpp"
#include "hsent/hs_opt.hpp"
#include "hsent/rng.hpp"
#include "test_util.hpp"

using namespace hsent;
using testutil::random_unitary2;
using testutil::spectrum;

namespace {

// canonical pure state a|00> + b|11> with a^2 = a2
DensityMatrix canonical_pure(double a2) {
  SchmidtForm s;
  s.a = std::sqrt(std::max(a2, 1.0 - a2));
  s.b = std::sqrt(std::min(a2, 1.0 - a2));
  s.frame1 = ComplexMatrix::identity(2);
  s.frame2 = ComplexMatrix::identity(2);
  DensityMatrix rho = pure_from_schmidt(s);
  if (a2 < 0.5) {  // swap the roles of |0> and |1> to realise a2 < 1/2
    const ComplexMatrix u = tensor(pauli_x(), pauli_x());
    rho = DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
  }
  return rho;
}

BellMixture random_mixture(PhiloxRng& rng) {
  BellMixture m;
  m.i = BellIndex(1 + static_cast<int>(rng.uniform() * 4.0));
  double sum = 0.0;
  for (double& l : m.lambdas) {
    l = -std::log(1.0 - rng.uniform());  // exponential -> Dirichlet(1,1,1,1)
    sum += l;
  }
  for (double& l : m.lambdas) l /= sum;
  return m;
}

}  // namespace

TEST_CASE("bell mixture reference values") {
  BellMixture pure_bell;  // i = 1, lambdas = (1,0,0,0)
  const BasepointResult r = ehs_bell_mixture(pure_bell);
  CHECK(r.entanglement == 1.0 / 3.0);
  CHECK(r.regime == Regime::bell_mixture);
  CHECK(r.basepoint.matrix().max_abs_diff(werner(BellIndex(1), 1.0 / 3.0).matrix()) <= 1e-12);

  BellMixture sep;  // lambda_i = 0: state sits inside the separable octahedron
  sep.i = BellIndex(1);
  sep.lambdas = {0.0, 0.5, 0.3, 0.2};
  const BasepointResult s = ehs_bell_mixture(sep);
  CHECK(s.entanglement == 0.0);
  CHECK(s.regime == Regime::separable);
  CHECK(s.basepoint.matrix().max_abs_diff(bell_mixture_state(sep).matrix()) <= 1e-12);

  BellMixture bad;
  bad.lambdas = {0.5, 0.5, 0.5, -0.5};
  CHECK_THROWS_AS(validate_bell_mixture(bad), std::invalid_argument);
  BellMixture off;
  off.lambdas = {0.5, 0.2, 0.2, 0.2};  // sums to 1.1
  CHECK_THROWS_AS(validate_bell_mixture(off), std::invalid_argument);
}

TEST_CASE("werner states as bell mixtures") {
  for (double eps : {1.0 / 3.0, 0.4, 0.6, 0.8, 1.0}) {
    const BellMixture m = werner_mixture(BellIndex(2), eps);
    CHECK(std::abs(m.lambdas[1] - 0.5 * (3.0 * eps - 1.0)) <= 1e-15);
    // the mixture assembles back to the Werner state itself
    CHECK(bell_mixture_state(m).matrix().max_abs_diff(werner(BellIndex(2), eps).matrix()) <=
          1e-12);
    CHECK(std::abs(ehs_bell_mixture(m).entanglement -
                   (3.0 * eps - 1.0) * (3.0 * eps - 1.0) / 12.0) <= 1e-15);
  }
  CHECK_THROWS_AS((void)werner_mixture(BellIndex(1), 0.2), std::domain_error);
}

TEST_CASE("bell mixture family: basepoint identity and PPT on 100 random draws") {
  PhiloxRng rng(31, 0);
  for (int k = 0; k < 100; ++k) {
    const BellMixture m = random_mixture(rng);
    const DensityMatrix sigma = bell_mixture_state(m);
    const BasepointResult r = ehs_bell_mixture(m);
    const double li = m.lambdas[m.i.value() - 1];
    CHECK(std::abs(r.entanglement - li * li / 3.0) <= 1e-15);
    CHECK(std::abs(hs_norm_sq(sigma.matrix() - r.basepoint.matrix()) - r.entanglement) <= 1e-10);
    CHECK(is_ppt(r.basepoint));
  }
}

TEST_CASE("central interval reference points") {
  const double lo = central_a2_low(), hi = central_a2_high();
  CHECK(std::abs(lo - (0.5 - std::sqrt(5.0) / 6.0)) <= 1e-15);
  CHECK(std::abs(hi + lo - 1.0) <= 1e-15);

  const BasepointResult bell = ehs_pure_central(0.5);
  CHECK(std::abs(bell.entanglement - 1.0 / 3.0) <= 1e-15);
  CHECK(bell.regime == Regime::pure_central);
  CHECK(bell.basepoint.matrix().max_abs_diff(werner(BellIndex(1), 1.0 / 3.0).matrix()) <= 1e-12);

  // at the endpoints a^2 b^2 = 1/4 - 5/36 = 1/9, so E = 4/27
  CHECK(std::abs(ehs_pure_central(lo).entanglement - 4.0 / 27.0) <= 1e-14);
  CHECK(std::abs(ehs_pure_central(hi).entanglement - 4.0 / 27.0) <= 1e-14);
  CHECK(std::abs(central_candidate_min_eigenvalue(lo)) <= 1e-9);
  CHECK(std::abs(central_candidate_min_eigenvalue(hi)) <= 1e-9);

  CHECK_THROWS_AS((void)ehs_pure_central(0.05), std::domain_error);
  CHECK_THROWS_AS((void)ehs_pure_central(1.2), std::domain_error);
}

TEST_CASE("central candidate min eigenvalue: analytic vs eigensolver") {
  // the closed-form expression is the global minimum of the candidate's
  // spectrum for every a2, positive exactly when 3ab >= 1
  for (int k = 0; k <= 100; ++k) {
    const double a2 = k / 100.0;
    const double analytic = central_candidate_min_eigenvalue(a2);
    const double numeric = spectrum(central_candidate(a2))[0];
    CHECK(std::abs(analytic - numeric) <= 1e-9);
    const double ab3 = 3.0 * std::sqrt(a2 * (1.0 - a2));
    if (ab3 > 1.0 + 1e-12) CHECK(analytic > 0.0);
    // at ab = 0 the candidate degenerates to the (PSD) product state itself
    if (ab3 < 1.0 - 1e-12 && k != 0 && k != 100) CHECK(analytic < 0.0);
    if (k == 0 || k == 100) CHECK(std::abs(analytic) <= 1e-15);
  }
}

TEST_CASE("candidate PT eigenvalue changes sign at a2 = 1/10 and 9/10") {
  // bisect min_pt_eigenvalue(candidate) < -1e-9 against >= -1e-9
  auto locate = [](double lo, double hi) {
    auto neg = [](double a2) {
      return min_pt_eigenvalue(central_candidate(a2)) < -1e-9;
    };
    bool nlo = neg(lo);
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (neg(mid) == nlo)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };
  CHECK(std::abs(locate(0.02, 0.4) - 0.1) <= 1e-6);
  CHECK(std::abs(locate(0.98, 0.6) - 0.9) <= 1e-6);
}

TEST_CASE("edge cubic: coefficients, corner roots, reference root") {
  const auto c = edge_cubic_coeffs(0.05);
  const double ab = std::sqrt(0.05 * 0.95);
  CHECK(c[0] == 6.0);
  CHECK(c[1] == -9.0);
  CHECK(std::abs(c[2] - (5.0 - 0.05 + 2.0 * ab - 0.95)) <= 1e-15);
  CHECK(std::abs(c[3] - (-1.0 - ab + 0.95)) <= 1e-15);

  CHECK(edge_cubic_root(1.0) == 1.0);  // product states are their own basepoint
  CHECK(edge_cubic_root(0.0) == 0.0);

  // independent high-precision root and distance for a2 = 0.05
  CHECK(std::abs(edge_cubic_root(0.05) - 0.0698391144005715) <= 1e-9);
  const BasepointResult r = ehs_pure_edge(0.05);
  CHECK(std::abs(r.entanglement - 0.06447502669258005) <= 1e-12);
  CHECK(r.regime == Regime::pure_edge_conjecture);

  CHECK_THROWS_AS((void)ehs_pure_edge(0.5), std::domain_error);
}

TEST_CASE("edge regime endpoints agree with the central formula") {
  for (const double a2 : {central_a2_low(), central_a2_high()}) {
    const double e_edge = ehs_pure_edge(a2).entanglement;
    const double e_central = ehs_pure_central(a2).entanglement;
    CHECK(std::abs(e_edge - e_central) <= 1e-8);
  }
}

TEST_CASE("ehs_pure dispatch, symmetry, and corollary bounds") {
  CHECK(ehs_pure(0.5).regime == Regime::pure_central);
  CHECK(ehs_pure(0.05).regime == Regime::pure_edge_conjecture);
  CHECK(ehs_pure(1.0).entanglement <= 1e-15);
  CHECK(ehs_pure(0.0).entanglement <= 1e-15);

  for (int k = 0; k <= 50; ++k) {
    const double a2 = k / 50.0;
    CHECK(std::abs(ehs_pure(a2).entanglement - ehs_pure(1.0 - a2).entanglement) <= 1e-12);
  }

  // corollary proof bound E <= 2 - 2 a2 above the central interval
  for (int k = 0; k <= 20; ++k) {
    const double a2 = central_a2_high() + (1.0 - central_a2_high()) * k / 20.0;
    CHECK(ehs_pure(a2).entanglement <= 2.0 - 2.0 * a2 + 1e-12);
  }
}

TEST_CASE("maximality: Bell states are the unique HS-entanglement peak") {
  PhiloxRng rng(32, 0);
  for (int k = 0; k < 1000; ++k) {
    const double a2 = rng.uniform();
    const double e = ehs_pure(a2).entanglement;
    CHECK(e <= 1.0 / 3.0 + 1e-9);
    if (std::abs(a2 - 0.5) > 1e-3) CHECK(e < 1.0 / 3.0 - 1e-9);  // strictly below off-peak
  }
  CHECK(std::abs(ehs_pure(0.5).entanglement - 1.0 / 3.0) <= 1e-15);
  CHECK(ehs_pure(0.5 + 1e-6).entanglement < 1.0 / 3.0);
  CHECK(ehs_pure(0.5 - 1e-6).entanglement < 1.0 / 3.0);
}

TEST_CASE("basepoint identity and PPT across all pure regimes") {
  for (int k = 0; k <= 100; ++k) {
    const double a2 = k / 100.0;
    const BasepointResult r = ehs_pure(a2);
    CHECK(is_ppt(r.basepoint));
    const DensityMatrix sigma = canonical_pure(a2);
    CHECK(std::abs(hs_norm_sq(sigma.matrix() - r.basepoint.matrix()) - r.entanglement) <= 1e-10);
  }
}

TEST_CASE("ehs_pure_schmidt conjugates the basepoint into the input frame") {
  PhiloxRng rng(33, 0);
  for (int k = 0; k < 25; ++k) {
    const double a2 = 0.5 + 0.5 * rng.uniform();  // canonical a >= b
    SchmidtForm s;
    s.a = std::sqrt(a2);
    s.b = std::sqrt(1.0 - a2);
    s.frame1 = random_unitary2(rng);
    s.frame2 = random_unitary2(rng);
    const BasepointResult framed = ehs_pure_schmidt(s);
    // compare at s.a^2, the value the framed path evaluates (a2 -> sqrt -> square
    // is not an fp identity)
    const BasepointResult canon = ehs_pure(s.a * s.a);
    CHECK(framed.entanglement == canon.entanglement);
    CHECK(framed.regime == canon.regime);
    const ComplexMatrix u = tensor(s.frame1, s.frame2);
    CHECK(framed.basepoint.matrix().max_abs_diff(u * canon.basepoint.matrix() * u.adjoint()) <=
          1e-12);
    CHECK(is_ppt(framed.basepoint));
    // the framed basepoint attains the same distance from the framed state
    CHECK(std::abs(hs_norm_sq(pure_from_schmidt(s).matrix() - framed.basepoint.matrix()) -
                   framed.entanglement) <= 1e-10);
  }
}

TEST_CASE("parabola of zero-eigenvalue separable states") {
  ComplexMatrix p11(4);
  p11(3, 3) = 1.0;
  CHECK(parabola_point(0.0).matrix().max_abs_diff(p11) == 0.0);
  ComplexMatrix p00(4);
  p00(0, 0) = 1.0;
  CHECK(parabola_point(1.0).matrix().max_abs_diff(p00) == 0.0);

  for (int k = 0; k <= 40; ++k) {
    const double s = k / 40.0;
    const DensityMatrix p = parabola_point(s);
    CHECK(std::abs(spectrum(p.matrix())[0]) <= 1e-9);  // zero eigenvalue everywhere
    CHECK(is_ppt(p));
  }
  CHECK_THROWS_AS((void)parabola_point(1.5), std::domain_error);
}

TEST_CASE("scaling identity for mixes toward the basepoint") {
  const DensityMatrix bell = bell_projector(BellIndex(1));
  const DensityMatrix w = werner(BellIndex(1), 1.0 / 3.0);
  CHECK(std::abs(scaled_entanglement(bell, w, 1.0) - 1.0 / 3.0) <= 1e-15);
  CHECK(scaled_entanglement(bell, w, 0.0) == 0.0);
  CHECK(std::abs(scaled_entanglement(bell, w, 0.5) - 1.0 / 12.0) <= 1e-15);
  CHECK_THROWS_AS((void)scaled_entanglement(bell, w, 1.2), std::domain_error);
}
