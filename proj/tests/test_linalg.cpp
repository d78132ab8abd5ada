// Complex 2x2/4x4 linear algebra: HS inner product, tensor products, Jacobi
// eigensolver, spectral log/exp, and the counter-based RNG.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hsent/linalg.hpp"
#include "hsent/rng.hpp"
#include "hsent/states.hpp"
#include "test_util.hpp"

using namespace hsent;
using testutil::random_density;
using testutil::random_hermitian4;
using testutil::spectrum;

TEST_CASE("hs_inner on reference pairs") {
  const ComplexMatrix i4 = ComplexMatrix::identity(4);
  const ComplexMatrix p1 = bell_projector(BellIndex(1)).matrix();
  const ComplexMatrix p2 = bell_projector(BellIndex(2)).matrix();

  CHECK(std::abs(hs_inner(i4, i4) - Complex(4.0)) <= 1e-15);
  CHECK(std::abs(hs_inner(p1, p2)) <= 1e-15);                  // orthogonal projectors
  CHECK(std::abs(hs_inner(p1, 0.25 * i4) - Complex(0.25)) <= 1e-15);
  CHECK_THROWS_AS((void)hs_inner(i4, ComplexMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("hs_norm_sq on reference differences") {
  const ComplexMatrix p1 = bell_projector(BellIndex(1)).matrix();
  const ComplexMatrix i4 = ComplexMatrix::identity(4);

  CHECK(hs_norm_sq(ComplexMatrix::zero(4)) == 0.0);
  // tr(P^2) - 2 tr(P)/4 + tr(I)/16 = 1 - 1/2 + 1/4
  CHECK(std::abs(hs_norm_sq(p1 - 0.25 * i4) - 0.75) <= 1e-15);
  // distance^2 from a Bell projector to its nearest separable state
  const ComplexMatrix w = werner(BellIndex(1), 1.0 / 3.0).matrix();
  CHECK(std::abs(hs_norm_sq(p1 - w) - 1.0 / 3.0) <= 1e-15);
}

TEST_CASE("hs_inner conjugate symmetry and positivity") {
  PhiloxRng rng(11, 0);
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix a = random_hermitian4(rng);
    const ComplexMatrix b = random_hermitian4(rng);
    const Complex ab = hs_inner(a, b);
    const Complex ba = hs_inner(b, a);
    CHECK(std::abs(ab - std::conj(ba)) <= 1e-12);
    CHECK(std::abs(std::imag(hs_inner(a, a))) <= 1e-12);
    CHECK(std::real(hs_inner(a, a)) >= 0.0);
  }
}

TEST_CASE("tensor product in the fixed basis order") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(tensor(i2, i2).max_abs_diff(ComplexMatrix::identity(4)) == 0.0);

  ComplexMatrix p0(2);
  p0(0, 0) = 1.0;
  const ComplexMatrix p00 = tensor(p0, p0);
  ComplexMatrix want(4);
  want(0, 0) = 1.0;
  CHECK(p00.max_abs_diff(want) == 0.0);

  // sigma_x (x) sigma_x fixes the first Bell vector
  const Vec4 psi1 = bell_vector(BellIndex(1));
  const Vec4 flipped = matvec(tensor(pauli_x(), pauli_x()), psi1);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(flipped[k] - psi1[k]) <= 1e-15);
}

TEST_CASE("tensor bilinearity") {
  PhiloxRng rng(12, 0);
  for (int k = 0; k < 50; ++k) {
    ComplexMatrix a(2), b(2), c(2);
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) {
        a(r, s) = Complex(rng.gaussian(), rng.gaussian());
        b(r, s) = Complex(rng.gaussian(), rng.gaussian());
        c(r, s) = Complex(rng.gaussian(), rng.gaussian());
      }
    CHECK(tensor(a + b, c).max_abs_diff(tensor(a, c) + tensor(b, c)) <= 1e-12);
    CHECK(tensor(a, b + c).max_abs_diff(tensor(a, b) + tensor(a, c)) <= 1e-12);
  }
}

TEST_CASE("eig_hermitian on reference matrices") {
  const auto id = eig_hermitian(ComplexMatrix::identity(4));
  for (int k = 0; k < 4; ++k) CHECK(std::abs(id.eigenvalues[k] - 1.0) <= 1e-12);

  // partial transpose of a Bell projector: one negative eigenvalue -1/2
  const auto pt = eig_hermitian(partial_transpose(bell_projector(BellIndex(1)).matrix()));
  CHECK(std::abs(pt.eigenvalues[0] + 0.5) <= 1e-12);
  for (int k = 1; k < 4; ++k) CHECK(std::abs(pt.eigenvalues[k] - 0.5) <= 1e-12);

  const auto w = eig_hermitian(werner(BellIndex(1), 1.0 / 3.0).matrix());
  for (int k = 0; k < 3; ++k) CHECK(std::abs(w.eigenvalues[k] - 1.0 / 6.0) <= 1e-12);
  CHECK(std::abs(w.eigenvalues[3] - 0.5) <= 1e-12);

  ComplexMatrix bad(4);
  bad(0, 1) = 1.0;  // not Hermitian
  CHECK_THROWS_AS((void)eig_hermitian(bad), std::invalid_argument);
}

TEST_CASE("eig_hermitian reconstruction and orthonormality on 1000 random matrices") {
  PhiloxRng rng(13, 0);
  double worst_rec = 0.0, worst_orth = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const ComplexMatrix a = random_hermitian4(rng);
    const auto e = eig_hermitian(a);
    ComplexMatrix lam(4);
    for (int d = 0; d < 4; ++d) lam(d, d) = e.eigenvalues[d];
    worst_rec = std::max(worst_rec,
                         std::sqrt(hs_norm_sq(a - e.vectors * lam * e.vectors.adjoint())));
    worst_orth = std::max(
        worst_orth,
        (e.vectors.adjoint() * e.vectors).max_abs_diff(ComplexMatrix::identity(4)));
    for (int d = 0; d + 1 < 4; ++d) CHECK(e.eigenvalues[d] <= e.eigenvalues[d + 1]);
  }
  CHECK(worst_rec <= 1e-10);
  CHECK(worst_orth <= 1e-10);
}

TEST_CASE("eig_hermitian matches the closed-form 2x2 quadratic") {
  PhiloxRng rng(14, 0);
  for (int k = 0; k < 200; ++k) {
    ComplexMatrix a(2);
    const double p = rng.gaussian(), r = rng.gaussian();
    const Complex q(rng.gaussian(), rng.gaussian());
    a(0, 0) = p;
    a(1, 1) = r;
    a(0, 1) = q;
    a(1, 0) = std::conj(q);
    const double mid = 0.5 * (p + r);
    const double rad = std::sqrt(0.25 * (p - r) * (p - r) + std::norm(q));
    const auto e = eig_hermitian(a);
    CHECK(std::abs(e.eigenvalues[0] - (mid - rad)) <= 1e-12);
    CHECK(std::abs(e.eigenvalues[1] - (mid + rad)) <= 1e-12);
  }
}

TEST_CASE("matrix_log2 on reference matrices") {
  CHECK(matrix_log2(ComplexMatrix::identity(4)).value.max_abs_diff(ComplexMatrix::zero(4)) <=
        1e-14);

  const auto half = matrix_log2(0.5 * ComplexMatrix::identity(4));
  CHECK(half.value.max_abs_diff(-1.0 * ComplexMatrix::identity(4)) <= 1e-12);
  CHECK(half.rank == 4);

  ComplexMatrix d(4);
  d(0, 0) = 0.5;
  d(1, 1) = 0.5;
  const auto lg = matrix_log2(d);
  ComplexMatrix want(4);
  want(0, 0) = -1.0;
  want(1, 1) = -1.0;
  CHECK(lg.value.max_abs_diff(want) <= 1e-12);
  CHECK(lg.rank == 2);
  // support flags align with the ascending eigenvalues (0, 0, 1/2, 1/2)
  CHECK_FALSE(lg.support[0]);
  CHECK_FALSE(lg.support[1]);
  CHECK(lg.support[2]);
  CHECK(lg.support[3]);

  ComplexMatrix neg(4);
  neg(0, 0) = -1.0;
  neg(1, 1) = 2.0;
  CHECK_THROWS_AS((void)matrix_log2(neg), std::domain_error);
}

TEST_CASE("exp2 inverts log2 on full-rank PSD matrices") {
  PhiloxRng rng(15, 0);
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix a = random_density(rng).matrix();  // full rank a.s.
    const ComplexMatrix back = matrix_exp2(matrix_log2(a).value);
    CHECK(std::sqrt(hs_norm_sq(back - a)) <= 1e-9);
  }
}

TEST_CASE("philox known-answer block and stream separation") {
  // Salmon et al. Philox4x32-10 with zero counter and key
  const auto b = PhiloxRng::block(0, 0, 0);
  CHECK(b[0] == 0x6627e8d5u);
  CHECK(b[1] == 0xe169c58du);
  CHECK(b[2] == 0xbc57ac4cu);
  CHECK(b[3] == 0x9b00dbd8u);

  PhiloxRng a1(42, 7), a2(42, 7), c(42, 8);
  bool same = true, differ = false;
  for (int k = 0; k < 64; ++k) {
    const std::uint32_t x = a1.next_u32();
    same = same && (x == a2.next_u32());
    differ = differ || (x != c.next_u32());
  }
  CHECK(same);
  CHECK(differ);
}

TEST_CASE("philox uniform range and gaussian moments") {
  PhiloxRng rng(16, 0);
  double mean = 0.0, var = 0.0;
  const int n = 20000;
  for (int k = 0; k < n; ++k) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double g = rng.gaussian();
    mean += g;
    var += g * g;
  }
  mean /= n;
  var = var / n - mean * mean;
  CHECK(std::abs(mean) <= 0.05);
  CHECK(std::abs(var - 1.0) <= 0.1);
}

TEST_CASE("vector helpers agree with the matrix forms") {
  PhiloxRng rng(17, 0);
  for (int k = 0; k < 50; ++k) {
    const Vec4 v = testutil::random_pure(rng);
    CHECK(std::abs(norm(v) - 1.0) <= 1e-12);
    const ComplexMatrix p = outer(v);
    CHECK(std::abs(p.trace() - Complex(1.0)) <= 1e-12);
    CHECK(p.max_abs_diff(p * p) <= 1e-12);  // projector
    const ComplexMatrix a = random_hermitian4(rng);
    // <v|A|v> two ways
    const Complex quad = dot(v, matvec(a, v));
    CHECK(std::abs(quad - hs_inner(p, a)) <= 1e-12);
  }
}
