#include "hsent/entropy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hsent/closed_form.hpp"

namespace hsent {

namespace {

constexpr double kSupportTol = 1e-10;  // eigenvalue threshold for kernels
constexpr double kLogZeroTol = 1e-12;  // p log p := 0 below this

// <v_k | m | v_k> for column k of the eigenvector matrix
double expectation(const ComplexMatrix& m, const EigenDecomposition& e, int k) {
  Vec4 v{};
  const int n = m.dim();
  for (int r = 0; r < n; ++r) v[r] = e.vectors(r, k);
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    Complex acc = 0.0;
    for (int j = 0; j < n; ++j) acc += m(i, j) * v[j];
    s += std::real(std::conj(v[i]) * acc);
  }
  return s;
}

}  // namespace

RelEntropyValue relative_entropy(const DensityMatrix& sigma, const DensityMatrix& rho) {
  if (sigma.dim() != rho.dim())
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  const EigenDecomposition es = eig_hermitian(sigma.matrix());
  const EigenDecomposition er = eig_hermitian(rho.matrix());
  const int n = sigma.dim();

  // support check: weight of sigma on rho's kernel
  double kernel_weight = 0.0;
  for (int k = 0; k < n; ++k)
    if (er.eigenvalues[k] <= kSupportTol) kernel_weight += expectation(sigma.matrix(), er, k);
  if (kernel_weight > kSupportTol)
    return RelEntropyValue{std::numeric_limits<double>::infinity(), true};

  double s1 = 0.0;  // tr(sigma log2 sigma)
  for (int k = 0; k < n; ++k) {
    const double p = es.eigenvalues[k];
    if (p > kLogZeroTol) s1 += p * std::log2(p);
  }
  double s2 = 0.0;  // tr(sigma log2 rho)
  for (int k = 0; k < n; ++k) {
    const double lam = er.eigenvalues[k];
    if (lam > kSupportTol) s2 += std::log2(lam) * expectation(sigma.matrix(), er, k);
  }
  return RelEntropyValue{s1 - s2, false};
}

double evn_pure(double a2) {
  if (!(a2 >= 0.0 && a2 <= 1.0)) throw std::domain_error("evn_pure: a2 must be in [0,1]");
  const double p = std::min(a2, 1.0 - a2);  // fold: exact symmetry about 1/2
  if (p <= kLogZeroTol) return 0.0;
  const double q = 1.0 - p;
  return -p * std::log2(p) - q * std::log2(q);
}

double prop3_check(double e_vn, double e_hs) {
  if (e_vn < 0.0 || e_hs < 0.0)
    throw std::domain_error("prop3_check: entanglement values must be >= 0");
  return e_vn - 0.5 * e_hs;
}

bool same_order_check(double a2_1, double a2_2) {
  constexpr double kTie = 1e-12;
  auto sign3 = [](double x, double y) {
    const double d = x - y;
    if (std::abs(d) <= kTie) return 0;
    return d < 0.0 ? -1 : 1;
  };
  const int vn = sign3(evn_pure(a2_1), evn_pure(a2_2));
  const int hs = sign3(ehs_pure(a2_1).entanglement, ehs_pure(a2_2).entanglement);
  return vn == hs;
}

}  // namespace hsent
