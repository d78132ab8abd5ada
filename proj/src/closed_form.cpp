#include "hsent/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hsent {

namespace {

// |psi_a><psi_a| for psi_a = a|00> + b|11>, a2 = a^2
ComplexMatrix canonical_pure(double a2) {
  const double a = std::sqrt(a2), b = std::sqrt(1.0 - a2);
  ComplexMatrix s(4);
  s(0, 0) = a * a;
  s(3, 3) = b * b;
  s(0, 3) = a * b;
  s(3, 0) = a * b;
  return s;
}

ComplexMatrix parabola_matrix(double t) {
  ComplexMatrix p(4);
  const double x = t * (1.0 - t);
  p(0, 0) = t * t;
  p(3, 3) = (1.0 - t) * (1.0 - t);
  p(1, 1) = x;
  p(2, 2) = x;
  p(0, 3) = x;
  p(3, 0) = x;
  return p;
}

void check_a2(double a2, const char* who) {
  if (!(a2 >= 0.0 && a2 <= 1.0))
    throw std::domain_error(std::string(who) + ": a2 must be in [0,1]");
}

double cubic_eval(double c1, double c0, double t) {
  return ((6.0 * t - 9.0) * t + c1) * t + c0;
}

double cubic_deriv(double c1, double t) { return (18.0 * t - 18.0) * t + c1; }

}  // namespace

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::separable: return "separable";
    case Regime::bell_mixture: return "bell_mixture";
    case Regime::pure_central: return "pure_central";
    default: return "pure_edge_conjecture";
  }
}

void validate_bell_mixture(const BellMixture& m) {
  double sum = 0.0;
  for (double l : m.lambdas) {
    if (l < -1e-12) throw std::invalid_argument("BellMixture: negative weight");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::invalid_argument("BellMixture: weights must sum to 1");
}

DensityMatrix bell_mixture_state(const BellMixture& m) {
  validate_bell_mixture(m);
  const int i = m.i.value();
  ComplexMatrix acc(4);
  acc += m.lambdas[i - 1] * bell_projector(BellIndex(i)).matrix();
  for (int j = 1; j <= 4; ++j) {
    if (j == i) continue;
    acc += m.lambdas[j - 1] * phi_mix(BellIndex(i), BellIndex(j)).matrix();
  }
  return DensityMatrix::from_matrix(acc);
}

BasepointResult ehs_bell_mixture(const BellMixture& m) {
  validate_bell_mixture(m);
  const int i = m.i.value();
  const double li = std::max(0.0, m.lambdas[i - 1]);

  // nearest point swaps the distinguished Bell projector for its Werner
  // shadow at eps = 1/3 and keeps the separable part untouched
  ComplexMatrix w13 = (1.0 / 3.0) * bell_projector(BellIndex(i)).matrix() +
                      (1.0 / 6.0) * ComplexMatrix::identity(4);
  ComplexMatrix acc = li * w13;
  for (int j = 1; j <= 4; ++j) {
    if (j == i) continue;
    acc += m.lambdas[j - 1] * phi_mix(BellIndex(i), BellIndex(j)).matrix();
  }

  BasepointResult out{li * li / 3.0, DensityMatrix::from_matrix(acc),
                      li == 0.0 ? Regime::separable : Regime::bell_mixture};
  return out;
}

BellMixture werner_mixture(BellIndex i, double eps) {
  if (eps < 1.0 / 3.0 || eps > 1.0)
    throw std::domain_error("werner_mixture: eps must be in [1/3, 1]");
  BellMixture m;
  m.i = i;
  for (int j = 1; j <= 4; ++j) m.lambdas[j - 1] = 0.5 * (1.0 - eps);
  m.lambdas[i.value() - 1] = 0.5 * (3.0 * eps - 1.0);
  return m;
}

double central_a2_low() { return 0.5 - std::sqrt(5.0) / 6.0; }
double central_a2_high() { return 0.5 + std::sqrt(5.0) / 6.0; }

ComplexMatrix central_candidate(double a2) {
  check_a2(a2, "central_candidate");
  const double a = std::sqrt(a2), b = std::sqrt(1.0 - a2);
  const double x = a * b / 3.0;
  ComplexMatrix s = canonical_pure(a2);
  // sigma - ab/3 (4 P_1 - I)
  s(0, 0) -= x;
  s(3, 3) -= x;
  s(1, 1) += x;
  s(2, 2) += x;
  s(0, 3) -= 2.0 * x;
  s(3, 0) -= 2.0 * x;
  return s;
}

double central_candidate_min_eigenvalue(double a2) {
  check_a2(a2, "central_candidate_min_eigenvalue");
  const double b2 = 1.0 - a2;
  const double ab = std::sqrt(a2 * b2);
  const double disc = 9.0 * a2 * a2 - 14.0 * a2 * b2 + 9.0 * b2 * b2;
  return (3.0 - 2.0 * ab - std::sqrt(disc)) / 6.0;
}

BasepointResult ehs_pure_central(double a2) {
  check_a2(a2, "ehs_pure_central");
  if (a2 < central_a2_low() || a2 > central_a2_high())
    throw std::domain_error("ehs_pure_central: a2 outside the central interval");
  const double b2 = 1.0 - a2;
  return BasepointResult{4.0 * a2 * b2 / 3.0,
                         DensityMatrix::from_matrix(central_candidate(a2)),
                         Regime::pure_central};
}

std::array<double, 4> edge_cubic_coeffs(double a2) {
  check_a2(a2, "edge_cubic_coeffs");
  const double b2 = 1.0 - a2;
  const double ab = std::sqrt(a2 * b2);
  return {6.0, -9.0, 5.0 - a2 + 2.0 * ab - b2, -1.0 - ab + b2};
}

double edge_cubic_root(double a2) {
  const std::array<double, 4> c = edge_cubic_coeffs(a2);
  const double c1 = c[2], c0 = c[3];

  std::vector<double> candidates;
  // exact endpoint roots first: g(0) = c0, g(1) = -3 + c1 + c0
  if (c0 == 0.0) candidates.push_back(0.0);
  if (-3.0 + c1 + c0 == 0.0) candidates.push_back(1.0);

  // Cardano on the monic depressed cubic x^3 + p x + q, t = x + 1/2
  const double Q = c1 / 6.0, R = c0 / 6.0;
  const double p = Q - 0.75;
  const double q = -0.25 + 0.5 * Q + R;
  const double disc = 0.25 * q * q + p * p * p / 27.0;
  if (disc > 0.0) {
    const double rt = std::sqrt(disc);
    candidates.push_back(std::cbrt(-0.5 * q + rt) + std::cbrt(-0.5 * q - rt) + 0.5);
  } else {
    const double r = std::sqrt(std::max(0.0, -p / 3.0));
    if (r == 0.0) {
      candidates.push_back(std::cbrt(-q) + 0.5);
    } else {
      const double phi = std::acos(std::clamp(-0.5 * q / (r * r * r), -1.0, 1.0));
      for (int k = 0; k < 3; ++k)
        candidates.push_back(2.0 * r * std::cos((phi - 2.0 * M_PI * k) / 3.0) + 0.5);
    }
  }

  // Newton polish; coefficients are exact where it matters (a2 = 0, 1)
  for (double& t : candidates)
    for (int it = 0; it < 3; ++it) {
      const double g = cubic_eval(c1, c0, t);
      if (g == 0.0) break;
      const double gp = cubic_deriv(c1, t);
      if (gp == 0.0) break;
      const double step = g / gp;
      t -= step;
      if (std::abs(step) < 1e-17) break;
    }

  // admissible roots live in [0,1]; keep the one nearest to sigma
  const ComplexMatrix sig = canonical_pure(a2);
  bool found = false;
  double best_t = 0.0, best_f = 0.0;
  for (double t : candidates) {
    if (t < -1e-9 || t > 1.0 + 1e-9) continue;
    t = std::clamp(t, 0.0, 1.0);
    const double f = hs_norm_sq(sig - parabola_matrix(t));
    if (!found || f < best_f) {
      found = true;
      best_f = f;
      best_t = t;
    }
  }
  if (!found) throw std::domain_error("edge_cubic_root: no admissible root in [0,1]");
  return best_t;
}

BasepointResult ehs_pure_edge(double a2) {
  check_a2(a2, "ehs_pure_edge");
  if (a2 > central_a2_low() && a2 < central_a2_high())
    throw std::domain_error("ehs_pure_edge: a2 in the central interval");
  const double t = edge_cubic_root(a2);
  const ComplexMatrix pt = parabola_matrix(t);
  return BasepointResult{hs_norm_sq(canonical_pure(a2) - pt),
                         DensityMatrix::from_matrix(pt), Regime::pure_edge_conjecture};
}

BasepointResult ehs_pure(double a2) {
  check_a2(a2, "ehs_pure");
  if (a2 >= central_a2_low() && a2 <= central_a2_high()) return ehs_pure_central(a2);
  return ehs_pure_edge(a2);
}

BasepointResult ehs_pure_schmidt(const SchmidtForm& s) {
  validate_schmidt(s);
  BasepointResult canon = ehs_pure(s.a * s.a);
  const ComplexMatrix u = tensor(s.frame1, s.frame2);
  const ComplexMatrix conj = u * canon.basepoint.matrix() * u.adjoint();
  return BasepointResult{canon.entanglement, DensityMatrix::from_matrix(conj), canon.regime};
}

DensityMatrix parabola_point(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::domain_error("parabola_point: s must be in [0,1]");
  return DensityMatrix::from_matrix(parabola_matrix(s));
}

double scaled_entanglement(const DensityMatrix& sigma, const DensityMatrix& basepoint,
                           double lam) {
  if (!(lam >= 0.0 && lam <= 1.0))
    throw std::domain_error("scaled_entanglement: lam must be in [0,1]");
  return lam * lam * hs_norm_sq(sigma.matrix() - basepoint.matrix());
}

}  // namespace hsent
