#include "hsent/hs_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hsent/rng.hpp"

namespace hsent {

ComplexMatrix ProductProjector::matrix() const { return outer(product_vector()); }

Vec4 ProductProjector::product_vector() const {
  return {chi[0] * xi[0], chi[0] * xi[1], chi[1] * xi[0], chi[1] * xi[1]};
}

namespace {

void validate_config(const SolverConfig& cfg) {
  if (cfg.max_iters < 1 || cfg.lmo_restarts < 1 || cfg.lmo_inner_iters < 1 || !(cfg.tol > 0.0))
    throw std::invalid_argument("SolverConfig: iteration counts must be positive and tol > 0");
}

}  // namespace

void validate_separable_approx(const SeparableApprox& s) {
  if (s.atoms.size() != s.weights.size())
    throw std::invalid_argument("SeparableApprox: atom/weight size mismatch");
  double sum = 0.0;
  for (double w : s.weights) {
    if (w < -1e-12) throw std::invalid_argument("SeparableApprox: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::invalid_argument("SeparableApprox: weights must sum to 1");
}

DensityMatrix assemble_state(const SeparableApprox& s) {
  validate_separable_approx(s);
  ComplexMatrix acc(4);
  for (std::size_t i = 0; i < s.atoms.size(); ++i) {
    const Vec4 v = s.atoms[i].product_vector();
    const double w = s.weights[i];
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) acc(r, c) += w * v[r] * std::conj(v[c]);
  }
  return DensityMatrix::from_matrix(acc);
}

//---------------------------------------------------------------------------
// Linear minimisation oracle.
//
// tr(M |chi x xi><chi x xi|) is, for fixed xi, a 2x2 Hermitian quadratic
// form in chi (and vice versa), so alternating smallest-eigenvector steps
// descend monotonically.  The landscape is a bilinear "corner" problem and
// can trap a single start, hence the fixed axis starts (which cover
// near-diagonal M, where random starts tend to share one basin) plus the
// seeded random restarts.
//---------------------------------------------------------------------------

namespace {

// A[i][k] = sum_{j,l} conj(xi_j) M(2i+j, 2k+l) xi_l  (partial contraction
// over the second factor); only the upper triangle is produced.
inline void contract_second(const ComplexMatrix& m, const Vec2& xi, double& a00, double& a11,
                            Complex& a01) {
  const Complex o00 = std::conj(xi[0]) * xi[0];
  const Complex o01 = std::conj(xi[0]) * xi[1];
  const Complex o10 = std::conj(xi[1]) * xi[0];
  const Complex o11 = std::conj(xi[1]) * xi[1];
  a00 = std::real(m(0, 0) * o00 + m(0, 1) * o01 + m(1, 0) * o10 + m(1, 1) * o11);
  a11 = std::real(m(2, 2) * o00 + m(2, 3) * o01 + m(3, 2) * o10 + m(3, 3) * o11);
  a01 = m(0, 2) * o00 + m(0, 3) * o01 + m(1, 2) * o10 + m(1, 3) * o11;
}

// B[j][l] = sum_{i,k} conj(chi_i) M(2i+j, 2k+l) chi_k
inline void contract_first(const ComplexMatrix& m, const Vec2& chi, double& b00, double& b11,
                           Complex& b01) {
  const Complex o00 = std::conj(chi[0]) * chi[0];
  const Complex o01 = std::conj(chi[0]) * chi[1];
  const Complex o10 = std::conj(chi[1]) * chi[0];
  const Complex o11 = std::conj(chi[1]) * chi[1];
  b00 = std::real(m(0, 0) * o00 + m(0, 2) * o01 + m(2, 0) * o10 + m(2, 2) * o11);
  b11 = std::real(m(1, 1) * o00 + m(1, 3) * o01 + m(3, 1) * o10 + m(3, 3) * o11);
  b01 = m(0, 1) * o00 + m(0, 3) * o01 + m(2, 1) * o10 + m(2, 3) * o11;
}

// smallest eigenpair of [[a00, a01],[conj(a01), a11]]; keeps `v` on a
// (near-)degenerate spectrum where the eigenvector is arbitrary
inline double min_eigvec2(double a00, double a11, Complex a01, Vec2& v) {
  const double mid = 0.5 * (a00 + a11);
  const double d = 0.5 * (a00 - a11);
  const double b2 = std::norm(a01);
  const double r = std::sqrt(d * d + b2);
  const double lam = mid - r;
  if (r <= 1e-15 * (std::abs(a00) + std::abs(a11) + 1e-30)) return lam;
  // choose the better-conditioned null-space column of (A - lam I)
  Vec2 cand;
  if (d >= 0.0) {
    cand = {a01, Complex(-(d + r))};
  } else {
    cand = {Complex(d - r), std::conj(a01)};
  }
  const double n = std::sqrt(std::norm(cand[0]) + std::norm(cand[1]));
  if (n <= 0.0) return lam;
  v = {cand[0] / n, cand[1] / n};
  return lam;
}

// alternate chi/xi smallest-eigenvector steps; chi is recomputed first, so
// its incoming value only matters as the degenerate-case fallback
double lmo_alternate(const ComplexMatrix& m, Vec2& chi, Vec2& xi, int inner_iters) {
  double obj = std::numeric_limits<double>::infinity();
  double a00, a11, b00, b11;
  Complex a01, b01;
  for (int it = 0; it < inner_iters; ++it) {
    contract_second(m, xi, a00, a11, a01);
    min_eigvec2(a00, a11, a01, chi);
    contract_first(m, chi, b00, b11, b01);
    const double next = min_eigvec2(b00, b11, b01, xi);
    if (obj - next < 1e-13 * (1.0 + std::abs(next))) {
      obj = std::min(obj, next);
      break;
    }
    obj = next;
  }
  return obj;
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// |0>, |1>, |+>, |->, |+i>, |-i>: axes of the Bloch octahedron
const Vec2 kAxisStarts[6] = {
    {Complex(1.0), Complex(0.0)},
    {Complex(0.0), Complex(1.0)},
    {Complex(kInvSqrt2), Complex(kInvSqrt2)},
    {Complex(kInvSqrt2), Complex(-kInvSqrt2)},
    {Complex(kInvSqrt2), Complex(0.0, kInvSqrt2)},
    {Complex(kInvSqrt2), Complex(0.0, -kInvSqrt2)},
};

Vec2 random_qubit(PhiloxRng& rng) {
  // complex-Gaussian components give the Haar measure after normalisation
  Vec2 v{Complex(rng.gaussian(), rng.gaussian()), Complex(rng.gaussian(), rng.gaussian())};
  const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  if (n < 1e-12) return {Complex(1.0), Complex(0.0)};
  return {v[0] / n, v[1] / n};
}

// Two-phase multistart: every start gets a scouting run of scout_iters
// alternating steps, then only the best start is polished to convergence.
// Four scouting steps separate the basins on every family tested; the
// one-shot entry points (public oracle, certificates) pass the full depth
// instead, trading speed for basin-ranking robustness.
constexpr int kScoutIters = 4;

// Dense deterministic scan of the second-factor Bloch sphere.  For fixed
// xi the optimal chi is an exact 2x2 eigensolve, so the product minimum is
// min over xi of lambda_min(B(xi)) -- a smooth function on a 2-sphere whose
// basins are wide.  A ~300-point scan therefore locates the global basin
// without randomness; the winner is handed to the alternation for polish.
// Reserved for the cold paths (public oracle, certificates, convergence
// checks), where a missed basin would silently understate the duality gap.
Vec2 grid_scan_xi(const ComplexMatrix& m) {
  constexpr int kTheta = 12, kPhi = 24;
  double best = std::numeric_limits<double>::infinity();
  Vec2 best_xi{Complex(1.0), Complex(0.0)};
  double a00, a11;
  Complex a01;
  for (int j = 0; j < kTheta; ++j) {
    const double theta = M_PI * (j + 0.5) / kTheta;
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    for (int l = 0; l < kPhi; ++l) {
      const double phi = 2.0 * M_PI * l / kPhi;
      const Vec2 xi{Complex(c), Complex(s * std::cos(phi), s * std::sin(phi))};
      contract_second(m, xi, a00, a11, a01);
      const double mid = 0.5 * (a00 + a11);
      const double d = 0.5 * (a00 - a11);
      const double lam = mid - std::sqrt(d * d + std::norm(a01));
      if (lam < best) {
        best = lam;
        best_xi = xi;
      }
    }
  }
  return best_xi;
}

LmoResult lmo_impl(const ComplexMatrix& m, const SolverConfig& cfg, std::uint64_t stream_base,
                   const ProductProjector* warm, bool schmidt_start, int scout_iters,
                   bool grid_scan) {
  LmoResult best;
  best.objective = std::numeric_limits<double>::infinity();
  auto consider = [&](Vec2 chi, Vec2 xi) {
    const double obj = lmo_alternate(m, chi, xi, scout_iters);
    if (obj < best.objective) {
      best.objective = obj;
      best.atom = ProductProjector{chi, xi};
    }
  };

  if (warm) consider(warm->chi, warm->xi);
  for (const Vec2& axis : kAxisStarts) consider({Complex(1.0), Complex(0.0)}, axis);
  if (schmidt_start) {
    const EigenDecomposition e = eig_hermitian(m);
    Vec4 psi;
    for (int r = 0; r < 4; ++r) psi[r] = e.vectors(r, 0);
    const SchmidtForm s = schmidt_decompose(psi);
    consider({s.frame1(0, 0), s.frame1(1, 0)}, {s.frame2(0, 0), s.frame2(1, 0)});
  }
  if (grid_scan) consider({Complex(1.0), Complex(0.0)}, grid_scan_xi(m));
  for (int r = 0; r < cfg.lmo_restarts; ++r) {
    PhiloxRng rng(cfg.seed, stream_base + static_cast<std::uint64_t>(r));
    const Vec2 chi = random_qubit(rng);
    const Vec2 xi = random_qubit(rng);
    consider(chi, xi);
  }

  Vec2 chi = best.atom.chi, xi = best.atom.xi;
  const double obj = lmo_alternate(m, chi, xi, cfg.lmo_inner_iters);
  if (obj < best.objective) {
    best.objective = obj;
    best.atom = ProductProjector{chi, xi};
  }
  return best;
}

}  // namespace

LmoResult lmo_product_projector(const ComplexMatrix& m, const SolverConfig& cfg) {
  if (m.dim() != 4) throw std::invalid_argument("lmo_product_projector: need a 4x4 matrix");
  validate_config(cfg);
  return lmo_impl(m, cfg, 0, nullptr, true, cfg.lmo_inner_iters, true);
}

//---------------------------------------------------------------------------
// Frank-Wolfe
//---------------------------------------------------------------------------

namespace {

// merge into a recent atom when both factors match up to phase; scanning a
// bounded window keeps the step O(1) while still catching the repeats that
// actually occur (the oracle revisiting its latest atoms)
constexpr int kMergeWindow = 64;

int find_merge_slot(const std::vector<ProductProjector>& atoms, const ProductProjector& atom) {
  constexpr double kOverlap = 1.0 - 1e-10;
  const double thr = kOverlap * kOverlap;
  const int n = static_cast<int>(atoms.size());
  for (int idx = n - 1; idx >= 0 && idx >= n - kMergeWindow; --idx) {
    const ProductProjector& o = atoms[idx];
    if (std::norm(dot2(o.chi, atom.chi)) < thr) continue;
    if (std::norm(dot2(o.xi, atom.xi)) < thr) continue;
    return idx;
  }
  return -1;
}

}  // namespace

EntanglementResult nearest_separable(const DensityMatrix& sigma, const SolverConfig& cfg,
                                     std::vector<double>* trace) {
  const ComplexMatrix& sig = sigma.matrix();
  if (sig.dim() != 4) throw std::invalid_argument("nearest_separable: need a two-qubit state");
  validate_config(cfg);

  // start at I/4 with its computational product decomposition
  ComplexMatrix rho = 0.25 * ComplexMatrix::identity(4);
  SeparableApprox approx;
  const Vec2 e0{Complex(1.0), Complex(0.0)}, e1{Complex(0.0), Complex(1.0)};
  for (const Vec2& c : {e0, e1})
    for (const Vec2& x : {e0, e1}) {
      approx.atoms.push_back(ProductProjector{c, x});
      approx.weights.push_back(1.0);  // raw weights; `scale` carries the 1/4
    }
  double scale = 0.25;

  EntanglementResult out;
  ProductProjector warm;
  bool have_warm = false;

  int k = 0;
  for (; k < cfg.max_iters; ++k) {
    const ComplexMatrix g = rho - sig;
    if (trace) trace->push_back(hs_norm_sq(g));

    const std::uint64_t stream_base = static_cast<std::uint64_t>(k + 1) *
                                      static_cast<std::uint64_t>(std::max(cfg.lmo_restarts, 1));
    LmoResult lm =
        lmo_impl(g, cfg, stream_base, have_warm ? &warm : nullptr, k == 0, kScoutIters, false);

    ComplexMatrix omega = lm.atom.matrix();
    double inner = std::real(hs_inner(g, rho - omega));
    // The oracle is heuristic and can understate the gap from a bad basin,
    // so a stop candidate is re-verified at full alternation depth plus the
    // dense Bloch-sphere scan before convergence is claimed; a deeper
    // descent atom resumes the iteration.
    if (2.0 * inner <= cfg.tol) {
      const LmoResult deep =
          lmo_impl(g, cfg, stream_base, &lm.atom, true, cfg.lmo_inner_iters, true);
      if (deep.objective < lm.objective) {
        lm = deep;
        omega = lm.atom.matrix();
        inner = std::real(hs_inner(g, rho - omega));
      }
    }
    warm = lm.atom;
    have_warm = true;

    const ComplexMatrix d = rho - omega;
    out.gap = 2.0 * inner;
    if (out.gap <= cfg.tol) {
      out.converged = true;
      break;
    }

    const double den = hs_norm_sq(d);
    const double gamma = den > 0.0 ? std::clamp(inner / den, 0.0, 1.0) : 0.0;

    rho *= (1.0 - gamma);
    rho += gamma * omega;

    if (gamma == 1.0) {
      approx.atoms.assign(1, lm.atom);
      approx.weights.assign(1, 1.0);
      scale = 1.0;
    } else {
      scale *= (1.0 - gamma);
      if (scale < 1e-280) {  // fold the factor back in before it underflows
        for (double& w : approx.weights) w *= scale;
        scale = 1.0;
      }
      const int slot = find_merge_slot(approx.atoms, lm.atom);
      if (slot >= 0) {
        approx.weights[slot] += gamma / scale;
      } else {
        approx.atoms.push_back(lm.atom);
        approx.weights.push_back(gamma / scale);
      }
    }
  }
  out.iterations = k;
  if (trace && !out.converged) trace->push_back(hs_norm_sq(rho - sig));

  // finalise weights: apply the pending scale, drop numerically dead atoms,
  // renormalise the tiny prune loss away
  double sum = 0.0;
  for (double& w : approx.weights) {
    w *= scale;
    sum += w;
  }
  SeparableApprox pruned;
  for (std::size_t i = 0; i < approx.atoms.size(); ++i) {
    if (approx.weights[i] <= 1e-15) continue;
    pruned.atoms.push_back(approx.atoms[i]);
    pruned.weights.push_back(approx.weights[i] / sum);
  }
  out.basepoint = std::move(pruned);
  out.value = hs_norm_sq(assemble_state(out.basepoint).matrix() - sig);
  return out;
}

std::vector<EntanglementResult> nearest_separable_batch_serial(
    const std::vector<DensityMatrix>& sigmas, const SolverConfig& cfg) {
  std::vector<EntanglementResult> out;
  out.reserve(sigmas.size());
  for (const DensityMatrix& s : sigmas) out.push_back(nearest_separable(s, cfg));
  return out;
}

std::vector<EntanglementResult> nearest_separable_batch(const std::vector<DensityMatrix>& sigmas,
                                                        const SolverConfig& cfg) {
  std::vector<EntanglementResult> out(sigmas.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(sigmas.size()); ++i)
    out[i] = nearest_separable(sigmas[i], cfg);
  return out;
}

CertificateReport certify_basepoint(const DensityMatrix& sigma, const DensityMatrix& candidate,
                          const SolverConfig& cfg) {
  validate_config(cfg);
  if (!is_ppt(candidate))
    throw CertificateRefusal("certify_basepoint: candidate fails the PPT test, not separable");

  // directional derivative of |.-sigma|^2 at c toward omega:
  //   2 tr((c - sigma)(omega - c)) = 2 tr((sigma-c) c) - 2 tr((sigma-c) omega)
  const ComplexMatrix d = sigma.matrix() - candidate.matrix();
  const LmoResult lm = lmo_impl((-2.0) * d, cfg, 0, nullptr, true, cfg.lmo_inner_iters, true);

  CertificateReport rep;
  rep.witness = lm.atom;
  rep.min_derivative = 2.0 * std::real(hs_inner(d, candidate.matrix())) + lm.objective;
  rep.passed = rep.min_derivative >= -1e-7;
  return rep;
}

}  // namespace hsent
