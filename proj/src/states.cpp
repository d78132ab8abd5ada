#include "hsent/states.hpp"

#include <cmath>
#include <stdexcept>

namespace hsent {

namespace {

constexpr double kValTol = 1e-10;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool is_unitary2(const ComplexMatrix& u, double tol) {
  if (u.dim() != 2) return false;
  const ComplexMatrix g = u.adjoint() * u;
  return g.max_abs_diff(ComplexMatrix::identity(2)) <= tol;
}

// canonical phase: rotate so the first component above threshold is real > 0
void phase_fix(Vec2& v) {
  for (const Complex& c : v) {
    const double a = std::abs(c);
    if (a > 1e-8) {
      const Complex ph = std::conj(c) / a;
      v[0] *= ph;
      v[1] *= ph;
      return;
    }
  }
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m) {
  if (m.dim() != 4 && m.dim() != 2)
    throw std::invalid_argument("DensityMatrix: dim must be 2 or 4");
  double herm_dev = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      herm_dev = std::max(herm_dev, std::abs(m(i, j) - std::conj(m(j, i))));
  if (herm_dev > 2.0 * kValTol)
    throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
  if (std::abs(m.trace() - 1.0) > kValTol)
    throw std::invalid_argument("DensityMatrix: trace != 1 within tolerance");
  const EigenDecomposition e = eig_hermitian(m);
  if (e.eigenvalues[0] < -kValTol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
  return DensityMatrix(m);
}

BellIndex::BellIndex(int i) : i_(i) {
  if (i < 1 || i > 4) throw std::invalid_argument("BellIndex: must be in 1..4");
}

Vec4 bell_vector(BellIndex i) {
  switch (i.value()) {
    case 1: return {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
    case 2: return {kInvSqrt2, 0.0, 0.0, -kInvSqrt2};
    case 3: return {0.0, kInvSqrt2, kInvSqrt2, 0.0};
    default: return {0.0, kInvSqrt2, -kInvSqrt2, 0.0};
  }
}

DensityMatrix bell_projector(BellIndex i) {
  return DensityMatrix::from_matrix(outer(bell_vector(i)));
}

DensityMatrix phi_mix(BellIndex i, BellIndex j) {
  if (i.value() == j.value()) throw std::invalid_argument("phi_mix: indices must differ");
  const ComplexMatrix m =
      0.5 * (bell_projector(i).matrix() + bell_projector(j).matrix());
  return DensityMatrix::from_matrix(m);
}

DensityMatrix werner(BellIndex i, double eps) {
  if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("werner: eps must be in [0,1]");
  const ComplexMatrix m =
      eps * bell_projector(i).matrix() + (0.25 * (1.0 - eps)) * ComplexMatrix::identity(4);
  return DensityMatrix::from_matrix(m);
}

void validate_schmidt(const SchmidtForm& s, double tol) {
  if (!(s.a >= s.b && s.b >= 0.0))
    throw std::invalid_argument("SchmidtForm: need a >= b >= 0");
  if (std::abs(s.a * s.a + s.b * s.b - 1.0) > tol)
    throw std::invalid_argument("SchmidtForm: a^2 + b^2 != 1 within tolerance");
  if (!is_unitary2(s.frame1, tol) || !is_unitary2(s.frame2, tol))
    throw std::invalid_argument("SchmidtForm: frames must be unitary");
}

SchmidtForm schmidt_decompose(const Vec4& psi) {
  if (std::abs(norm(psi) - 1.0) > 1e-10)
    throw std::invalid_argument("schmidt_decompose: input must be a unit vector");

  // coefficient matrix C_{ij} = <ij|psi>, psi = sum C_{ij} |i>|j>
  ComplexMatrix cmat(2);
  cmat(0, 0) = psi[0];
  cmat(0, 1) = psi[1];
  cmat(1, 0) = psi[2];
  cmat(1, 1) = psi[3];

  // left Schmidt vectors are eigenvectors of the first marginal C C†
  const EigenDecomposition e = eig_hermitian(cmat * cmat.adjoint());
  Vec2 u1{e.vectors(0, 1), e.vectors(1, 1)};  // larger eigenvalue
  Vec2 u2{e.vectors(0, 0), e.vectors(1, 0)};
  phase_fix(u1);
  phase_fix(u2);

  // right vectors from w_k = C^T u_k*; taking the coefficient from |w_k|
  // instead of the marginal eigenvalue keeps near-product states accurate
  // (the eigenvalue only pins b^2 to ~1e-13, i.e. b to ~3e-7).
  const ComplexMatrix ct = cmat.transpose();
  const Vec2 w1 = matvec2(ct, Vec2{std::conj(u1[0]), std::conj(u1[1])});
  const Vec2 w2 = matvec2(ct, Vec2{std::conj(u2[0]), std::conj(u2[1])});
  double a = norm2v(w1);
  double b = norm2v(w2);

  SchmidtForm s;
  Vec2 v1, v2;
  if (b > a) {  // marginal ordering lost to roundoff near a = b
    std::swap(a, b);
    std::swap(u1, u2);
    v1 = {w2[0] / a, w2[1] / a};
    v2 = {w1[0] / b, w1[1] / b};
  } else {
    v1 = {w1[0] / a, w1[1] / a};  // a >= 1/sqrt2 always
    if (b > 1e-13) {
      v2 = {w2[0] / b, w2[1] / b};
    } else {
      b = 0.0;
      v2 = {-std::conj(v1[1]), std::conj(v1[0])};  // orthonormal completion
    }
  }

  // renormalise (a,b); |C|_F = 1 makes this a few-ulp correction
  const double nrm = std::sqrt(a * a + b * b);
  s.a = a / nrm;
  s.b = b / nrm;
  s.frame1(0, 0) = u1[0];
  s.frame1(1, 0) = u1[1];
  s.frame1(0, 1) = u2[0];
  s.frame1(1, 1) = u2[1];
  s.frame2(0, 0) = v1[0];
  s.frame2(1, 0) = v1[1];
  s.frame2(0, 1) = v2[0];
  s.frame2(1, 1) = v2[1];
  return s;
}

DensityMatrix pure_from_schmidt(const SchmidtForm& s) {
  validate_schmidt(s);
  Vec4 w{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      w[2 * i + j] = s.a * s.frame1(i, 0) * s.frame2(j, 0) + s.b * s.frame1(i, 1) * s.frame2(j, 1);
  const double n = norm(w);
  for (Complex& c : w) c /= n;
  return DensityMatrix::from_matrix(outer(w));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m) {
  if (m.dim() != 4) throw std::invalid_argument("partial_transpose: need a 4x4 matrix");
  ComplexMatrix r(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          r(2 * i + l, 2 * k + j) = m(2 * i + j, 2 * k + l);
  return r;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int traced_factor) {
  if (m.dim() != 4) throw std::invalid_argument("partial_trace: need a 4x4 matrix");
  if (traced_factor != 1 && traced_factor != 2)
    throw std::invalid_argument("partial_trace: factor must be 1 or 2");
  ComplexMatrix r(2);
  if (traced_factor == 2) {
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        for (int j = 0; j < 2; ++j) r(i, k) += m(2 * i + j, 2 * k + j);
  } else {
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i) r(j, l) += m(2 * i + j, 2 * i + l);
  }
  return r;
}

double min_pt_eigenvalue(const ComplexMatrix& m) {
  return eig_hermitian(partial_transpose(m)).eigenvalues[0];
}

bool is_ppt(const DensityMatrix& rho, double tol) {
  return min_pt_eigenvalue(rho.matrix()) >= -tol;
}

LocalChannel local_unitary_channel(const ComplexMatrix& u1, const ComplexMatrix& u2) {
  return LocalChannel{{u1}, {u2}};
}

LocalChannel depolarizing_channel(double p1, double p2) {
  auto factor = [](double p) {
    std::vector<ComplexMatrix> ks;
    ks.push_back(std::sqrt(1.0 - 0.75 * p) * ComplexMatrix::identity(2));
    ks.push_back(std::sqrt(0.25 * p) * pauli_x());
    ks.push_back(std::sqrt(0.25 * p) * pauli_y());
    ks.push_back(std::sqrt(0.25 * p) * pauli_z());
    return ks;
  };
  if (p1 < 0.0 || p1 > 1.0 || p2 < 0.0 || p2 > 1.0)
    throw std::invalid_argument("depolarizing_channel: p must be in [0,1]");
  return LocalChannel{factor(p1), factor(p2)};
}

DensityMatrix apply_local_channel(const DensityMatrix& rho, const LocalChannel& ch) {
  auto check_tp = [](const std::vector<ComplexMatrix>& ks, const char* which) {
    ComplexMatrix acc(2);
    for (const ComplexMatrix& k : ks) {
      if (k.dim() != 2) throw std::invalid_argument("apply_local_channel: Kraus operators must be 2x2");
      acc += k.adjoint() * k;
    }
    if (acc.max_abs_diff(ComplexMatrix::identity(2)) > 1e-10)
      throw std::invalid_argument(std::string("apply_local_channel: factor ") + which +
                                  " is not trace preserving");
  };
  check_tp(ch.kraus1, "1");
  check_tp(ch.kraus2, "2");

  ComplexMatrix out(4);
  for (const ComplexMatrix& k : ch.kraus1)
    for (const ComplexMatrix& l : ch.kraus2) {
      const ComplexMatrix kl = tensor(k, l);
      out += kl * rho.matrix() * kl.adjoint();
    }
  return DensityMatrix::from_matrix(out);
}

}  // namespace hsent
