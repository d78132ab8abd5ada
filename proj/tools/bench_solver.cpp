// Benchmark: OpenMP batch solver vs the serial reference, on a mixed
// workload of Werner, pure, and random two-qubit states.  Also verifies
// that the parallel schedule reproduces the serial results bit for bit.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "hsent/closed_form.hpp"
#include "hsent/hs_opt.hpp"
#include "hsent/rng.hpp"

namespace {

hsent::DensityMatrix random_state(hsent::PhiloxRng& rng) {
  // Ginibre ensemble: G G† normalised
  hsent::ComplexMatrix g(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = hsent::Complex(rng.gaussian(), rng.gaussian());
  hsent::ComplexMatrix m = g * g.adjoint();
  m *= 1.0 / std::real(m.trace());
  return hsent::DensityMatrix::from_matrix(m);
}

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool identical(const hsent::EntanglementResult& a, const hsent::EntanglementResult& b) {
  if (a.value != b.value || a.gap != b.gap || a.iterations != b.iterations) return false;
  if (a.basepoint.weights != b.basepoint.weights) return false;
  for (std::size_t i = 0; i < a.basepoint.atoms.size(); ++i)
    for (int k = 0; k < 2; ++k) {
      if (a.basepoint.atoms[i].chi[k] != b.basepoint.atoms[i].chi[k]) return false;
      if (a.basepoint.atoms[i].xi[k] != b.basepoint.atoms[i].xi[k]) return false;
    }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"batch solver benchmark: OpenMP vs serial reference"};
  int n = 64;
  hsent::SolverConfig cfg;
  cfg.max_iters = 2000;
  cfg.lmo_restarts = 2;
  app.add_option("--n", n, "workload size")->capture_default_str();
  app.add_option("--max-iters", cfg.max_iters, "Frank-Wolfe iteration cap")->capture_default_str();
  app.add_option("--restarts", cfg.lmo_restarts, "LMO random restarts")->capture_default_str();
  app.add_option("--seed", cfg.seed, "workload seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::vector<hsent::DensityMatrix> work;
  hsent::PhiloxRng rng(cfg.seed, /*stream=*/0xBE7C);
  for (int k = 0; k < n; ++k) {
    switch (k % 3) {
      case 0: work.push_back(hsent::werner(hsent::BellIndex(1 + k % 4), 0.4 + 0.5 * rng.uniform())); break;
      case 1: work.push_back(hsent::parabola_point(rng.uniform())); break;
      default: work.push_back(random_state(rng));
    }
  }

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; parallel batch falls back to serial\n");
#endif
  std::printf("workload: %d states, max_iters %d, tol %g, restarts %d\n", n, cfg.max_iters,
              cfg.tol, cfg.lmo_restarts);

  auto t0 = std::chrono::steady_clock::now();
  const auto serial = hsent::nearest_separable_batch_serial(work, cfg);
  const double t_serial = seconds(t0);

  t0 = std::chrono::steady_clock::now();
  const auto parallel = hsent::nearest_separable_batch(work, cfg);
  const double t_parallel = seconds(t0);

  bool same = serial.size() == parallel.size();
  for (std::size_t i = 0; same && i < serial.size(); ++i) same = identical(serial[i], parallel[i]);

  std::printf("serial reference : %8.3f s\n", t_serial);
  std::printf("OpenMP batch     : %8.3f s\n", t_parallel);
  std::printf("speedup          : %8.2fx\n", t_serial / t_parallel);
  std::printf("bit-identical    : %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
