#include "hsent/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace hsent {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json config_to_json(const SolverConfig& cfg) {
  return json{{"max_iters", cfg.max_iters},
              {"tol", cfg.tol},
              {"lmo_restarts", cfg.lmo_restarts},
              {"lmo_inner_iters", cfg.lmo_inner_iters},
              {"seed", cfg.seed}};
}

json witness_to_json(const ProductProjector& w) {
  auto cvec = [](const Vec2& v) {
    return json{{std::real(v[0]), std::imag(v[0])}, {std::real(v[1]), std::imag(v[1])}};
  };
  return json{{"chi", cvec(w.chi)}, {"xi", cvec(w.xi)}};
}

}  // namespace

std::string fmt_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

RunReport cmd_compute(const StateSpec& spec, const SolverConfig& cfg) {
  const auto t0 = Clock::now();
  const AssembledState st = assemble_state_spec(spec);

  RunReport r;
  r.command = "compute";
  r.spec = spec;
  r.cfg = cfg;

  if (st.closed) {
    r.closed = ClosedFormBlock{st.closed->entanglement, regime_name(st.closed->regime)};
  }

  const EntanglementResult num = nearest_separable(st.state, cfg);
  r.numerical = NumericalBlock{num.value, num.gap, num.iterations, num.converged,
                               static_cast<int>(num.basepoint.atoms.size())};
  if (r.closed) r.agreement = std::abs(r.closed->value - num.value);

  // certify whichever basepoint is available (closed form preferred)
  const DensityMatrix candidate =
      st.closed ? st.closed->basepoint : assemble_state(num.basepoint);
  const CertificateReport cert = certify_basepoint(st.state, candidate, cfg);
  r.certificate = CertificateBlock{cert.min_derivative, cert.passed,
                                   st.closed ? "closed_form" : "numerical", cert.witness};

  if (st.schmidt) {  // pure-state entropy diagnostics
    const double a2 = st.schmidt->a * st.schmidt->a;
    const double e_hs = st.closed ? st.closed->entanglement : num.value;
    const RelEntropyValue rel = relative_entropy(st.state, candidate);
    r.entropy = EntropyBlock{evn_pure(a2), prop3_check(evn_pure(a2), e_hs), rel.value,
                             rel.support_violated};
  }

  r.elapsed_ms = ms_since(t0);
  return r;
}

RunReport cmd_certify(const StateSpec& spec, const StateSpec& candidate, const SolverConfig& cfg) {
  const auto t0 = Clock::now();
  const AssembledState st = assemble_state_spec(spec);
  const AssembledState cand = assemble_state_spec(candidate);

  RunReport r;
  r.command = "certify";
  r.spec = spec;
  r.candidate_spec = candidate;
  r.cfg = cfg;

  const CertificateReport cert = certify_basepoint(st.state, cand.state, cfg);
  r.certificate = CertificateBlock{cert.min_derivative, cert.passed, "candidate", cert.witness};
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::string report_to_json(const RunReport& r) {
  json j;
  j["format"] = kFormatTag;
  j["command"] = r.command;
  j["spec"] = json::parse(state_spec_to_json(r.spec));
  if (r.candidate_spec) j["candidate"] = json::parse(state_spec_to_json(*r.candidate_spec));
  if (r.closed) j["closed_form"] = json{{"value", r.closed->value}, {"regime", r.closed->regime}};
  if (r.numerical)
    j["numerical"] = json{{"value", r.numerical->value},
                          {"gap", r.numerical->gap},
                          {"iterations", r.numerical->iterations},
                          {"converged", r.numerical->converged},
                          {"atom_count", r.numerical->atom_count}};
  if (r.agreement) j["agreement"] = *r.agreement;
  if (r.certificate)
    j["certificate"] = json{{"min_derivative", r.certificate->min_derivative},
                            {"passed", r.certificate->passed},
                            {"candidate_source", r.certificate->candidate_source},
                            {"witness", witness_to_json(r.certificate->witness)}};
  if (r.entropy)
    j["entropy"] = json{{"e_vn", r.entropy->e_vn},
                        {"prop3_slack", r.entropy->prop3_slack},
                        {"rel_entropy_to_basepoint",
                         r.entropy->support_violated ? json("inf") : json(r.entropy->rel_entropy_to_basepoint)},
                        {"support_violated", r.entropy->support_violated}};
  j["config"] = config_to_json(r.cfg);
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError("", std::string("malformed report JSON: ") + e.what());
  }
  if (!j.contains("format") || j.at("format").get<std::string>() != kFormatTag)
    throw SpecError("format", "missing or unsupported format tag");

  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.spec = parse_state_spec(j.at("spec").dump());
  if (j.contains("candidate")) r.candidate_spec = parse_state_spec(j.at("candidate").dump());
  if (j.contains("closed_form"))
    r.closed = ClosedFormBlock{j["closed_form"].at("value").get<double>(),
                               j["closed_form"].at("regime").get<std::string>()};
  if (j.contains("numerical")) {
    const json& n = j["numerical"];
    r.numerical = NumericalBlock{n.at("value").get<double>(), n.at("gap").get<double>(),
                                 n.at("iterations").get<int>(), n.at("converged").get<bool>(),
                                 n.at("atom_count").get<int>()};
  }
  if (j.contains("agreement")) r.agreement = j["agreement"].get<double>();
  if (j.contains("certificate")) {
    const json& c = j["certificate"];
    CertificateBlock cb;
    cb.min_derivative = c.at("min_derivative").get<double>();
    cb.passed = c.at("passed").get<bool>();
    cb.candidate_source = c.at("candidate_source").get<std::string>();
    const json& w = c.at("witness");
    for (int k = 0; k < 2; ++k) {
      cb.witness.chi[k] = Complex(w["chi"][k][0].get<double>(), w["chi"][k][1].get<double>());
      cb.witness.xi[k] = Complex(w["xi"][k][0].get<double>(), w["xi"][k][1].get<double>());
    }
    r.certificate = cb;
  }
  if (j.contains("entropy")) {
    const json& e = j["entropy"];
    EntropyBlock eb;
    eb.e_vn = e.at("e_vn").get<double>();
    eb.prop3_slack = e.at("prop3_slack").get<double>();
    eb.support_violated = e.at("support_violated").get<bool>();
    eb.rel_entropy_to_basepoint = eb.support_violated
                                      ? std::numeric_limits<double>::infinity()
                                      : e.at("rel_entropy_to_basepoint").get<double>();
    r.entropy = eb;
  }
  const json& c = j.at("config");
  r.cfg.max_iters = c.at("max_iters").get<int>();
  r.cfg.tol = c.at("tol").get<double>();
  r.cfg.lmo_restarts = c.at("lmo_restarts").get<int>();
  r.cfg.lmo_inner_iters = c.at("lmo_inner_iters").get<int>();
  r.cfg.seed = c.at("seed").get<std::uint64_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

std::string report_to_csv(const RunReport& r) {
  std::ostringstream os;
  os << kFormatTag << "\n";
  os << "key,value\n";
  os << "command," << r.command << "\n";
  os << "kind," << state_kind_name(r.spec.kind) << "\n";
  if (r.closed) {
    os << "closed_value," << fmt_num(r.closed->value) << "\n";
    os << "regime," << r.closed->regime << "\n";
  }
  if (r.numerical) {
    os << "numerical_value," << fmt_num(r.numerical->value) << "\n";
    os << "gap," << fmt_num(r.numerical->gap) << "\n";
    os << "iterations," << r.numerical->iterations << "\n";
    os << "converged," << (r.numerical->converged ? 1 : 0) << "\n";
    os << "atom_count," << r.numerical->atom_count << "\n";
  }
  if (r.agreement) os << "agreement," << fmt_num(*r.agreement) << "\n";
  if (r.certificate) {
    os << "min_derivative," << fmt_num(r.certificate->min_derivative) << "\n";
    os << "certificate_passed," << (r.certificate->passed ? 1 : 0) << "\n";
    os << "certificate_candidate," << r.certificate->candidate_source << "\n";
  }
  if (r.entropy) {
    os << "e_vn," << fmt_num(r.entropy->e_vn) << "\n";
    os << "prop3_slack," << fmt_num(r.entropy->prop3_slack) << "\n";
    os << "rel_entropy_to_basepoint,"
       << (r.entropy->support_violated ? "inf" : fmt_num(r.entropy->rel_entropy_to_basepoint))
       << "\n";
  }
  // timing is deliberately omitted: CSV output is bit-deterministic for a
  // fixed seed and config
  return os.str();
}

std::string report_to_human(const RunReport& r) {
  std::ostringstream os;
  os << "== " << r.command << " " << state_kind_name(r.spec.kind) << " ==\n";
  if (r.closed) {
    os << "closed form      E_HS = " << fmt_num(r.closed->value) << "  [" << r.closed->regime
       << "]\n";
  }
  if (r.numerical) {
    os << "numerical        E_HS = " << fmt_num(r.numerical->value)
       << "  (gap " << fmt_num(r.numerical->gap) << ", " << r.numerical->iterations
       << " iterations, " << (r.numerical->converged ? "converged" : "gap above tol") << ", "
       << r.numerical->atom_count << " atoms)\n";
  }
  if (r.agreement) os << "|closed - numerical| = " << fmt_num(*r.agreement) << "\n";
  if (r.certificate) {
    os << "certificate      min directional derivative = "
       << fmt_num(r.certificate->min_derivative) << "  ("
       << (r.certificate->passed ? "passed" : "FAILED") << ", candidate: "
       << r.certificate->candidate_source << ")\n";
    const ProductProjector& w = r.certificate->witness;
    os << "  witness chi = (" << fmt_num(std::real(w.chi[0])) << (std::imag(w.chi[0]) < 0 ? "-" : "+")
       << fmt_num(std::abs(std::imag(w.chi[0]))) << "i, " << fmt_num(std::real(w.chi[1]))
       << (std::imag(w.chi[1]) < 0 ? "-" : "+") << fmt_num(std::abs(std::imag(w.chi[1])))
       << "i)\n";
    os << "  witness xi  = (" << fmt_num(std::real(w.xi[0])) << (std::imag(w.xi[0]) < 0 ? "-" : "+")
       << fmt_num(std::abs(std::imag(w.xi[0]))) << "i, " << fmt_num(std::real(w.xi[1]))
       << (std::imag(w.xi[1]) < 0 ? "-" : "+") << fmt_num(std::abs(std::imag(w.xi[1])))
       << "i)\n";
  }
  if (r.entropy) {
    os << "entropy          E_vN = " << fmt_num(r.entropy->e_vn)
       << ", prop3 slack = " << fmt_num(r.entropy->prop3_slack) << ", S(sigma||basepoint) = "
       << (r.entropy->support_violated ? "inf" : fmt_num(r.entropy->rel_entropy_to_basepoint))
       << "\n";
  }
  os << "elapsed " << fmt_num(r.elapsed_ms) << " ms\n";
  return os.str();
}

SweepTable cmd_sweep(const std::string& family, int n_points, const SolverConfig& cfg) {
  if (n_points < 2) throw SpecError("points", "need at least 2 sweep points");
  if (family != "pure" && family != "werner")
    throw SpecError("family", "unknown family '" + family + "' (expected pure or werner)");

  const auto t0 = Clock::now();
  SweepTable t;
  t.family = family;
  t.cfg = cfg;

  std::vector<DensityMatrix> states;
  std::vector<BasepointResult> closed;
  states.reserve(n_points);
  for (int k = 0; k < n_points; ++k) {
    const double x = static_cast<double>(k) / (n_points - 1);
    if (family == "pure") {
      closed.push_back(ehs_pure(x));
      StateSpec s;
      s.kind = StateKind::pure_schmidt;
      s.a2 = x;
      states.push_back(assemble_state_spec(s).state);
    } else {
      const DensityMatrix w = werner(BellIndex(1), x);
      if (x > 1.0 / 3.0)
        closed.push_back(ehs_bell_mixture(werner_mixture(BellIndex(1), x)));
      else
        closed.push_back(BasepointResult{0.0, w, Regime::separable});
      states.push_back(w);
    }
  }

  const std::vector<EntanglementResult> num = nearest_separable_batch(states, cfg);
  for (int k = 0; k < n_points; ++k) {
    const double x = static_cast<double>(k) / (n_points - 1);
    t.rows.push_back(SweepRow{x, closed[k].entanglement, regime_name(closed[k].regime),
                              num[k].value, num[k].gap, num[k].iterations, num[k].converged});
  }
  t.elapsed_ms = ms_since(t0);
  return t;
}

std::string sweep_to_csv(const SweepTable& t) {
  std::ostringstream os;
  os << kFormatTag << "\n";
  os << "family,param,closed_form,regime,numerical,gap,iterations,converged\n";
  for (const SweepRow& r : t.rows)
    os << t.family << "," << fmt_num(r.param) << "," << fmt_num(r.closed) << "," << r.regime << ","
       << fmt_num(r.numerical) << "," << fmt_num(r.gap) << "," << r.iterations << ","
       << (r.converged ? 1 : 0) << "\n";
  return os.str();
}

std::string sweep_to_human(const SweepTable& t) {
  std::ostringstream os;
  os << "== sweep " << t.family << " (" << t.rows.size() << " points) ==\n";
  os << (t.family == "pure" ? "      a2" : " epsilon")
     << "      closed_form        numerical          gap   regime\n";
  char buf[160];
  for (const SweepRow& r : t.rows) {
    std::snprintf(buf, sizeof buf, "%8.4f %16.12f %16.12f %12.3e   %s\n", r.param, r.closed,
                  r.numerical, r.gap, r.regime.c_str());
    os << buf;
  }
  os << "elapsed " << fmt_num(t.elapsed_ms) << " ms\n";
  return os.str();
}

std::array<double, 3> triangle_coords(const ComplexMatrix& x) {
  Vec4 e00{1.0, 0.0, 0.0, 0.0}, e11{0.0, 0.0, 0.0, 1.0};
  const ComplexMatrix v1 = outer(e00);
  const ComplexMatrix v2 = outer(e11);
  const ComplexMatrix v3 = partial_transpose(bell_projector(BellIndex(3)).matrix());

  // affine 2x2 Gram system in the HS inner product
  const ComplexMatrix d1 = v1 - v3, d2 = v2 - v3, y = x - v3;
  const double g11 = std::real(hs_inner(d1, d1));
  const double g12 = std::real(hs_inner(d1, d2));
  const double g22 = std::real(hs_inner(d2, d2));
  const double b1 = std::real(hs_inner(d1, y));
  const double b2 = std::real(hs_inner(d2, y));
  const double det = g11 * g22 - g12 * g12;
  const double c1 = (g22 * b1 - g12 * b2) / det;
  const double c2 = (g11 * b2 - g12 * b1) / det;
  return {c1, c2, 1.0 - c1 - c2};
}

namespace {

// smallest eigenvalue of the plane-projected pure-state curve; changes sign
// exactly where the curve crosses the parabola of zero-eigenvalue states
double projected_min_eig(double a2) {
  return eig_hermitian(central_candidate(a2)).eigenvalues[0];
}

double bisect_intersection(double lo, double hi) {
  double flo = projected_min_eig(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = projected_min_eig(mid);
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

FigureTable cmd_figure(int n_points) {
  if (n_points < 2) throw SpecError("points", "need at least 2 figure points");
  FigureTable t;

  for (int k = 0; k < n_points; ++k) {
    const double s = static_cast<double>(k) / (n_points - 1);
    const std::array<double, 3> c = triangle_coords(parabola_point(s).matrix());
    t.rows.push_back(FigureRow{"parabola", s, c[0], c[1], c[2]});
  }
  for (int k = 0; k < n_points; ++k) {
    const double a2 = static_cast<double>(k) / (n_points - 1);
    const std::array<double, 3> c = triangle_coords(central_candidate(a2));
    t.rows.push_back(FigureRow{"projection", a2, c[0], c[1], c[2]});
  }

  // the projected curve leaves PSD outside the central window; locate the
  // two crossings numerically
  t.a2_low = bisect_intersection(1e-8, 0.5);
  t.a2_high = bisect_intersection(1.0 - 1e-8, 0.5);
  for (const double a2 : {t.a2_low, t.a2_high}) {
    const std::array<double, 3> c = triangle_coords(central_candidate(a2));
    t.rows.push_back(FigureRow{"intersection", a2, c[0], c[1], c[2]});
  }
  return t;
}

std::string figure_to_csv(const FigureTable& t) {
  std::ostringstream os;
  os << kFormatTag << "\n";
  os << "block,param,c1,c2,c3\n";
  for (const FigureRow& r : t.rows)
    os << r.block << "," << fmt_num(r.param) << "," << fmt_num(r.c1) << "," << fmt_num(r.c2)
       << "," << fmt_num(r.c3) << "\n";
  return os.str();
}

std::string figure_to_human(const FigureTable& t) {
  std::ostringstream os;
  os << "== figure data (triangle frame: P00, P11, PT(P+)) ==\n";
  os << "intersections at a2 = " << fmt_num(t.a2_low) << " and " << fmt_num(t.a2_high) << "\n";
  char buf[160];
  for (const FigureRow& r : t.rows) {
    std::snprintf(buf, sizeof buf, "%-13s %10.6f   (%.6f, %.6f, %.6f)\n", r.block.c_str(),
                  r.param, r.c1, r.c2, r.c3);
    os << buf;
  }
  return os.str();
}

}  // namespace hsent
