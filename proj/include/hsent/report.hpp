#ifndef HSENT_REPORT_HPP
#define HSENT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "hsent/entropy.hpp"
#include "hsent/hs_opt.hpp"
#include "hsent/statespec.hpp"

namespace hsent {

// versioned header emitted on every machine-readable output
inline constexpr const char* kFormatTag = "hs-entangle/1";

enum class OutputFormat { human, csv, json };

// format a double with 12 significant digits (the output convention)
std::string fmt_num(double x);

struct NumericalBlock {
  double value = 0.0;
  double gap = 0.0;
  int iterations = 0;
  bool converged = false;
  int atom_count = 0;
};

struct ClosedFormBlock {
  double value = 0.0;
  std::string regime;
};

struct CertificateBlock {
  double min_derivative = 0.0;
  bool passed = false;
  std::string candidate_source;  // "closed_form" or "numerical"
  ProductProjector witness;
};

struct EntropyBlock {
  double e_vn = 0.0;
  double prop3_slack = 0.0;
  double rel_entropy_to_basepoint = 0.0;
  bool support_violated = false;
};

struct RunReport {
  std::string command;              // "compute" or "certify"
  StateSpec spec;
  std::optional<StateSpec> candidate_spec;  // certify only
  std::optional<ClosedFormBlock> closed;
  std::optional<NumericalBlock> numerical;
  std::optional<double> agreement;  // |closed - numerical|
  std::optional<CertificateBlock> certificate;
  std::optional<EntropyBlock> entropy;
  SolverConfig cfg;
  double elapsed_ms = 0.0;
};

RunReport cmd_compute(const StateSpec& spec, const SolverConfig& cfg);
RunReport cmd_certify(const StateSpec& spec, const StateSpec& candidate, const SolverConfig& cfg);

std::string report_to_json(const RunReport& r);
std::string report_to_csv(const RunReport& r);
std::string report_to_human(const RunReport& r);

// re-parse an emitted JSON report (round-trip schema check)
RunReport report_from_json(const std::string& text);

struct SweepRow {
  double param = 0.0;      // a2 or epsilon
  double closed = 0.0;
  std::string regime;
  double numerical = 0.0;
  double gap = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct SweepTable {
  std::string family;  // "pure" or "werner"
  std::vector<SweepRow> rows;
  SolverConfig cfg;
  double elapsed_ms = 0.0;
};

SweepTable cmd_sweep(const std::string& family, int n_points, const SolverConfig& cfg);
std::string sweep_to_csv(const SweepTable& t);
std::string sweep_to_human(const SweepTable& t);

struct FigureRow {
  std::string block;  // "parabola", "projection", "intersection"
  double param = 0.0;
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;  // triangle barycentric coordinates
};

struct FigureTable {
  std::vector<FigureRow> rows;
  double a2_low = 0.0;   // located intersection parameters
  double a2_high = 0.0;
};

// barycentric coordinates of x in the triangle (P00, P11, PT(P_plus)),
// solved in the HS inner product
std::array<double, 3> triangle_coords(const ComplexMatrix& x);

FigureTable cmd_figure(int n_points);
std::string figure_to_csv(const FigureTable& t);
std::string figure_to_human(const FigureTable& t);

}  // namespace hsent

#endif
