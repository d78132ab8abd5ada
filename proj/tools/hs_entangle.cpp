// hs-entangle: two-qubit Hilbert-Schmidt entanglement toolkit.
//
// Subcommands:
//   compute  <spec>             closed form (when available) + numerical solve
//   certify  <spec> <candidate> first-order optimality certificate
//   sweep    --family pure|werner --points N
//   figure   --points N         triangle-frame data behind the geometry figure
//
// Specs are JSON documents read from a file argument or stdin ("-").
// Exit codes: 0 ok, 2 parse/validation error, 3 solver did not reach the
// gap tolerance, 4 certificate refusal (candidate not separable).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hsent/report.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw hsent::SpecError("", "cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw hsent::SpecError("", "cannot open output file: " + path);
  f << text;
}

hsent::OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return hsent::OutputFormat::csv;
  if (name == "json") return hsent::OutputFormat::json;
  if (name == "human") return hsent::OutputFormat::human;
  throw hsent::SpecError("format", "unknown format '" + name + "' (expected human, csv, json)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-qubit Hilbert-Schmidt entanglement toolkit"};
  app.require_subcommand(1);

  hsent::SolverConfig cfg;
  std::string format = "human";
  std::string output;
  app.add_option("--tol", cfg.tol, "Frank-Wolfe duality-gap tolerance")->capture_default_str();
  app.add_option("--max-iters", cfg.max_iters, "Frank-Wolfe iteration cap")->capture_default_str();
  app.add_option("--restarts", cfg.lmo_restarts, "random restarts inside the linear oracle")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for all solver randomness")->capture_default_str();
  app.add_option("--output", output, "write results to a file instead of stdout");
  app.add_option("--format", format, "output format: human, csv, json")->capture_default_str();

  std::string spec_path = "-", cand_path, family = "pure";
  int points = 21;

  CLI::App* c_compute = app.add_subcommand("compute", "closed form + numerical E_HS");
  c_compute->add_option("spec", spec_path, "state-spec JSON file ('-' = stdin)");

  CLI::App* c_certify = app.add_subcommand("certify", "optimality certificate for a candidate");
  c_certify->add_option("spec", spec_path, "state-spec JSON file ('-' = stdin)")->required();
  c_certify->add_option("candidate", cand_path, "candidate basepoint spec JSON file")->required();

  CLI::App* c_sweep = app.add_subcommand("sweep", "parameter sweep over a state family");
  c_sweep->add_option("--family", family, "pure (a2 grid) or werner (epsilon grid)")
      ->capture_default_str();
  c_sweep->add_option("--points", points, "grid size")->capture_default_str();

  CLI::App* c_figure = app.add_subcommand("figure", "triangle-frame geometry data");
  c_figure->add_option("--points", points, "samples per curve")->capture_default_str();

  // allow the global options to appear after the subcommand name too
  for (CLI::App* sub : {c_compute, c_certify, c_sweep, c_figure}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    const hsent::OutputFormat fmt = parse_format(format);
    if (c_compute->parsed()) {
      const hsent::StateSpec spec = hsent::parse_state_spec(read_input(spec_path));
      const hsent::RunReport rep = hsent::cmd_compute(spec, cfg);
      switch (fmt) {
        case hsent::OutputFormat::json: write_output(output, hsent::report_to_json(rep)); break;
        case hsent::OutputFormat::csv: write_output(output, hsent::report_to_csv(rep)); break;
        default: write_output(output, hsent::report_to_human(rep));
      }
      if (rep.numerical && !rep.numerical->converged) return 3;
      return 0;
    }
    if (c_certify->parsed()) {
      const hsent::StateSpec spec = hsent::parse_state_spec(read_input(spec_path));
      const hsent::StateSpec cand = hsent::parse_state_spec(read_input(cand_path));
      const hsent::RunReport rep = hsent::cmd_certify(spec, cand, cfg);
      switch (fmt) {
        case hsent::OutputFormat::json: write_output(output, hsent::report_to_json(rep)); break;
        case hsent::OutputFormat::csv: write_output(output, hsent::report_to_csv(rep)); break;
        default: write_output(output, hsent::report_to_human(rep));
      }
      return 0;
    }
    if (c_sweep->parsed()) {
      const hsent::SweepTable t = hsent::cmd_sweep(family, points, cfg);
      write_output(output, fmt == hsent::OutputFormat::human ? hsent::sweep_to_human(t)
                                                             : hsent::sweep_to_csv(t));
      return 0;
    }
    const hsent::FigureTable t = hsent::cmd_figure(points);
    write_output(output, fmt == hsent::OutputFormat::human ? hsent::figure_to_human(t)
                                                           : hsent::figure_to_csv(t));
    return 0;
  } catch (const hsent::CertificateRefusal& e) {
    std::cerr << "certificate refusal: " << e.what() << "\n";
    return 4;
  } catch (const hsent::SpecError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
