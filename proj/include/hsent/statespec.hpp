#ifndef HSENT_STATESPEC_HPP
#define HSENT_STATESPEC_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "hsent/closed_form.hpp"
#include "hsent/states.hpp"

namespace hsent {

enum class StateKind { bell, phi_mix, werner, bell_mixture, pure_schmidt, pure_vector, raw_matrix };

std::string state_kind_name(StateKind k);

// Parsed and validated input document.  Only the fields belonging to `kind`
// are meaningful.
struct StateSpec {
  StateKind kind = StateKind::bell;
  int i = 1;
  int j = 2;                              // phi_mix
  double epsilon = 0.0;                   // werner
  double a2 = 0.5;                        // pure_schmidt
  std::array<double, 4> lambdas{1.0, 0.0, 0.0, 0.0};  // bell_mixture
  Vec4 vector{};                          // pure_vector
  ComplexMatrix matrix{4};                // raw_matrix
};

// parse/validation failure; `field` names the offending input field ("" for
// syntax errors)
struct SpecError : std::runtime_error {
  explicit SpecError(const std::string& field_, const std::string& what_)
      : std::runtime_error(field_.empty() ? what_ : field_ + ": " + what_), field(field_) {}
  std::string field;
};

// Parse a JSON state-spec document, e.g.
//   {"kind":"bell","i":1}
//   {"kind":"werner","i":1,"epsilon":0.75}
//   {"kind":"bell_mixture","i":2,"lambdas":[0.5,0.2,0.2,0.1]}
//   {"kind":"pure_schmidt","a2":0.3}
//   {"kind":"pure_vector","real":[...4],"imag":[...4]}
//   {"kind":"raw_matrix","real":[[..]x4],"imag":[[..]x4]}
// "imag" defaults to zero.  Throws SpecError on malformed syntax, unknown
// kind, or parameter validation failures.
StateSpec parse_state_spec(const std::string& text);

// serialise back to the schema accepted by parse_state_spec
std::string state_spec_to_json(const StateSpec& spec);

// the spec turned into an actual state, plus whatever analysis applies
struct AssembledState {
  DensityMatrix state;
  std::optional<SchmidtForm> schmidt;      // pure kinds only
  std::optional<BasepointResult> closed;   // covered closed-form families
};

AssembledState assemble_state_spec(const StateSpec& spec);

}  // namespace hsent

#endif
