#include "hsent/statespec.hpp"

#include <cmath>

#include "json.hpp"

namespace hsent {

using nlohmann::json;

namespace {

int get_index(const json& j, const char* field) {
  if (!j.contains(field)) throw SpecError(field, "missing Bell index");
  const json& v = j.at(field);
  if (!v.is_number_integer()) throw SpecError(field, "must be an integer");
  const int i = v.get<int>();
  if (i < 1 || i > 4) throw SpecError(field, "Bell index must be in 1..4");
  return i;
}

double get_real(const json& j, const char* field, double lo, double hi) {
  if (!j.contains(field)) throw SpecError(field, "missing required number");
  const json& v = j.at(field);
  if (!v.is_number()) throw SpecError(field, "must be a number");
  const double x = v.get<double>();
  if (!(x >= lo && x <= hi))
    throw SpecError(field, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x;
}

std::array<double, 4> get_real4(const json& j, const char* field) {
  if (!j.contains(field)) throw SpecError(field, "missing required array");
  const json& v = j.at(field);
  if (!v.is_array() || v.size() != 4) throw SpecError(field, "must be an array of 4 numbers");
  std::array<double, 4> out{};
  for (int k = 0; k < 4; ++k) {
    if (!v[k].is_number()) throw SpecError(field, "entries must be numbers");
    out[k] = v[k].get<double>();
  }
  return out;
}

}  // namespace

std::string state_kind_name(StateKind k) {
  switch (k) {
    case StateKind::bell: return "bell";
    case StateKind::phi_mix: return "phi_mix";
    case StateKind::werner: return "werner";
    case StateKind::bell_mixture: return "bell_mixture";
    case StateKind::pure_schmidt: return "pure_schmidt";
    case StateKind::pure_vector: return "pure_vector";
    default: return "raw_matrix";
  }
}

StateSpec parse_state_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError("", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("", "top level must be a JSON object");
  if (!j.contains("kind")) throw SpecError("kind", "missing discriminator");
  if (!j.at("kind").is_string()) throw SpecError("kind", "must be a string");
  const std::string kind = j.at("kind").get<std::string>();

  StateSpec spec;
  if (kind == "bell") {
    spec.kind = StateKind::bell;
    spec.i = get_index(j, "i");
  } else if (kind == "phi_mix") {
    spec.kind = StateKind::phi_mix;
    spec.i = get_index(j, "i");
    spec.j = get_index(j, "j");
    if (spec.i == spec.j) throw SpecError("j", "indices must differ");
  } else if (kind == "werner") {
    spec.kind = StateKind::werner;
    spec.i = get_index(j, "i");
    spec.epsilon = get_real(j, "epsilon", 0.0, 1.0);
  } else if (kind == "bell_mixture") {
    spec.kind = StateKind::bell_mixture;
    spec.i = get_index(j, "i");
    spec.lambdas = get_real4(j, "lambdas");
    double sum = 0.0;
    for (double l : spec.lambdas) {
      if (l < 0.0) throw SpecError("lambdas", "weights must be >= 0");
      sum += l;
    }
    if (std::abs(sum - 1.0) > 1e-10) throw SpecError("lambdas", "weights must sum to 1");
  } else if (kind == "pure_schmidt") {
    spec.kind = StateKind::pure_schmidt;
    spec.a2 = get_real(j, "a2", 0.0, 1.0);
  } else if (kind == "pure_vector") {
    spec.kind = StateKind::pure_vector;
    const std::array<double, 4> re = get_real4(j, "real");
    std::array<double, 4> im{};
    if (j.contains("imag")) im = get_real4(j, "imag");
    double n2 = 0.0;
    for (int k = 0; k < 4; ++k) {
      spec.vector[k] = Complex(re[k], im[k]);
      n2 += std::norm(spec.vector[k]);
    }
    if (std::abs(n2 - 1.0) > 1e-6) throw SpecError("real", "vector must have unit norm");
    const double n = std::sqrt(n2);
    for (Complex& c : spec.vector) c /= n;
  } else if (kind == "raw_matrix") {
    spec.kind = StateKind::raw_matrix;
    auto get44 = [&](const char* field, bool required) {
      ComplexMatrix m(4);
      if (!j.contains(field)) {
        if (required) throw SpecError(field, "missing required 4x4 array");
        return m;
      }
      const json& v = j.at(field);
      if (!v.is_array() || v.size() != 4) throw SpecError(field, "must be a 4x4 array");
      for (int r = 0; r < 4; ++r) {
        if (!v[r].is_array() || v[r].size() != 4) throw SpecError(field, "must be a 4x4 array");
        for (int c = 0; c < 4; ++c) {
          if (!v[r][c].is_number()) throw SpecError(field, "entries must be numbers");
          m(r, c) = v[r][c].get<double>();
        }
      }
      return m;
    };
    const ComplexMatrix re = get44("real", true);
    const ComplexMatrix im = get44("imag", false);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) spec.matrix(r, c) = Complex(std::real(re(r, c)), std::real(im(r, c)));
    try {
      (void)DensityMatrix::from_matrix(spec.matrix);
    } catch (const std::exception& e) {
      throw SpecError("real", std::string("not a density matrix: ") + e.what());
    }
  } else {
    throw SpecError("kind", "unknown kind '" + kind + "'");
  }
  return spec;
}

std::string state_spec_to_json(const StateSpec& spec) {
  json j;
  j["kind"] = state_kind_name(spec.kind);
  switch (spec.kind) {
    case StateKind::bell: j["i"] = spec.i; break;
    case StateKind::phi_mix:
      j["i"] = spec.i;
      j["j"] = spec.j;
      break;
    case StateKind::werner:
      j["i"] = spec.i;
      j["epsilon"] = spec.epsilon;
      break;
    case StateKind::bell_mixture:
      j["i"] = spec.i;
      j["lambdas"] = spec.lambdas;
      break;
    case StateKind::pure_schmidt: j["a2"] = spec.a2; break;
    case StateKind::pure_vector: {
      std::array<double, 4> re{}, im{};
      for (int k = 0; k < 4; ++k) {
        re[k] = std::real(spec.vector[k]);
        im[k] = std::imag(spec.vector[k]);
      }
      j["real"] = re;
      j["imag"] = im;
      break;
    }
    case StateKind::raw_matrix: {
      std::array<std::array<double, 4>, 4> re{}, im{};
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
          re[r][c] = std::real(spec.matrix(r, c));
          im[r][c] = std::imag(spec.matrix(r, c));
        }
      j["real"] = re;
      j["imag"] = im;
      break;
    }
  }
  return j.dump();
}

AssembledState assemble_state_spec(const StateSpec& spec) {
  switch (spec.kind) {
    case StateKind::bell: {
      const BellIndex bi(spec.i);
      BellMixture m;
      m.i = bi;
      m.lambdas = {0.0, 0.0, 0.0, 0.0};
      m.lambdas[spec.i - 1] = 1.0;
      return AssembledState{bell_projector(bi), schmidt_decompose(bell_vector(bi)),
                            ehs_bell_mixture(m)};
    }
    case StateKind::phi_mix: {
      BellMixture m;
      m.i = BellIndex(spec.i);
      m.lambdas = {0.0, 0.0, 0.0, 0.0};
      m.lambdas[spec.j - 1] = 1.0;
      return AssembledState{phi_mix(BellIndex(spec.i), BellIndex(spec.j)), std::nullopt,
                            ehs_bell_mixture(m)};
    }
    case StateKind::werner: {
      const DensityMatrix w = werner(BellIndex(spec.i), spec.epsilon);
      std::optional<BasepointResult> closed;
      if (spec.epsilon > 1.0 / 3.0) {
        closed = ehs_bell_mixture(werner_mixture(BellIndex(spec.i), spec.epsilon));
      } else {
        closed = BasepointResult{0.0, w, Regime::separable};  // PPT below 1/3
      }
      return AssembledState{w, std::nullopt, closed};
    }
    case StateKind::bell_mixture: {
      BellMixture m;
      m.i = BellIndex(spec.i);
      m.lambdas = spec.lambdas;
      return AssembledState{bell_mixture_state(m), std::nullopt, ehs_bell_mixture(m)};
    }
    case StateKind::pure_schmidt: {
      SchmidtForm s;
      s.a = std::sqrt(std::max(spec.a2, 1.0 - spec.a2));
      s.b = std::sqrt(std::min(spec.a2, 1.0 - spec.a2));
      s.frame1 = ComplexMatrix::identity(2);
      s.frame2 = ComplexMatrix::identity(2);
      if (spec.a2 < 0.5) {  // canonical form keeps a >= b; swap the roles
        s.frame1 = pauli_x();
        s.frame2 = pauli_x();
      }
      return AssembledState{pure_from_schmidt(s), s, ehs_pure_schmidt(s)};
    }
    case StateKind::pure_vector: {
      const SchmidtForm s = schmidt_decompose(spec.vector);
      return AssembledState{pure_from_schmidt(s), s, ehs_pure_schmidt(s)};
    }
    default:
      return AssembledState{DensityMatrix::from_matrix(spec.matrix), std::nullopt, std::nullopt};
  }
}

}  // namespace hsent
