#include "superbound/serialization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "superbound/errors.hpp"

namespace superbound {

namespace {

template <typename F>
auto schema_guard(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Json::exception& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  } catch (const InvariantError& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  } catch (const ShapeError& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  } catch (const DomainError& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

int require_positive_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  const auto value = v.get<long long>();
  if (value < 1 || value > 1'000'000) {
    throw SchemaError(std::string("field '") + key + "' out of range");
  }
  return static_cast<int>(value);
}

std::vector<Complex> complex_list(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const Json& z : j) out.push_back(complex_from_json(z));
  return out;
}

Json complex_list_to_json(std::span<const Complex> values) {
  Json out = Json::array();
  for (const Complex& z : values) out.push_back(complex_to_json(z));
  return out;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SchemaError("complex numbers are encoded as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json state_to_json(const BipartitePureState& state) {
  Json amps = Json::array();
  const auto& m = state.amplitudes();
  for (int i = 0; i < state.dim_a(); ++i) {
    for (int j = 0; j < state.dim_b(); ++j) amps.push_back(complex_to_json(m(i, j)));
  }
  return Json{{"dim_a", state.dim_a()}, {"dim_b", state.dim_b()}, {"amplitudes", std::move(amps)}};
}

BipartitePureState state_from_json(const Json& j) {
  return schema_guard("state", [&] {
    const int da = require_positive_int(j, "dim_a");
    const int db = require_positive_int(j, "dim_b");
    const auto amps = complex_list(require(j, "amplitudes"));
    if (static_cast<long>(amps.size()) != static_cast<long>(da) * db) {
      throw SchemaError("state has " + std::to_string(amps.size()) + " amplitudes, expected " +
                        std::to_string(static_cast<long>(da) * db));
    }
    ComplexMatrix m(da, db);
    for (int r = 0; r < da; ++r) {
      for (int c = 0; c < db; ++c) m(r, c) = amps[static_cast<std::size_t>(r) * db + c];
    }
    return BipartitePureState(std::move(m));
  });
}

Json spec_to_json(const SuperpositionSpec& spec) {
  Json components = Json::array();
  for (const auto& c : spec.components()) components.push_back(state_to_json(c));
  return Json{{"coefficients", complex_list_to_json(spec.coefficients())},
              {"components", std::move(components)}};
}

SuperpositionSpec spec_from_json(const Json& j) {
  return schema_guard("spec", [&] {
    auto coefficients = complex_list(require(j, "coefficients"));
    const Json& comps = require(j, "components");
    if (!comps.is_array()) throw SchemaError("'components' must be an array");
    std::vector<BipartitePureState> components;
    components.reserve(comps.size());
    for (const Json& c : comps) components.push_back(state_from_json(c));
    return SuperpositionSpec(std::move(coefficients), std::move(components));
  });
}

Json config_to_json(const EnsembleConfig& config) {
  Json j{{"n", config.n},
         {"dim_a", config.dim_a},
         {"dim_b", config.dim_b},
         {"family", to_string(config.family)},
         {"seed", config.seed},
         {"coefficient_mode", to_string(config.coefficient_mode)},
         {"block_a", config.block_a},
         {"block_b", config.block_b}};
  if (!config.fixed_coefficients.empty()) {
    j["coefficients"] = complex_list_to_json(config.fixed_coefficients);
  }
  return j;
}

EnsembleConfig config_from_json(const Json& j) {
  return schema_guard("config", [&] {
    EnsembleConfig c;
    c.n = require_positive_int(j, "n");
    c.dim_a = require_positive_int(j, "dim_a");
    c.dim_b = require_positive_int(j, "dim_b");
    if (j.contains("family")) c.family = family_from_string(j.at("family").get<std::string>());
    if (j.contains("seed")) {
      const Json& s = j.at("seed");
      if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
        throw SchemaError("'seed' must be a non-negative integer");
      }
      c.seed = s.get<std::uint64_t>();
    }
    if (j.contains("coefficient_mode")) {
      c.coefficient_mode =
          coefficient_mode_from_string(j.at("coefficient_mode").get<std::string>());
    }
    if (j.contains("block_a")) c.block_a = j.at("block_a").get<int>();
    if (j.contains("block_b")) c.block_b = j.at("block_b").get<int>();
    if (j.contains("coefficients")) c.fixed_coefficients = complex_list(j.at("coefficients"));
    validate(c);
    return c;
  });
}

Json report_to_json(const BoundReport& report) {
  Json j{{"variant", to_string(report.variant)},
         {"lhs", report.lhs},
         {"rhs", report.rhs},
         {"gap", report.gap},
         {"correction", report.correction},
         {"squared_norm", report.squared_norm},
         {"superposition_entanglement", report.superposition_entanglement},
         {"component_entanglements", report.component_entanglements},
         {"holds", report.holds()}};
  if (report.permutation) j["permutation"] = *report.permutation;
  return j;
}

Json report_to_json(const AssistantCheckReport& report) {
  return Json{{"variant", "assistant"},
              {"s_rho_b", report.s_rho_b},
              {"norm_partition_residual", report.norm_partition_residual},
              {"rho_b_residual", report.rho_b_residual},
              {"leading_weight", report.leading_weight},
              {"leading_entanglement", report.leading_entanglement},
              {"residual_weights", report.residual_weights},
              {"lower_chain", report.lower_chain},
              {"upper_chain", report.upper_chain},
              {"sandwich_lower_ok", report.sandwich_lower_ok},
              {"sandwich_upper_ok", report.sandwich_upper_ok},
              {"final_bound_ok", report.final_bound_ok}};
}

std::string to_decimal(UInt128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Json coeffs_to_json(const NormalizationCoeffs& coeffs) {
  Json n_squared = Json::array();
  for (double v : coeffs.n_squared) {
    // JSON has no infinity; overflowed entries are reported as null. Values
    // below 2^53 are exact integers and are written as such.
    if (!std::isfinite(v)) {
      n_squared.push_back(nullptr);
    } else if (v <= 0x1.0p53) {
      n_squared.push_back(static_cast<std::uint64_t>(v));
    } else {
      n_squared.push_back(v);
    }
  }
  Json log2_values = Json::array();
  for (double l : coeffs.log_n_squared) log2_values.push_back(l / std::log(2.0));
  Json j{{"n", coeffs.n},
         {"n_squared", std::move(n_squared)},
         {"log2_n_squared", std::move(log2_values)},
         {"reciprocal_sum_residual", coeffs.reciprocal_sum_residual()}};
  if (coeffs.n_squared_exact) {
    Json exact = Json::array();
    for (UInt128 v : *coeffs.n_squared_exact) exact.push_back(to_decimal(v));
    j["n_squared_exact"] = std::move(exact);
  } else {
    j["n_squared_exact"] = nullptr;
  }
  return j;
}

}  // namespace superbound
