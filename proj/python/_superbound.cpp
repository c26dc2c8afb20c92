#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superbound/assistant.hpp"
#include "superbound/biorthogonal.hpp"
#include "superbound/bounds.hpp"
#include "superbound/campaign.hpp"
#include "superbound/coefficients.hpp"
#include "superbound/errors.hpp"
#include "superbound/serialization.hpp"

namespace py = pybind11;
using namespace superbound;

namespace {

std::vector<BipartitePureState> to_states(const std::vector<ComplexMatrix>& mats) {
  return {mats.begin(), mats.end()};
}

SuperpositionSpec make_spec(const std::vector<Complex>& coefficients,
                            const std::vector<ComplexMatrix>& components) {
  return SuperpositionSpec(coefficients, to_states(components));
}

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Json from_python(const py::object& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::dict coeffs_dict(int n) {
  const NormalizationCoeffs c = normalization_coeffs(n);
  py::dict d;
  d["n"] = c.n;
  d["n_squared"] = c.n_squared;
  d["log_n_squared"] = c.log_n_squared;
  d["reciprocal_sum_residual"] = c.reciprocal_sum_residual();
  if (c.n_squared_exact) {
    py::list exact;
    for (UInt128 v : *c.n_squared_exact) exact.append(py::int_(py::str(to_decimal(v))));
    d["n_squared_exact"] = exact;
  } else {
    d["n_squared_exact"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_superbound, m) {
  m.doc() = "Entanglement bounds for superpositions of bipartite pure states";

  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_ValueError);
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  m.def(
      "entanglement", [](const ComplexMatrix& x) { return entanglement(BipartitePureState(x)); },
      py::arg("amplitudes"), "Entanglement in bits of the (normalized) d_A x d_B amplitude matrix.");
  m.def(
      "schmidt_probabilities",
      [](const ComplexMatrix& x) { return schmidt(BipartitePureState(x)).probabilities(); },
      py::arg("amplitudes"));
  m.def(
      "reduced_density_matrix",
      [](const ComplexMatrix& x, char side) {
        const BipartitePureState s(x);
        if (side == 'A' || side == 'a') return partial_trace_b(s).matrix();
        if (side == 'B' || side == 'b') return partial_trace_a(s).matrix();
        throw std::invalid_argument("side must be 'A' or 'B'");
      },
      py::arg("amplitudes"), py::arg("side") = 'B',
      "Reduced state on the given side (the other side is traced out).");
  m.def(
      "von_neumann_entropy", [](const ComplexMatrix& rho) { return von_neumann_entropy(DensityMatrix(rho)); },
      py::arg("rho"));

  m.def("normalization_coeffs", &coeffs_dict, py::arg("n"));
  m.def("basis_matrix", &basis_matrix, py::arg("n"));

  py::class_<BoundReport>(m, "BoundReport")
      .def_property_readonly("variant", [](const BoundReport& r) { return std::string(to_string(r.variant)); })
      .def_readonly("lhs", &BoundReport::lhs)
      .def_readonly("rhs", &BoundReport::rhs)
      .def_readonly("gap", &BoundReport::gap)
      .def_readonly("correction", &BoundReport::correction)
      .def_readonly("permutation", &BoundReport::permutation)
      .def_readonly("component_entanglements", &BoundReport::component_entanglements)
      .def_readonly("squared_norm", &BoundReport::squared_norm)
      .def_readonly("superposition_entanglement", &BoundReport::superposition_entanglement)
      .def("holds", &BoundReport::holds, py::arg("slack") = kInequalitySlack)
      .def("to_dict", [](const BoundReport& r) { return to_python(report_to_json(r)); })
      .def("__repr__", [](const BoundReport& r) { return "BoundReport(" + report_to_json(r).dump() + ")"; });

  m.def(
      "evaluate_bound",
      [](const std::vector<Complex>& coefficients, const std::vector<ComplexMatrix>& components,
         const std::string& variant) {
        return evaluate_bound(make_spec(coefficients, components), bound_variant_from_string(variant));
      },
      py::arg("coefficients"), py::arg("components"), py::arg("variant") = "unconstrained");

  m.def(
      "superposition_entanglement",
      [](const std::vector<Complex>& coefficients, const std::vector<ComplexMatrix>& components) {
        return superposition_entanglement(make_spec(coefficients, components));
      },
      py::arg("coefficients"), py::arg("components"));
  m.def(
      "is_biorthogonal",
      [](const std::vector<ComplexMatrix>& components, double tol) {
        return is_biorthogonal(to_states(components), tol);
      },
      py::arg("components"), py::arg("tol") = kBiorthogonalTolerance);
  m.def(
      "exact_biorthogonal_entanglement",
      [](const std::vector<Complex>& coefficients, const std::vector<ComplexMatrix>& components) {
        return exact_biorthogonal_entanglement(make_spec(coefficients, components));
      },
      py::arg("coefficients"), py::arg("components"));

  py::class_<AssistantCheckReport>(m, "AssistantCheckReport")
      .def_readonly("s_rho_b", &AssistantCheckReport::s_rho_b)
      .def_readonly("norm_partition_residual", &AssistantCheckReport::norm_partition_residual)
      .def_readonly("rho_b_residual", &AssistantCheckReport::rho_b_residual)
      .def_readonly("leading_weight", &AssistantCheckReport::leading_weight)
      .def_readonly("leading_entanglement", &AssistantCheckReport::leading_entanglement)
      .def_readonly("residual_weights", &AssistantCheckReport::residual_weights)
      .def_readonly("lower_chain", &AssistantCheckReport::lower_chain)
      .def_readonly("upper_chain", &AssistantCheckReport::upper_chain)
      .def_readonly("sandwich_lower_ok", &AssistantCheckReport::sandwich_lower_ok)
      .def_readonly("sandwich_upper_ok", &AssistantCheckReport::sandwich_upper_ok)
      .def_readonly("final_bound_ok", &AssistantCheckReport::final_bound_ok)
      .def("all_ok", &AssistantCheckReport::all_ok);
  m.def(
      "assistant_state_check",
      [](const std::vector<Complex>& coefficients, const std::vector<ComplexMatrix>& components) {
        return assistant_state_check(make_spec(coefficients, components));
      },
      py::arg("coefficients"), py::arg("components"));

  m.def(
      "haar_state",
      [](int dim_a, int dim_b, std::uint64_t seed) {
        return haar_state(dim_a, dim_b, RandomStream(seed)).amplitudes();
      },
      py::arg("dim_a"), py::arg("dim_b"), py::arg("seed"));
  m.def(
      "draw_spec",
      [](const py::object& config, std::uint64_t trial_id) {
        const SuperpositionSpec spec = draw_spec(config_from_json(from_python(config)), trial_id);
        std::vector<ComplexMatrix> comps;
        for (const auto& c : spec.components()) comps.push_back(c.amplitudes());
        return py::make_tuple(spec.coefficients(), comps);
      },
      py::arg("config"), py::arg("trial_id"),
      "The (coefficients, components) drawn for one trial of a campaign.");

  m.def(
      "run_campaign",
      [](const py::object& config, std::uint64_t trials, const std::string& variant,
         unsigned threads, bool include_spec) {
        const EnsembleConfig cfg = config_from_json(from_python(config));
        const CampaignVariant v = campaign_variant_from_string(variant);
        CampaignResult result;
        {
          py::gil_scoped_release release;
          result = run_campaign(cfg, trials, v, CampaignOptions{threads, include_spec});
        }
        Json records = Json::array();
        for (const auto& r : result.records) records.push_back(record_to_json(r));
        py::dict out;
        out["summary"] = to_python(summary_to_json(result.summary, true));
        out["records"] = to_python(records);
        return out;
      },
      py::arg("config"), py::arg("trials"), py::arg("variant") = "constrained",
      py::arg("threads") = 0, py::arg("include_spec") = false);
}
