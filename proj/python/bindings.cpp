#include "strongconv/channels.hpp"
#include "strongconv/codesim.hpp"
#include "strongconv/converse.hpp"
#include "strongconv/entropy.hpp"
#include "strongconv/errors.hpp"
#include "strongconv/optimize.hpp"
#include "strongconv/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
namespace sc = strongconv;

namespace {

sc::OptimizerConfig make_config(int restarts, std::uint64_t seed) {
  sc::OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

// Result records cross the boundary as JSON text; the Python package decodes them.
std::string dump(const sc::Json& j) { return j.dump(); }

sc::Ensemble make_ensemble(const std::vector<double>& probs, const std::vector<sc::Matrix>& states) {
  std::vector<sc::DensityMatrix> rhos;
  rhos.reserve(states.size());
  for (const auto& s : states) rhos.emplace_back(s);
  return sc::Ensemble(probs, std::move(rhos));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Renyi-entropy and strong-converse toolkit for quantum channels";

  auto base = py::register_exception<sc::Error>(m, "StrongconvError", PyExc_RuntimeError);
  py::register_exception<sc::DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<sc::InvariantViolation>(m, "InvariantViolation", base.ptr());
  py::register_exception<sc::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<sc::ResourceExceeded>(m, "ResourceExceeded", base.ptr());
  py::register_exception<sc::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<sc::NotCertified>(m, "NotCertified", base.ptr());

  py::class_<sc::QuantumChannel>(m, "QuantumChannel")
      .def(py::init<int, int, std::vector<sc::Matrix>, std::string>(), py::arg("dim_in"), py::arg("dim_out"),
           py::arg("kraus"), py::arg("label") = "custom")
      .def_property_readonly("dim_in", &sc::QuantumChannel::dim_in)
      .def_property_readonly("dim_out", &sc::QuantumChannel::dim_out)
      .def_property_readonly("kraus", &sc::QuantumChannel::kraus)
      .def_property_readonly("label", &sc::QuantumChannel::label)
      .def("apply", [](const sc::QuantumChannel& ch, const sc::Matrix& rho) {
        return sc::apply_channel(ch, sc::DensityMatrix(rho)).matrix();
      });

  m.def("identity_channel", &sc::identity_channel, py::arg("d"));
  m.def("depolarizing", &sc::depolarizing, py::arg("d"), py::arg("r"));
  m.def("pauli_diagonal", &sc::pauli_diagonal, py::arg("weights"));
  m.def("werner_holevo", &sc::werner_holevo, py::arg("d"));

  m.def("renyi_entropy", [](const sc::Matrix& rho, double alpha) {
    return sc::renyi_entropy(sc::DensityMatrix(rho), sc::AlphaParam(alpha));
  }, py::arg("rho"), py::arg("alpha") = 1.0);
  m.def("alpha_relative_entropy", [](const sc::Matrix& rho, const sc::Matrix& sigma, double alpha) {
    return sc::alpha_relative_entropy(sc::DensityMatrix(rho), sc::DensityMatrix(sigma), sc::AlphaParam(alpha));
  }, py::arg("rho"), py::arg("sigma"), py::arg("alpha") = 1.0);
  m.def("chi_alpha", [](const std::vector<double>& probs, const std::vector<sc::Matrix>& states, double alpha) {
    return sc::chi_alpha(make_ensemble(probs, states), sc::AlphaParam(alpha));
  }, py::arg("probs"), py::arg("states"), py::arg("alpha") = 1.0);

  m.def("min_output_renyi", [](const sc::QuantumChannel& ch, double alpha, int restarts, std::uint64_t seed) {
    const auto r = sc::min_output_renyi(ch, sc::AlphaParam(alpha), make_config(restarts, seed));
    return py::make_tuple(r.value, r.argmin_vector);
  }, py::arg("channel"), py::arg("alpha"), py::arg("restarts") = 32, py::arg("seed") = 0x5eed);

  m.def("capacity", [](const sc::QuantumChannel& ch, int restarts, std::uint64_t seed) {
    return sc::capacity_covariant(ch, make_config(restarts, seed));
  }, py::arg("channel"), py::arg("restarts") = 32, py::arg("seed") = 0x5eed);

  m.def("exponent_curve", [](const sc::QuantumChannel& ch, const std::vector<double>& rates, double alpha_max,
                             int grid_points, int restarts, std::uint64_t seed) {
    const auto cert = sc::certify_named_channel(ch);
    const auto grid = sc::default_alpha_grid(alpha_max, grid_points);
    return dump(sc::exponent_curve(ch, rates, grid, make_config(restarts, seed), cert).to_json());
  }, py::arg("channel"), py::arg("rates"), py::arg("alpha_max"), py::arg("grid_points") = 64,
     py::arg("restarts") = 32, py::arg("seed") = 0x5eed);

  m.def("additivity_check", [](const sc::QuantumChannel& ch, double alpha, int copies, int restarts,
                               int multi_restarts, std::uint64_t seed) {
    auto cfg = make_config(restarts, seed);
    cfg.multi_copy_restarts = multi_restarts;
    const auto r = sc::additivity_check(ch, sc::AlphaParam(alpha), copies, cfg);
    return py::dict(py::arg("single_copy") = r.single_copy, py::arg("multi_copy") = r.multi_copy,
                    py::arg("gap") = r.gap, py::arg("subadditive") = r.subadditive, py::arg("additive") = r.additive,
                    py::arg("claim_in_range") = r.claim_in_range);
  }, py::arg("channel"), py::arg("alpha"), py::arg("copies") = 2, py::arg("restarts") = 32,
     py::arg("multi_restarts") = 128, py::arg("seed") = 0x5eed);

  m.def("run_experiment", [](const sc::QuantumChannel& ch, int n, double rate, int codebooks,
                             const std::string& generation, std::uint64_t seed, double exponent) {
    return dump(sc::to_json(
        sc::run_experiment(ch, n, rate, codebooks, sc::generation_from_string(generation), seed, exponent)));
  }, py::arg("channel"), py::arg("n"), py::arg("rate"), py::arg("codebooks") = 50,
     py::arg("generation") = "entangled-random", py::arg("seed") = 1, py::arg("exponent") = 0.0);

  m.def("verify", [](const std::string& suite, int samples, std::uint64_t seed) {
    sc::Json rows = sc::Json::array();
    for (const auto& c : sc::run_verify_suite(suite, samples, seed)) rows.push_back(sc::to_json(c));
    return dump(rows);
  }, py::arg("suite") = "all", py::arg("samples") = 200, py::arg("seed") = 1);
}
