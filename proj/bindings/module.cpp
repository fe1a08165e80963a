#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stuq/batch.hpp"
#include "stuq/dictionary.hpp"
#include "stuq/report.hpp"

#include <sstream>

namespace py = pybind11;
using namespace stuq;

namespace {

ChargeVector make_charges(std::int64_t q0, std::int64_t p1, std::int64_t p2, std::int64_t p3) {
  return ChargeVector(q0, p1, p2, p3);
}

py::dict schmidt_dict(const SchmidtForm& f) {
  py::dict d;
  d["lambda"] = std::vector<double>(f.lambda.begin(), f.lambda.end());
  d["phi"] = f.phi;
  d["norm_factor"] = f.norm_factor;
  return d;
}

py::dict analyze_py(std::int64_t q0, std::int64_t p1, std::int64_t p2, std::int64_t p3) {
  const AnalysisReport r = analyze(make_charges(q0, p1, p2, p3));
  py::dict d;
  py::dict charges;
  charges["q0"] = r.charges.q0();
  charges["p1"] = r.charges.p1();
  charges["p2"] = r.charges.p2();
  charges["p3"] = r.charges.p3();
  d["charges"] = charges;
  d["bps"] = r.bps;
  d["family"] = r.family.id;
  d["criteria"] = r.family.criteria;
  d["case"] = case_label_name(r.case_lab);
  d["schmidt"] = schmidt_dict(r.schmidt);
  d["eta"] = std::vector<double>(r.eta_magnitudes.begin(), r.eta_magnitudes.end());
  d["delta"] = r.delta;
  d["det_psi"] = r.det_psi;
  d["three_tangle"] = r.tangle;
  d["entropy"] = r.entropy;
  d["j1"] = r.invariants.j1;
  d["j2"] = r.invariants.j2;
  d["j3"] = r.invariants.j3;
  d["j4"] = r.invariants.j4;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Three-qubit analysis of four-charge extremal black holes";

  m.def("classify_family",
        [](std::int64_t q0, std::int64_t p1, std::int64_t p2, std::int64_t p3) {
          return classify_family(make_charges(q0, p1, p2, p3)).id;
        },
        py::arg("q0"), py::arg("p1"), py::arg("p2"), py::arg("p3"),
        "Family index (1..7) of a four-charge black hole.");

  m.def("schmidt_decompose",
        [](std::int64_t q0, std::int64_t p1, std::int64_t p2, std::int64_t p3) {
          return schmidt_dict(schmidt_decompose(make_charges(q0, p1, p2, p3)));
        },
        py::arg("q0"), py::arg("p1"), py::arg("p2"), py::arg("p3"),
        "Canonical Schmidt form {lambda, phi, norm_factor}.");

  m.def("entropy",
        [](std::int64_t q0, std::int64_t p1, std::int64_t p2, std::int64_t p3) {
          return entropy(make_charges(q0, p1, p2, p3));
        },
        py::arg("q0"), py::arg("p1"), py::arg("p2"), py::arg("p3"),
        "Black-hole entropy 2*pi*sqrt(|p1 p2 p3 q0|).");

  m.def("delta",
        [](std::int64_t p0, std::int64_t p1, std::int64_t p2, std::int64_t p3, std::int64_t q0,
           std::int64_t q1, std::int64_t q2, std::int64_t q3) {
          return delta(FullChargeVector(p0, p1, p2, p3, q0, q1, q2, q3));
        },
        py::arg("p0"), py::arg("p1"), py::arg("p2"), py::arg("p3"), py::arg("q0"), py::arg("q1"),
        py::arg("q2"), py::arg("q3"), "Exact quartic invariant of eight charges.");

  m.def("cayley_hyperdet",
        [](const std::array<std::int64_t, 8>& a) { return cayley_hyperdet(a); }, py::arg("a"),
        "Exact hyperdeterminant of integer amplitudes a0..a7.");

  m.def("three_tangle",
        [](const std::array<std::complex<double>, 8>& a) {
          return three_tangle(PureState3Q(std::array<Complex, 8>(a)));
        },
        py::arg("amplitudes"), "3-tangle of a normalized three-qubit state.");

  m.def("analyze", &analyze_py, py::arg("q0"), py::arg("p1"), py::arg("p2"), py::arg("p3"),
        "Full analysis report as a dict.");

  m.def("analyze_json",
        [](std::int64_t q0, std::int64_t p1, std::int64_t p2, std::int64_t p3) {
          return to_json_line(analyze(make_charges(q0, p1, p2, p3)));
        },
        py::arg("q0"), py::arg("p1"), py::arg("p2"), py::arg("p3"),
        "Full analysis report as a canonical JSON line.");

  m.def("enumerate_dictionaries",
        [] {
          std::vector<std::array<int, 8>> out;
          for (const auto& sv : enumerate_dictionaries()) out.push_back(sv.delta);
          return out;
        },
        "All 16 sign dictionaries as tuples delta_0..delta_7.");

  m.def("verify_swap",
        [](int i, int j) {
          return verify_correspondence(Correspondence::standard().with_magnetic_swap(i, j));
        },
        py::arg("i"), py::arg("j"),
        "Verify the correspondence with magnetic charges i and j exchanged.");

  m.def("run_batch",
        [](const std::string& text, int workers) {
          std::istringstream in(text);
          std::ostringstream out;
          const BatchResult r = run_batch(in, out, workers);
          return py::make_tuple(out.str(), r.records, r.errors);
        },
        py::arg("text"), py::arg("workers") = 1,
        "Batch-analyze JSON-lines/CSV text; returns (output, records, errors).");
}
