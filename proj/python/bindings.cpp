// Thin bindings: every result crosses the boundary as a JSON string.
#include <pybind11/pybind11.h>

#include "modcat/fusion.hpp"
#include "modcat/io.hpp"
#include "modcat/quantum.hpp"
#include "modcat/symbols.hpp"
#include "modcat/verify.hpp"

namespace py = pybind11;
using namespace modcat;

namespace {

std::string report(const Report& r) { return to_json(r).dump(); }

std::string quantum(const std::string& type, int rank, int d) {
    QuantumContext ctx = make_context(parse_lie_type(type), rank, d);
    return datum_to_json(quantum_datum(ctx, enumerate_simples(ctx))).dump();
}

std::string fusion(int n, int d, int u) {
    ModularDatum md = malle_datum(n, d, u);
    auto syms = enumerate_symbols(n, d);
    auto sp = special_symbols(n, d).first;
    auto unit = static_cast<std::size_t>(std::find(syms.begin(), syms.end(), sp) - syms.begin());
    return fusion_to_json(verlinde(md, unit)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact modular data of Malle families and quantum doubles";
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<QuantumError>(m, "QuantumError", PyExc_ValueError);
    py::register_exception<SymbolError>(m, "SymbolError", PyExc_ValueError);

    m.def("malle_datum", [](int n, int d, int u) { return datum_to_json(malle_datum(n, d, u)).dump(); },
          py::arg("n"), py::arg("d"), py::arg("u") = 1);
    m.def("malle_csv", [](int n, int d) { return datum_to_csv(malle_datum(n, d)); }, py::arg("n"), py::arg("d"));
    m.def("malle_latex", [](int n, int d) { return datum_to_latex(malle_datum(n, d)); }, py::arg("n"), py::arg("d"));
    m.def("quantum_datum", &quantum, py::arg("type"), py::arg("rank"), py::arg("d"));
    m.def("fusion_ring", &fusion, py::arg("n"), py::arg("d"), py::arg("u") = 1);
    m.def("symbol_count", &psi_sharp_count, py::arg("n"), py::arg("d"));
    m.def("parse_cyc", [](const std::string& s) { return cyc_to_json(parse_cyc(s)).dump(); }, py::arg("text"));

    py::call_guard<py::gil_scoped_release> nogil;
    m.def("verify_main_theorem", [](int n, int d, int jobs) { return report(verify_main_theorem(n, d, jobs)); },
          py::arg("n"), py::arg("d"), py::arg("jobs") = 0, nogil);
    m.def("verify_ennola", [](int n, int d) { return report(verify_ennola(n, d)); }, py::arg("n"), py::arg("d"), nogil);
    m.def("verify_counts", [](int n, int d) { return report(verify_counts(n, d)); }, py::arg("n"), py::arg("d"), nogil);
    m.def("verify_sl2z", [](int n, int d) { return report(verify_sl2z(n, d)); }, py::arg("n"), py::arg("d"), nogil);
    m.def("verify_cuntz", [](int n, int d) { return report(verify_cuntz(n, d)); }, py::arg("n"), py::arg("d"), nogil);
    m.def("verify_cyclic3", [] { return report(verify_cyclic3()); }, nogil);
    m.def("verify_g4", [] { return report(verify_g4()); }, nogil);
    m.def("verify_g27", [] { return report(verify_g27()); }, nogil);
    m.def("verify_g24", [] { return report(verify_g24()); }, nogil);
}
