#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fermatlab/runs.hpp"

namespace py = pybind11;

namespace {

using namespace fermatlab;

Budgets make_budgets(std::uint64_t max_spairs, std::uint64_t max_matrix_cells,
                     std::uint64_t max_rational_cells) {
    Budgets b;
    if (max_spairs) b.max_spairs = max_spairs;
    if (max_matrix_cells) b.max_matrix_cells = max_matrix_cells;
    if (max_rational_cells) b.max_rational_cells = max_rational_cells;
    return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact checks for Fermat-type flat arrangements (JSON-string API)";

    m.def(
        "lemmas",
        [](std::uint32_t k_max, const std::vector<std::uint32_t>& n_set) {
            return run_lemmas(k_max, n_set, false).doc.dump();
        },
        py::arg("k_max") = 4, py::arg("n_set") = std::vector<std::uint32_t>{3, 4, 5});

    m.def(
        "flats",
        [](std::uint32_t N, std::uint32_t n) {
            return run_flats(FermatConfig{N, n}, false).doc.dump();
        },
        py::arg("N"), py::arg("n"));

    m.def(
        "gens",
        [](std::uint32_t N, std::uint32_t n) {
            return run_gens(FermatConfig{N, n}, false).doc.dump();
        },
        py::arg("N"), py::arg("n"));

    m.def(
        "contain",
        [](std::uint32_t N, std::uint32_t n, std::uint32_t m_, std::uint32_t r,
           const std::string& field, bool nf_crosscheck, std::uint64_t max_spairs,
           std::uint64_t max_matrix_cells, std::uint64_t max_rational_cells) {
            return run_contain(FermatConfig{N, n}, m_, r, parse_field_spec(field), nf_crosscheck,
                               make_budgets(max_spairs, max_matrix_cells, max_rational_cells),
                               false)
                .doc.dump();
        },
        py::arg("N"), py::arg("n"), py::arg("m") = 3, py::arg("r") = 2, py::arg("field") = "auto",
        py::arg("nf_crosscheck") = false, py::arg("max_spairs") = 0,
        py::arg("max_matrix_cells") = 0, py::arg("max_rational_cells") = 0);

    m.def(
        "structure",
        [](std::uint32_t N, std::uint32_t n, const std::string& field, std::uint64_t max_spairs,
           std::uint64_t max_matrix_cells, std::uint64_t max_rational_cells) {
            return run_structure(FermatConfig{N, n}, parse_field_spec(field),
                                 make_budgets(max_spairs, max_matrix_cells, max_rational_cells),
                                 false)
                .doc.dump();
        },
        py::arg("N"), py::arg("n"), py::arg("field") = "auto", py::arg("max_spairs") = 0,
        py::arg("max_matrix_cells") = 0, py::arg("max_rational_cells") = 0);

    m.def(
        "prooftrace",
        [](std::uint32_t N, std::uint32_t n, bool uniqueness) {
            return run_prooftrace(FermatConfig{N, n}, uniqueness, false).doc.dump();
        },
        py::arg("N"), py::arg("n"), py::arg("uniqueness") = false);

    m.def(
        "cas_export_flats",
        [](std::uint32_t N, std::uint32_t n) { return cas_export_flats(FermatConfig{N, n}); },
        py::arg("N"), py::arg("n"));
    m.def(
        "cas_export_gens",
        [](std::uint32_t N, std::uint32_t n) { return cas_export_gens(FermatConfig{N, n}); },
        py::arg("N"), py::arg("n"));
    m.def(
        "cas_export_contain",
        [](std::uint32_t N, std::uint32_t n, std::uint32_t r) {
            return cas_export_contain(FermatConfig{N, n}, r);
        },
        py::arg("N"), py::arg("n"), py::arg("r") = 2);
}
