#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "pls/builder.hpp"
#include "pls/core.hpp"
#include "pls/feasibility.hpp"
#include "pls/io.hpp"
#include "pls/matching.hpp"
#include "pls/oracle.hpp"
#include "pls/realization.hpp"

namespace py = pybind11;

namespace {

using PyTriple = std::tuple<int, int, int>;
using PyCell = std::tuple<int, int>;

std::vector<PyTriple> to_py(const pls::PartialLatinSquare& p) {
    std::vector<PyTriple> out;
    out.reserve(p.volume());
    for (const auto& t : p) {
        out.emplace_back(t.row, t.col, t.sym);
    }
    return out;
}

pls::PartialLatinSquare from_py(const std::vector<PyTriple>& ts) {
    std::vector<pls::Triple> out;
    out.reserve(ts.size());
    for (const auto& [r, c, s] : ts) {
        out.push_back({r, c, s});
    }
    return pls::validate(out);
}

std::vector<PyCell> cells_to_py(const pls::CellSet& b) {
    std::vector<PyCell> out;
    for (const auto& c : b.cells()) {
        out.emplace_back(c.row, c.col);
    }
    return out;
}

pls::CellSet cells_from_py(const std::vector<PyCell>& cells, std::optional<int> rows, std::optional<int> cols) {
    std::vector<pls::Cell> out;
    int r = 0;
    int c = 0;
    for (const auto& [i, j] : cells) {
        out.push_back({i, j});
        r = std::max(r, i);
        c = std::max(c, j);
    }
    return pls::CellSet(rows.value_or(r), cols.value_or(c), std::move(out));
}

pls::CoordPermutation parse_perm(const std::string& spec) {
    if (spec.size() != 3) {
        throw pls::PreconditionViolated("permutation must be three letters from r, c, s");
    }
    pls::CoordPermutation perm{};
    for (std::size_t k = 0; k < 3; ++k) {
        switch (spec[k]) {
        case 'r': perm[k] = pls::Coord::Row; break;
        case 'c': perm[k] = pls::Coord::Col; break;
        case 's': perm[k] = pls::Coord::Sym; break;
        default: throw pls::PreconditionViolated("permutation letters must be r, c or s");
        }
    }
    return perm;
}

py::dict profile_to_py(const pls::ParameterProfile& p) {
    py::dict d;
    d["row_params"] = p.row_params;
    d["col_params"] = p.col_params;
    d["sym_params"] = p.sym_params;
    d["volume"] = p.volume;
    d["r"] = p.rows;
    d["c"] = p.cols;
    d["s"] = p.symbols;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Partial Latin squares with prescribed row, column and symbol parameters";

    auto base = py::register_exception<pls::Error>(m, "Error", PyExc_ValueError);
    py::register_exception<pls::ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<pls::PreconditionViolated>(m, "PreconditionViolated", base.ptr());
    py::register_exception<pls::InfeasibleError>(m, "InfeasibleError", base.ptr());
    py::register_exception<pls::BudgetExceeded>(m, "BudgetExceeded", base.ptr());
    py::register_exception<pls::NoSaturation>(m, "NoSaturation", base.ptr());
    py::register_exception<pls::FormatError>(m, "FormatError", base.ptr());

    py::class_<pls::Condition>(m, "Condition")
        .def_readonly("id", &pls::Condition::id)
        .def_readonly("statement", &pls::Condition::statement)
        .def_readonly("satisfied", &pls::Condition::satisfied)
        .def_readonly("witness", &pls::Condition::witness)
        .def("__repr__", [](const pls::Condition& c) {
            return "<Condition " + c.id + (c.satisfied ? " ok>" : " FAIL>");
        });

    py::class_<pls::FeasibilityReport>(m, "FeasibilityReport")
        .def_readonly("feasible", &pls::FeasibilityReport::feasible)
        .def_readonly("conditions", &pls::FeasibilityReport::conditions)
        .def("violated", &pls::FeasibilityReport::violated)
        .def("__bool__", [](const pls::FeasibilityReport& r) { return r.feasible; })
        .def("__str__", &pls::format_report);

    m.def("validate", [](const std::vector<PyTriple>& ts) { return to_py(from_py(ts)); }, py::arg("triples"),
          "Sorted, deduplicated triples if they form a partial Latin square.");
    m.def("parameters_of", [](const std::vector<PyTriple>& ts) { return profile_to_py(pls::parameters_of(from_py(ts))); },
          py::arg("triples"));
    m.def("normalize", [](const std::vector<PyTriple>& ts) { return to_py(pls::normalize(from_py(ts))); },
          py::arg("triples"));
    m.def("conjugate",
          [](const std::vector<PyTriple>& ts, const std::string& perm) {
              return to_py(pls::conjugate(from_py(ts), parse_perm(perm)));
          },
          py::arg("triples"), py::arg("perm"), "perm lists source coordinates per slot, e.g. \"scr\".");

    m.def("dominance_check",
          [](const std::vector<int>& n, const std::vector<int>& mm) {
              const auto d = pls::dominance_check(n, mm);
              return py::make_tuple(d.holds, d.k, d.l);
          },
          py::arg("n"), py::arg("m"));
    m.def("check_construction",
          [](const std::vector<int>& n, const std::vector<int>& m, int s) { return pls::check_construction(n, m, s); },
          py::arg("n"), py::arg("m"), py::arg("s"));
    m.def("check_row_params", [](const std::vector<int>& n, int c, int s) { return pls::check_row_params(n, c, s); },
          py::arg("n"), py::arg("c"), py::arg("s"));
    m.def("check_sizes", &pls::check_sizes, py::arg("r"), py::arg("c"), py::arg("s"), py::arg("v"));

    m.def("realize_degree_matrix",
          [](const std::vector<int>& n, const std::vector<int>& mm) {
              return cells_to_py(pls::realize_degree_matrix(n, mm));
          },
          py::arg("n"), py::arg("m"));
    m.def("fill_symbols",
          [](const std::vector<PyCell>& cells, std::optional<int> rows, std::optional<int> cols) {
              return to_py(pls::fill_symbols(cells_from_py(cells, rows, cols)));
          },
          py::arg("cells"), py::arg("rows") = py::none(), py::arg("cols") = py::none());
    m.def("split_symbols", [](const std::vector<PyTriple>& ts, int s) { return to_py(pls::split_symbols(from_py(ts), s)); },
          py::arg("triples"), py::arg("s"));

    m.def("build_theorem",
          [](const std::vector<int>& n, const std::vector<int>& mm, int s) { return to_py(pls::build_theorem(n, mm, s)); },
          py::arg("n"), py::arg("m"), py::arg("s"));
    m.def("build_proposition",
          [](const std::vector<int>& n, int c, int s) { return to_py(pls::build_proposition(n, c, s)); }, py::arg("n"),
          py::arg("c"), py::arg("s"));
    m.def("build_corollary", [](int r, int c, int s, int v) { return to_py(pls::build_corollary(r, c, s, v)); },
          py::arg("r"), py::arg("c"), py::arg("s"), py::arg("v"));

    m.def(
        "exists_full",
        [](std::optional<std::vector<int>> rows, std::optional<std::vector<int>> cols,
           std::optional<std::vector<int>> syms, std::optional<int> r, std::optional<int> c, std::optional<int> s,
           std::optional<int> v, int max_volume, int max_rows, int max_cols, int max_symbols,
           long long max_nodes) -> std::optional<std::vector<PyTriple>> {
            pls::OracleQuery q{rows, cols, syms, r, c, s, v};
            pls::OracleBudget b{max_volume, max_rows, max_cols, max_symbols, max_nodes};
            py::gil_scoped_release release;
            auto w = pls::exists_full(q, b);
            if (!w) {
                return std::nullopt;
            }
            return to_py(*w);
        },
        py::kw_only(), py::arg("row_params") = py::none(), py::arg("col_params") = py::none(),
        py::arg("sym_params") = py::none(), py::arg("r") = py::none(), py::arg("c") = py::none(),
        py::arg("s") = py::none(), py::arg("v") = py::none(), py::arg("max_volume") = 12, py::arg("max_rows") = 6,
        py::arg("max_cols") = 6, py::arg("max_symbols") = 6, py::arg("max_nodes") = 50'000'000LL,
        "Witness triples, or None when no PLS meets the constraints.");

    m.def(
        "enumerate",
        [](int r, int c, int s, int v) {
            std::vector<std::vector<PyTriple>> out;
            for (const auto& p : pls::enumerate_all({r, c, s, v})) {
                out.push_back(to_py(p));
            }
            return out;
        },
        py::arg("r"), py::arg("c"), py::arg("s"), py::arg("v"));

    m.def("to_document", [](const std::vector<PyTriple>& ts) { return pls::to_document(from_py(ts)); },
          py::arg("triples"));
    m.def("parse_document", [](const std::string& text) { return to_py(pls::parse_document(text)); },
          py::arg("text"));
    m.def("to_grid", [](const std::vector<PyTriple>& ts) { return pls::to_grid(from_py(ts)); }, py::arg("triples"));
}
