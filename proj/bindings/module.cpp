#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "runcount/checks.hpp"
#include "runcount/engine.hpp"
#include "runcount/errors.hpp"
#include "runcount/euler.hpp"
#include "runcount/oracle.hpp"
#include "runcount/recipe_doc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace runcount;

namespace {

py::int_ bigToPy(const BigInt& v) {
    return py::cast<py::int_>(
        py::module_::import("builtins").attr("int")(v.str()));
}

py::list polyToPy(const PolyT& p) {
    py::list coeffs;
    if (p.degree() < 0) {
        coeffs.append(py::int_(0));
        return coeffs;
    }
    for (int k = 0; k <= p.degree(); ++k)
        coeffs.append(bigToPy(toInteger(p.coeff(k))));
    return coeffs;
}

py::list egfRows(const Series& s) {
    py::list rows;
    for (int n = 0; n <= s.bound; ++n) rows.append(polyToPy(egfCoefficient(s, n)));
    return rows;
}

Hom requireEgfHom(const std::string& name) {
    const Hom h = homFromName(name);
    if (h == Hom::Word)
        throw DomainViolation(
            "python bindings expose the exponential scalings; "
            "use the command-line tool for word-level series");
    return h;
}

Perm toPerm(const std::vector<int>& letters) {
    requirePerm(letters);
    return letters;
}

} // namespace

PYBIND11_MODULE(_runcount, m) {
    m.doc() = "Exact enumeration of permutations by increasing-run structure";

    m.def("recipe_names", [] { return recipeNames(); },
          "Names of the built-in counting recipes.");

    m.def(
        "recipe_description",
        [](const std::string& name) { return recipeSpec(name).description; },
        py::arg("name"));

    m.def(
        "stat_series",
        [](const std::string& name, int n, std::optional<std::string> hom,
           int m_) {
            std::optional<Hom> override;
            if (hom) override = requireEgfHom(*hom);
            return egfRows(runStatRecipe(name, n, override, m_));
        },
        py::arg("name"), py::arg("n"), py::arg("hom") = std::nullopt,
        py::arg("m") = 3,
        "Rows 0..n of the statistic polynomial table: row k lists the "
        "coefficients of t^0, t^1, ... summed over all k-permutations.");

    m.def(
        "compute_network",
        [](const std::string& jsonText, const std::string& hom, int n) {
            return egfRows(
                networkSeries(parseNetwork(jsonText), requireEgfHom(hom), n));
        },
        py::arg("network_json"), py::arg("hom") = "perm", py::arg("n") = 12,
        "Evaluate a run-network document and return its table rows.");

    m.def(
        "eval_recipe_document",
        [](const std::string& jsonText, int n, const std::string& baseDir) {
            return egfRows(evalRecipeDocument(parseRecipeDocument(jsonText, baseDir), n));
        },
        py::arg("document_json"), py::arg("n") = 12, py::arg("base_dir") = "",
        "Evaluate a recipe document (expression tree over networks).");

    m.def(
        "stat_polynomial",
        [](const std::string& stat, int n, int cap) {
            return polyToPy(statPolynomial(statNameFromString(stat), n, cap));
        },
        py::arg("stat"), py::arg("n"), py::arg("cap") = kStatCapDefault,
        "Brute-force distribution of a statistic over all n-permutations.");

    m.def(
        "predicate_count",
        [](const std::string& pred, int n, int m_) {
            return predicateCount(predNameFromString(pred), n, m_);
        },
        py::arg("pred"), py::arg("n"), py::arg("m") = 3,
        "Brute-force count of n-permutations satisfying a predicate.");

    m.def(
        "ribbon_count",
        [](const std::vector<int>& parts) {
            return bigToPy(ribbonCount(Composition{parts}));
        },
        py::arg("parts"),
        "Permutations whose increasing runs have exactly these lengths.");

    m.def(
        "euler_numbers",
        [](int n) {
            py::list out;
            const EulerTable table = eulerNumbers(n);
            for (int k = 0; k <= n; ++k) out.append(bigToPy(table.at(k)));
            return out;
        },
        py::arg("n"), "Zigzag numbers E_0..E_n (secant/tangent coefficients).");

    m.def(
        "shift_map", [](const std::vector<int>& p) { return shiftMap(toPerm(p)); },
        py::arg("perm"));
    m.def(
        "pkshift_map",
        [](const std::vector<int>& p) { return pkshiftMap(toPerm(p)); },
        py::arg("perm"));
    m.def(
        "append_map",
        [](const std::vector<int>& p, int letter) {
            return appendMap(toPerm(p), letter);
        },
        py::arg("perm"), py::arg("letter"));

    m.def(
        "check",
        [](const std::string& suite, std::optional<int> n, std::optional<int> cap,
           const std::string& data) {
            CheckReport report;
            if (suite == "tables")
                report = checkTables(data);
            else if (suite == "oracle")
                report = checkOracle(cap.value_or(8));
            else if (suite == "identities")
                report = checkIdentities(n.value_or(12));
            else if (suite == "bijections")
                report = checkBijections(n.value_or(9));
            else
                throw UnknownLabel("unknown check suite '" + suite + "'");
            return py::make_tuple(report.allPassed(), formatReport(report));
        },
        py::arg("suite"), py::arg("n") = std::nullopt,
        py::arg("cap") = std::nullopt, py::arg("data") = "",
        "Run a verification suite; returns (passed, report_text).");
}
