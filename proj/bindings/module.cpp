#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bivage/cli.hpp"
#include "bivage/harness.hpp"

namespace py = pybind11;
using namespace bivage;

namespace {

KendallCurve curve_by_route(const SemiCopula& cop, const std::string& route,
                            const std::string& marginal_key, int n) {
    auto grid = kendall_default_grid(n);
    if (route == "sup") return kendall_curve_sup(cop, grid);
    if (route == "closed") return kendall_curve_closed(cop.generator(), grid);
    if (route == "integral") return kendall_curve_integral(cop, grid);
    if (route == "transport-B") {
        auto m = make_marginal(marginal_key);
        KendallCurve base = cop.has_generator()
                                ? kendall_curve_closed(cop.generator(), grid)
                                : kendall_curve_integral(cop, grid);
        return kendall_curve_transported(base, m, grid);
    }
    throw ParseError("unknown route '" + route + "'");
}

std::string run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    if (code != 0) throw Error("cli exited with " + std::to_string(code) + ": " + err.str());
    return out.str();
}

} // namespace

PYBIND11_MODULE(_bivage, m) {
    m.doc() = "semi-copulas, Kendall distributions, and bivariate ageing";
    m.attr("__version__") = cli::kToolVersion;

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<NotPseudoArchimedean>(m, "NotPseudoArchimedeanError");
    py::register_exception<SectionInversionFailure>(m, "SectionInversionError");

    py::class_<SurvivalModel>(m, "SurvivalModel")
        .def("survival", &SurvivalModel::survival)
        .def("density", &SurvivalModel::density)
        .def("failure_rate", &SurvivalModel::failure_rate)
        .def("cumulative_hazard", &SurvivalModel::cumulative_hazard)
        .def("inverse_survival", &SurvivalModel::inverse_survival)
        .def_property_readonly("label", &SurvivalModel::label);

    py::class_<SemiCopula>(m, "SemiCopula")
        .def("__call__", [](const SemiCopula& s, double u, double v) { return s(u, v); })
        .def("section_sup_inverse", &SemiCopula::section_sup_inverse)
        .def_property_readonly("label", &SemiCopula::label)
        .def_property_readonly("kind",
                               [](const SemiCopula& s) { return to_string(s.kind()); });

    m.def("marginal", &make_marginal, py::arg("key"),
          "survival model from a family key, e.g. 'weibull:2'");
    m.def("copula", &make_copula, py::arg("key"),
          "semi-copula from a family key, e.g. 'clayton:1'");

    m.def("kendall_product", &kendall_product, py::arg("t"));
    m.def(
        "kendall",
        [](const std::string& copula_key, double t, const std::string& route,
           const std::string& marginal_key) {
            auto cop = make_copula(copula_key);
            if (route == "sup") return kendall_partition_sup(cop, t).value;
            if (route == "closed") return kendall_archimedean(cop.generator(), t);
            if (route == "integral") return kendall_integral(cop, t);
            if (route == "transport-B") {
                auto grid = kendall_default_grid(19);
                KendallCurve base = cop.has_generator()
                                        ? kendall_curve_closed(cop.generator(), grid)
                                        : kendall_curve_integral(cop, grid);
                return transport_kendall_to_ageing(base, make_marginal(marginal_key), t);
            }
            throw ParseError("unknown route '" + route + "'");
        },
        py::arg("copula"), py::arg("t"), py::arg("route") = "closed",
        py::arg("marginal") = "");
    m.def(
        "kendall_curve",
        [](const std::string& copula_key, const std::string& route, int n,
           const std::string& marginal_key) {
            auto k = curve_by_route(make_copula(copula_key), route, marginal_key, n);
            return py::make_tuple(k.grid, k.values);
        },
        py::arg("copula"), py::arg("route") = "closed", py::arg("n") = 19,
        py::arg("marginal") = "");

    m.def(
        "reconstruct_generator_table",
        [](const std::string& copula_key, double t0, int n) {
            auto cop = make_copula(copula_key);
            auto grid = kendall_default_grid(n);
            KendallCurve k;
            if (cop.has_generator()) {
                k = kendall_curve_closed(cop.generator(), grid);
            } else {
                try {
                    k = kendall_curve_integral(cop, grid);
                } catch (const SectionInversionFailure&) {
                    k = kendall_curve_sup(cop, grid);
                }
            }
            auto gen = reconstruct_generator(k, t0);
            std::vector<double> phi, err;
            for (size_t i = 0; i < k.grid.size(); ++i) {
                phi.push_back(gen.phi(k.grid[i]));
                err.push_back(std::abs(kendall_archimedean(gen, k.grid[i]) - k.values[i]));
            }
            return py::make_tuple(k.grid, phi, err);
        },
        py::arg("copula"), py::arg("t0") = 0.5, py::arg("n") = 99);

    m.def(
        "ageing_function_value",
        [](const std::string& copula_key, const std::string& marginal_key, double u,
           double v) {
            BivariateModel mdl(make_copula(copula_key), make_marginal(marginal_key));
            return ageing_function(mdl)(u, v);
        },
        py::arg("copula"), py::arg("marginal"), py::arg("u"), py::arg("v"));

    m.def(
        "posterior_weights",
        [](const std::vector<double>& rates, const std::vector<double>& weights,
           double t) {
            std::vector<SurvivalModel> comps;
            for (double r : rates) comps.push_back(SurvivalModel::exponential(r));
            return posterior_weights(MixtureModel(weights, comps), t);
        },
        py::arg("rates"), py::arg("weights"), py::arg("t"));
    m.def(
        "predictive_failure_rate",
        [](const std::vector<double>& rates, const std::vector<double>& weights,
           double t) {
            std::vector<SurvivalModel> comps;
            for (double r : rates) comps.push_back(SurvivalModel::exponential(r));
            return predictive_failure_rate(MixtureModel(weights, comps), t);
        },
        py::arg("rates"), py::arg("weights"), py::arg("t"));

    // JSON-producing conveniences routed through the CLI surface
    m.def("classify_json", [](const std::string& copula, const std::string& marginal) {
        return run_cli({"classify", "--copula", copula, "--marginal", marginal});
    });
    m.def("validate_json", [](const std::string& copula) {
        std::ostringstream out, err;
        int code = cli::run({"validate", "--copula", copula}, out, err);
        return py::make_tuple(code, out.str());
    });
    m.def("verify_builtin_jsonl", []() { return run_cli({"verify", "builtin"}); });
}
