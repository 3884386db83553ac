#include "tgeo/error.hpp"
#include "tgeo/render.hpp"
#include "tgeo/scenario.hpp"

#include <pybind11/pybind11.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace tgeo;

namespace {

// Everything crosses the boundary as JSON text: the schemas are exactly the
// ones the command line uses, so python callers and shell callers share one
// vocabulary (see ternarygeo/__init__.py for dict-level wrappers).

std::string py_run_scenario(const std::string& text, std::optional<u64> seed,
                            std::optional<u64> trials) {
    ScenarioResult res = run_scenario(parse_json_text(text, "scenario"), seed, trials);
    return json_dump(res.output);
}

std::string py_run_laws(const std::string& text, std::optional<u64> seed,
                        std::optional<u64> trials) {
    ScenarioResult res = run_laws_item(parse_json_text(text, "laws item"), seed, trials);
    return json_dump(res.output);
}

std::string py_ternary_eval(const std::string& text) {
    return json_dump(ternary_eval_json(parse_json_text(text, "ternary eval")));
}

std::string py_gamma_eval(const std::string& text, const std::string& method) {
    return json_dump(gamma_eval_json(parse_json_text(text, "gamma eval"), method));
}

std::string py_render(const std::string& text) {
    Json in = parse_json_text(text, "render spec");
    RenderSpec spec = default_render_spec();
    ScalarKind rat = ScalarKind::rat();
    if (in.contains("x"))
        spec.x = point_from_json(in.at("x"), rat, 2);
    if (in.contains("y"))
        spec.y = point_from_json(in.at("y"), rat, 2);
    if (in.contains("z"))
        spec.z = point_from_json(in.at("z"), rat, 2);
    spec.view = in.value("view", spec.view);
    spec.coincident = in.value("coincident", spec.coincident);
    spec.width = in.value("width", spec.width);
    spec.height = in.value("height", spec.height);
    RenderResult res = render_construction(spec);
    return json_dump(Json{{"svg", res.svg}, {"w", point_to_json(res.w)}});
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact models of the two-hyperplane ternary operation: scenario "
              "runner, one-shot evaluators and the SVG construction figure. "
              "All functions exchange JSON text.";

    // translators run newest-first, so the base class goes in first
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<Precondition>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.attr("__version__") = "0.1.0";

    m.def("run_scenario", &py_run_scenario, py::arg("text"), py::arg("seed") = py::none(),
          py::arg("trials") = py::none(),
          "Run a scenario document; returns the report JSON (key \"ok\" is the verdict).");
    m.def("run_laws", &py_run_laws, py::arg("text"), py::arg("seed") = py::none(),
          py::arg("trials") = py::none(),
          "Run one {structure, laws, ...} item; returns the report JSON.");
    m.def("ternary_eval", &py_ternary_eval, py::arg("text"),
          "Evaluate (x y z) from a lattice or chart description; returns JSON.");
    m.def("gamma_eval", &py_gamma_eval, py::arg("text"), py::arg("method") = "",
          "Evaluate the five-slot submodule map; returns JSON.");
    m.def("render", &py_render, py::arg("text"),
          "Render the two-line construction; returns {\"svg\", \"w\"} as JSON.");
}
