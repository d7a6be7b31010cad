#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vertexkit/vertexkit.hpp"

namespace py = pybind11;
using namespace py::literals;

namespace {

using Rows = std::vector<std::vector<std::string>>;

Rows to_rows(const vk::HMatrix& h) {
    Rows out;
    for (std::size_t k = 1; k < h.horizon(); ++k) {
        std::vector<std::string> row;
        for (std::size_t j = 1; j <= k; ++j) row.push_back(h(k, j).get_str());
        out.push_back(std::move(row));
    }
    return out;
}

vk::HMatrix from_rows(const Rows& rows) {
    std::vector<std::vector<vk::Rational>> r;
    for (const auto& row : rows) {
        std::vector<vk::Rational> v;
        for (const auto& s : row) v.push_back(vk::parse_rational(s));
        r.push_back(std::move(v));
    }
    return vk::HMatrix::from_rows(std::move(r));
}

std::map<std::pair<std::size_t, std::size_t>, std::string> to_dict(const vk::CertificateSet& lam) {
    std::map<std::pair<std::size_t, std::size_t>, std::string> out;
    for (const auto& e : lam.nonzeros()) out[{e.k, e.j}] = e.value.get_str();
    return out;
}

py::dict trace_dict(const vk::IterationTrace& t) {
    std::vector<std::size_t> iter;
    std::vector<double> res, bound;
    std::vector<bool> g;
    for (const auto& r : t.records) {
        iter.push_back(r.iter);
        res.push_back(r.residual_sq);
        g.push_back(r.guaranteed);
        bound.push_back(r.bound);
    }
    return py::dict("label"_a = t.label, "iter"_a = iter, "residual_sq"_a = res, "guaranteed"_a = g, "bound"_a = bound);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact optimal fixed-point algorithm vertices and their certificates";

    py::register_exception<vk::NotAVertexError>(m, "NotAVertexError", PyExc_ValueError);
    py::register_exception<vk::NonOptimalInputError>(m, "NonOptimalInputError", PyExc_ValueError);
    py::register_exception<vk::CrossingDiagramError>(m, "CrossingDiagramError", PyExc_ValueError);

    m.def("vertex_from_diagram", [](const std::vector<std::size_t>& parent) {
        return to_rows(vk::vertex_from_diagram(vk::make_diagram(parent)));
    }, "parent"_a);
    m.def("diagram_from_vertex", [](const Rows& h) { return vk::diagram_from_vertex(from_rows(h)).parent; }, "h"_a);
    m.def("enumerate_diagrams", [](std::size_t n, bool basic_only) {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& d : vk::enumerate_diagrams(n, basic_only)) out.push_back(d.parent);
        return out;
    }, "n"_a, "basic_only"_a = false);
    m.def("render_ascii", [](const std::vector<std::size_t>& parent) { return vk::render_ascii(vk::make_diagram(parent)); }, "parent"_a);

    m.def("is_optimal", [](const Rows& h) { return vk::is_optimal(from_rows(h)); }, "h"_a);
    m.def("check_invariance", [](const Rows& h) { return vk::check_invariance(from_rows(h)); }, "h"_a);
    m.def("certificates", [](const Rows& h) { return to_dict(vk::certificates(from_rows(h))); }, "h"_a);
    m.def("rho", [](const Rows& h) { return vk::rho(from_rows(h)).get_str(); }, "h"_a);

    m.def("glue", [](const Rows& a, const Rows& b) { return to_rows(vk::glue_h(from_rows(a), from_rows(b))); }, "left"_a, "right"_a);
    m.def("anti_transpose", [](const Rows& h) { return to_rows(vk::anti_transpose(from_rows(h))); }, "h"_a);
    m.def("dualize_diagram", [](const std::vector<std::size_t>& parent) {
        return vk::dualize_basic_diagram(vk::make_diagram(parent)).parent;
    }, "parent"_a);

    m.def("ohm_hmatrix", [](std::size_t s) { return to_rows(vk::ohm_hmatrix(s)); }, "size"_a);
    m.def("dual_ohm_hmatrix", [](std::size_t s) { return to_rows(vk::dual_ohm_hmatrix(s)); }, "size"_a);
    m.def("rdo_hmatrix", [](std::size_t p, std::size_t s) { return to_rows(vk::rdo_hmatrix(vk::Schedule::period(p), s)); }, "period"_a, "size"_a);
    m.def("fsdm_hmatrix", [](std::size_t n) { return to_rows(vk::fsdm_hmatrix(n)); }, "n_power"_a);

    m.def("run", [](const std::string& alg, std::size_t horizon, const std::string& op, double gamma, double delta, double radius,
                    std::uint64_t seed) {
        vk::ExperimentConfig cfg;
        cfg.horizon = horizon;
        cfg.algorithms = {alg};
        cfg.operators = {vk::OperatorConfig{op, op, gamma, delta, radius}};
        cfg.seed = seed;
        vk::ExperimentResult r;
        {
            py::gil_scoped_release release;
            r = vk::run_experiment(cfg, false);
        }
        const auto& cell = r.cells.front();
        if (!cell.error.empty()) throw std::runtime_error(cell.error);
        return trace_dict(cell.trace);
    }, "alg"_a, "horizon"_a, "op"_a = "worst_case", "gamma"_a = 1.0, "delta"_a = 0.0, "radius"_a = 1.0, "seed"_a = 0);

    m.def("run_experiment", [](const std::string& config_json, const std::string& output_dir) {
        vk::ExperimentConfig cfg = vk::parse_config(vk::json::parse(config_json));
        if (!output_dir.empty()) cfg.output_dir = output_dir;
        vk::ExperimentResult r;
        {
            py::gil_scoped_release release;
            r = vk::run_experiment(cfg, true);
        }
        return r.manifest.dump();
    }, "config_json"_a, "output_dir"_a = "");
}
