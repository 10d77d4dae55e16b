#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fmetric/banach.hpp"
#include "fmetric/derive.hpp"
#include "fmetric/io.hpp"
#include "fmetric/report.hpp"
#include "fmetric/topology.hpp"

namespace py = pybind11;
using namespace fmetric;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
    return py::module_::import("json").attr("loads")(dump_report(j, -1));
}

std::vector<std::vector<double>> rows(const Matrix& d) {
    std::vector<std::vector<double>> out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out[i].assign(d.row(i).begin(), d.row(i).end());
    return out;
}

Matrix from_rows(const std::vector<std::vector<double>>& r) {
    Matrix d(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i].size() != r.size()) throw ParseError("matrix is not square");
        for (std::size_t j = 0; j < r.size(); ++j) d(i, j) = r[i][j];
    }
    return d;
}

Point to_point(const FiniteSpace& s, const py::handle& h) {
    if (py::isinstance<py::str>(h)) return s.resolve(h.cast<std::string>());
    return s.resolve(h.cast<double>());
}

SequenceSample to_sequence(const FiniteSpace& s, const py::sequence& pts, double tol,
                           std::optional<std::size_t> tail_start) {
    std::vector<Point> points;
    for (auto p : pts) points.push_back(to_point(s, p));
    return SequenceSample(std::move(points), tol, tail_start);
}

SubsetMask to_mask(const FiniteSpace& s, const std::optional<std::vector<std::string>>& labels) {
    return labels ? SubsetMask::from_labels(s, *labels) : SubsetMask(s.size(), true);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "F-metric spaces: axiom checks, derived metrics, topology and contractions";

    py::register_exception<Error>(m, "FmetricError", PyExc_ValueError);

    py::class_<Gauge>(m, "Gauge")
        .def_static("log", &Gauge::log, py::arg("alpha") = 0.0)
        .def_static("neg_reciprocal", &Gauge::neg_reciprocal, py::arg("alpha") = 0.0)
        .def_static("table",
                    [](const std::vector<std::pair<double, double>>& knots, double alpha) {
                        std::vector<Knot> k;
                        for (auto [t, f] : knots) k.push_back({t, f});
                        return Gauge::table(std::move(k), alpha);
                    },
                    py::arg("knots"), py::arg("alpha") = 0.0)
        .def_static("load", &load_gauge, py::arg("source"))
        .def("__call__", &Gauge::operator(), py::arg("t"))
        .def_property_readonly("alpha", &Gauge::alpha)
        .def_property_readonly("kind", [](const Gauge& g) { return to_string(g.kind()); })
        .def("with_alpha", &Gauge::with_alpha, py::arg("alpha"))
        .def("__repr__", [](const Gauge& g) {
            return std::string("Gauge(") + to_string(g.kind()) + ", alpha=" + format_number(g.alpha()) + ")";
        });

    m.def("delta_for_epsilon",
          [](const Gauge& g, double eps) { return to_py(to_json(delta_for_epsilon(g, eps))); },
          py::arg("gauge"), py::arg("eps"));

    py::class_<FiniteSpace>(m, "FiniteSpace")
        .def(py::init([](std::vector<std::string> labels, const std::vector<std::vector<double>>& matrix) {
                 return FiniteSpace(std::move(labels), from_rows(matrix));
             }),
             py::arg("labels"), py::arg("matrix"))
        .def_static("load", &load_space, py::arg("source"))
        .def("__len__", &FiniteSpace::size)
        .def_property_readonly("labels", &FiniteSpace::labels)
        .def_property_readonly("kind", &FiniteSpace::kind)
        .def_property_readonly("matrix", [](const FiniteSpace& s) { return rows(s.matrix()); })
        .def("distance",
             [](const FiniteSpace& s, const py::handle& a, const py::handle& b) {
                 return s.distance(to_point(s, a), to_point(s, b));
             },
             py::arg("a"), py::arg("b"))
        .def("__repr__", [](const FiniteSpace& s) {
            return "FiniteSpace(" + s.kind() + ", " + std::to_string(s.size()) + " points)";
        });

    m.def("gen_hybrid", &gen_hybrid, py::arg("n"));
    m.def("gen_exp", &gen_exp, py::arg("n"));
    m.def("gen_square_grid", &gen_square_grid, py::arg("n"));

    m.def("check_D1_D2", [](const FiniteSpace& s) { return to_py(to_json(s, check_D1_D2(s))); });
    m.def("check_D3", [](const FiniteSpace& s, const Gauge& g) { return to_py(to_json(s, check_D3(s, g))); },
          py::arg("space"), py::arg("gauge"));
    m.def("min_alpha",
          [](const FiniteSpace& s, const Gauge& g) { return to_py(to_json(s, min_alpha(s, g))); },
          py::arg("space"), py::arg("gauge"));
    m.def("classify", [](const FiniteSpace& s) { return to_py(to_json(s, classify(s))); });
    m.def("shortest_chain_infimum", [](const FiniteSpace& s) { return rows(shortest_chain_infimum(s)); });
    m.def("derive_metric", [](const FiniteSpace& s) { return to_py(to_json(s, derive_metric(s))); });
    m.def("check_sandwich",
          [](const FiniteSpace& s, const Gauge& g) {
              return to_py(to_json(s, check_sandwich(s, g, derive_metric(s))));
          },
          py::arg("space"), py::arg("gauge"));

    m.def("ball_members",
          [](const FiniteSpace& s, const std::string& center, double r, bool closed) {
              return ball_members(s, {s.index_of(center), r, closed}).labels(s);
          },
          py::arg("space"), py::arg("center"), py::arg("r"), py::arg("closed") = false);
    m.def("is_F_open",
          [](const FiniteSpace& s, const std::vector<std::string>& subset) {
              return to_py(to_json(s, is_F_open(s, SubsetMask::from_labels(s, subset))));
          },
          py::arg("space"), py::arg("subset"));
    m.def("closure_approx",
          [](const FiniteSpace& s, const std::vector<std::string>& subset, double tol) {
              return closure_approx(s, SubsetMask::from_labels(s, subset), tol).labels(s);
          },
          py::arg("space"), py::arg("subset"), py::arg("tol"));
    m.def("greedy_net",
          [](const FiniteSpace& s, double r, const std::optional<std::vector<std::string>>& subset) {
              return to_py(to_json(s, greedy_net(s, to_mask(s, subset), r)));
          },
          py::arg("space"), py::arg("r"), py::arg("subset") = py::none());

    m.def("is_F_convergent_to",
          [](const FiniteSpace& s, const py::sequence& pts, const py::handle& x, double tol,
             std::optional<std::size_t> tail_start) {
              return to_py(to_json(is_F_convergent_to(s, to_sequence(s, pts, tol, tail_start), to_point(s, x))));
          },
          py::arg("space"), py::arg("points"), py::arg("x"), py::arg("tol"), py::arg("tail_start") = py::none());
    m.def("is_F_cauchy",
          [](const FiniteSpace& s, const py::sequence& pts, double tol, std::optional<std::size_t> tail_start) {
              return to_py(to_json(is_F_cauchy(s, to_sequence(s, pts, tol, tail_start))));
          },
          py::arg("space"), py::arg("points"), py::arg("tol"), py::arg("tail_start") = py::none());
    m.def("eventually_constant",
          [](const FiniteSpace& s, const py::sequence& pts, double threshold,
             std::optional<std::size_t> tail_start) {
              return to_py(to_json(eventually_constant(s, to_sequence(s, pts, 1.0, tail_start), threshold)));
          },
          py::arg("space"), py::arg("points"), py::arg("threshold"), py::arg("tail_start") = py::none());

    m.def("iteration_bound", &iteration_bound, py::arg("gauge"), py::arg("k"), py::arg("d0"), py::arg("eps"));
    m.def("solve_fixed_point",
          [](std::function<double(double)> map, double x0, double eps, const Gauge& gauge,
             std::optional<std::function<double(double, double)>> distance, std::optional<std::vector<double>> grid,
             std::optional<double> k, bool trace) {
              auto dist = distance ? *distance : [](double a, double b) { return std::abs(a - b); };
              std::vector<double> g = grid ? *grid : linspace(x0 - std::max(10.0, 2 * std::abs(x0)),
                                                                x0 + std::max(10.0, 2 * std::abs(x0)), 201);
              auto p = real_problem(std::move(dist), std::move(map), std::move(g), gauge);
              p.k = k;
              return to_py(to_json(solve_fixed_point(p, x0, eps, trace), [](double v) { return number(v); }));
          },
          py::arg("map"), py::arg("x0"), py::arg("eps"), py::arg("gauge") = Gauge::log(),
          py::arg("distance") = py::none(), py::arg("grid") = py::none(), py::arg("k") = py::none(),
          py::arg("trace") = false);
}
