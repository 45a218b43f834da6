#include <optional>
#include <stdexcept>
#include <string>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "napoleon/alignment.hpp"
#include "napoleon/fermat.hpp"
#include "napoleon/frame.hpp"
#include "napoleon/transforms.hpp"
#include "napoleon/types.hpp"

namespace py = pybind11;

namespace {

using napoleon::AlignmentResult;
using napoleon::Kind;
using napoleon::LagrangeDiagnostics;
using napoleon::Point;
using napoleon::Triple;

// Triples cross the boundary as (3, d) vertex matrices.
Triple to_triple(const Eigen::MatrixXd& vertices) {
    return Triple::from_rows(vertices);
}

Kind to_kind(const std::string& name) {
    if (name == "inner") return Kind::inner;
    if (name == "outer") return Kind::outer;
    throw std::invalid_argument("kind must be \"inner\" or \"outer\", got \"" +
                                name + "\"");
}

std::optional<Eigen::MatrixXd> alternate_rows(const AlignmentResult& res) {
    if (!res.alternate_y) return std::nullopt;
    return res.alternate_y->rows();
}

}  // namespace

PYBIND11_MODULE(_napoleon, m) {
    m.doc() = "Equilateral constructions on vertex triples in R^d";

#ifdef NAPOLEON_VERSION
    m.attr("__version__") = NAPOLEON_VERSION;
#else
    m.attr("__version__") = "dev";
#endif

    py::register_exception<napoleon::NoConvergence>(m, "NoConvergence",
                                                    PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const napoleon::NoConvergence&) {
            throw;  // handled by the registration above
        } catch (const napoleon::Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<AlignmentResult>(m, "AlignmentResult")
        .def_property_readonly(
            "vertices", [](const AlignmentResult& r) { return r.y.rows(); })
        .def_readonly("objective", &AlignmentResult::objective)
        .def_readonly("branch_k", &AlignmentResult::branch_k)
        .def_readonly("unique", &AlignmentResult::unique)
        .def_readonly("inner_objective", &AlignmentResult::objective_pos)
        .def_readonly("outer_objective", &AlignmentResult::objective_neg)
        .def_property_readonly("alternate_vertices", &alternate_rows)
        .def("__repr__", [](const AlignmentResult& r) {
            return "<AlignmentResult objective=" + std::to_string(r.objective) +
                   " branch_k=" + std::to_string(r.branch_k) +
                   (r.unique ? " unique>" : " tie>");
        });

    py::class_<LagrangeDiagnostics>(m, "LagrangeDiagnostics")
        .def_readonly("lambda1", &LagrangeDiagnostics::lambda1)
        .def_readonly("lambda2", &LagrangeDiagnostics::lambda2)
        .def_readonly("gradient_residual",
                      &LagrangeDiagnostics::gradient_residual);

    m.def(
        "centroid",
        [](const Eigen::MatrixXd& x) -> Point {
            return napoleon::centroid(to_triple(x));
        },
        py::arg("vertices"), "Vertex average of a (3, d) triple.");

    m.def(
        "is_collinear",
        [](const Eigen::MatrixXd& x, double tol) {
            return napoleon::is_collinear(to_triple(x), tol);
        },
        py::arg("vertices"), py::arg("tol") = napoleon::kCollinearTol);

    m.def(
        "equilaterality_residual",
        [](const Eigen::MatrixXd& x) {
            return napoleon::equilaterality_residual(to_triple(x));
        },
        py::arg("vertices"),
        "Worst relative deviation of the squared side lengths from their "
        "mean; zero exactly on equilateral triples.");

    m.def(
        "torricelli",
        [](const Eigen::MatrixXd& x, const std::string& kind) {
            return napoleon::torricelli(to_triple(x), to_kind(kind)).rows();
        },
        py::arg("vertices"), py::arg("kind") = "inner",
        "Apexes of the equilateral triangles erected on each edge.");

    m.def(
        "napoleon",
        [](const Eigen::MatrixXd& x, const std::string& kind) {
            return napoleon::napoleon(to_triple(x), to_kind(kind)).rows();
        },
        py::arg("vertices"), py::arg("kind") = "inner",
        "Centroids of the erected triangles; equilateral for any input.");

    m.def(
        "napoleon_iter",
        [](const Eigen::MatrixXd& x, const std::string& kind, long long k) {
            return napoleon::napoleon_iter(to_triple(x), to_kind(kind), k)
                .rows();
        },
        py::arg("vertices"), py::arg("kind"), py::arg("k"),
        "k-fold application, using the closed forms for large k.");

    m.def(
        "double_outer_napoleon",
        [](const Eigen::MatrixXd& x) {
            return napoleon::double_outer_napoleon(to_triple(x)).rows();
        },
        py::arg("vertices"),
        "Two outer transforms in closed form; also the nearest equilateral "
        "triple in the mean squared sense.");

    m.def(
        "alignment_objective",
        [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
            return napoleon::alignment_objective(to_triple(x), to_triple(y));
        },
        py::arg("vertices"), py::arg("candidate"));

    m.def(
        "optimal_equilateral_alignment",
        [](const Eigen::MatrixXd& x) {
            return napoleon::optimal_equilateral_alignment(to_triple(x));
        },
        py::arg("vertices"),
        "Closest equilateral triple under the mean squared vertex "
        "displacement, with both branch objectives.");

    m.def(
        "oracle_alignment",
        [](const Eigen::MatrixXd& x, int grid_n, int refine_iters,
           double theta0) {
            return napoleon::oracle_alignment(to_triple(x), grid_n,
                                              refine_iters, theta0);
        },
        py::arg("vertices"), py::arg("grid_n") = 64,
        py::arg("refine_iters") = 64, py::arg("theta0") = 0.0,
        "Grid plus golden-section search over all equilateral triples; slow "
        "but independent of the closed form.");

    m.def(
        "kkt_residual",
        [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
            return napoleon::kkt_residual(to_triple(x), to_triple(y));
        },
        py::arg("vertices"), py::arg("candidate"),
        "Least squares stationarity residual of an equilateral candidate.");

    m.def(
        "fermat_point",
        [](const Eigen::MatrixXd& x) -> Point {
            return napoleon::fermat_point(to_triple(x));
        },
        py::arg("vertices"),
        "Point minimizing the summed distances to the three vertices.");

    m.def(
        "wide_angle_vertex",
        [](const Eigen::MatrixXd& x) {
            return napoleon::wide_angle_vertex(to_triple(x));
        },
        py::arg("vertices"),
        "Index of the vertex whose angle reaches 120 degrees, if any.");

    m.def(
        "weiszfeld",
        [](const Eigen::MatrixXd& x, double tol, int max_iters) -> Point {
            return napoleon::weiszfeld(to_triple(x), tol, max_iters);
        },
        py::arg("vertices"), py::arg("tol") = 1e-10,
        py::arg("max_iters") = 10000,
        "Iterative geometric median; the independent check for "
        "fermat_point.");
}
