#pragma once

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace napoleon {

// A point in R^d. Dimension is dynamic; d >= 2 everywhere in this library.
using Point = Eigen::VectorXd;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch final : Error {
    using Error::Error;
};

// Raised by operations that need a direction or a plane when every vertex
// coincides (scale zero). Transforms treat such triples as fixed points
// instead of throwing.
struct TrivialTriple final : Error {
    using Error::Error;
};

struct NonFiniteCoordinate final : Error {
    using Error::Error;
};

struct NotEquilateral final : Error {
    using Error::Error;
};

struct NoConvergence final : Error {
    using Error::Error;
};

struct IoError final : Error {
    using Error::Error;
};

// Parse failure in line-delimited input; `line` is 1-based.
struct ParseError final : Error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Which family of equilateral triangles to erect: toward the triangle's own
// side of each edge (inner) or away from it (outer).
enum class Kind { inner, outer };

inline const char* kind_name(Kind kind) {
    return kind == Kind::inner ? "inner" : "outer";
}

// An ordered triple of labeled vertices in R^d. Vertex order carries
// orientation, so it is never normalized or sorted.
class Triple {
public:
    Triple(Point a, Point b, Point c);

    // Vertices as the rows of a 3 x d matrix and back.
    static Triple from_rows(const Eigen::MatrixXd& rows);
    Eigen::MatrixXd rows() const;

    // Vertices stacked into a single 3d-vector (x1 over x2 over x3) and back.
    static Triple from_stacked(const Eigen::VectorXd& stacked, Eigen::Index dim);
    Eigen::VectorXd stacked() const;

    const Point& operator[](std::size_t i) const { return vertices_[i]; }

    Eigen::Index dim() const { return vertices_[0].size(); }

    // Max pairwise vertex distance. Zero exactly when all vertices coincide.
    double scale() const;
    bool trivial() const { return scale() == 0.0; }

private:
    std::array<Point, 3> vertices_;
};

}  // namespace napoleon
