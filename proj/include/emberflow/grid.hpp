#pragma once

#include <Eigen/Dense>

#include "emberflow/errors.hpp"

namespace emberflow {

/// Uniform cell-centered 2-D grid. `origin` is the coordinate of the center
/// of cell (0,0); cell (i,j) sits at origin + (i*dx, j*dy).
struct Grid {
    int nx = 0;
    int ny = 0;
    double dx = 0.0;
    double dy = 0.0;
    Eigen::Vector2d origin{0.0, 0.0};

    double x(int i) const { return origin.x() + i * dx; }
    double y(int j) const { return origin.y() + j * dy; }

    bool operator==(const Grid& o) const {
        return nx == o.nx && ny == o.ny && dx == o.dx && dy == o.dy &&
               origin.x() == o.origin.x() && origin.y() == o.origin.y();
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

/// Throws unless the grid can host the 5-point stencil (nx,ny >= 3, dx,dy > 0).
void require_valid(const Grid& g);

void require_same_grid(const Grid& a, const Grid& b, const char* what);

/// Scalar samples on a Grid, stored as an nx-by-ny Eigen array;
/// coefficient (i,j) belongs to cell (i,j).
struct ScalarField {
    Grid grid;
    Eigen::ArrayXXd values;

    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0)
        : grid(g), values(Eigen::ArrayXXd::Constant(g.nx, g.ny, fill)) {}

    double operator()(int i, int j) const { return values(i, j); }
    double& operator()(int i, int j) { return values(i, j); }

    bool all_finite() const { return values.isFinite().all(); }
};

/// Two component fields on a shared grid.
struct VectorField {
    ScalarField x;
    ScalarField y;
    const Grid& grid() const { return x.grid; }
};

/// Dirichlet data held on the outermost ring of cells.
struct BoundaryCondition {
    double value = 0.0;
};

/// Overwrites the outermost ring of cells with the boundary value.
void apply_boundary_ring(ScalarField& f, const BoundaryCondition& bc);

/// True if every ring cell equals the boundary value exactly.
bool ring_matches(const ScalarField& f, const BoundaryCondition& bc);

/// Bilinear interpolation at a domain point; positions outside the hull of
/// cell centers are clamped onto it.
double bilinear(const ScalarField& f, double px, double py);

}  // namespace emberflow
