#include "emberflow/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace emberflow {

void require_valid(const Grid& g) {
    if (g.nx < 3 || g.ny < 3) {
        throw ScenarioError("grid must be at least 3x3, got " +
                            std::to_string(g.nx) + "x" + std::to_string(g.ny));
    }
    if (!(g.dx > 0.0) || !(g.dy > 0.0)) {
        throw ScenarioError("grid spacing must be positive");
    }
}

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (a != b) {
        throw GridMismatchError(std::string(what) +
                                ": fields live on different grids");
    }
}

void apply_boundary_ring(ScalarField& f, const BoundaryCondition& bc) {
    const int nx = f.grid.nx;
    const int ny = f.grid.ny;
    for (int i = 0; i < nx; ++i) {
        f(i, 0) = bc.value;
        f(i, ny - 1) = bc.value;
    }
    for (int j = 0; j < ny; ++j) {
        f(0, j) = bc.value;
        f(nx - 1, j) = bc.value;
    }
}

bool ring_matches(const ScalarField& f, const BoundaryCondition& bc) {
    const int nx = f.grid.nx;
    const int ny = f.grid.ny;
    for (int i = 0; i < nx; ++i) {
        if (f(i, 0) != bc.value || f(i, ny - 1) != bc.value) return false;
    }
    for (int j = 0; j < ny; ++j) {
        if (f(0, j) != bc.value || f(nx - 1, j) != bc.value) return false;
    }
    return true;
}

double bilinear(const ScalarField& f, double px, double py) {
    const Grid& g = f.grid;
    double fi = (px - g.origin.x()) / g.dx;
    double fj = (py - g.origin.y()) / g.dy;
    fi = std::clamp(fi, 0.0, double(g.nx - 1));
    fj = std::clamp(fj, 0.0, double(g.ny - 1));
    int i0 = std::min(int(std::floor(fi)), g.nx - 2);
    int j0 = std::min(int(std::floor(fj)), g.ny - 2);
    i0 = std::max(i0, 0);
    j0 = std::max(j0, 0);
    const double tx = fi - i0;
    const double ty = fj - j0;
    return (1.0 - tx) * (1.0 - ty) * f(i0, j0) +
           tx * (1.0 - ty) * f(i0 + 1, j0) +
           (1.0 - tx) * ty * f(i0, j0 + 1) +
           tx * ty * f(i0 + 1, j0 + 1);
}

}  // namespace emberflow
