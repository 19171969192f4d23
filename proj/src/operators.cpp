#include "emberflow/operators.hpp"

#include <cmath>

#include "emberflow/parallel.hpp"

namespace emberflow {

ScalarField laplacian(const ScalarField& f, const BoundaryCondition&,
                      int threads) {
    require_valid(f.grid);
    const int nx = f.grid.nx;
    const int ny = f.grid.ny;
    const double inv_dx2 = 1.0 / (f.grid.dx * f.grid.dx);
    const double inv_dy2 = 1.0 / (f.grid.dy * f.grid.dy);
    ScalarField out(f.grid, 0.0);
    parallel_chunks(ny - 2, threads, [&](int begin, int end) {
        for (int j = begin + 1; j < end + 1; ++j) {
            for (int i = 1; i < nx - 1; ++i) {
                out(i, j) =
                    (f(i + 1, j) + f(i - 1, j) - 2.0 * f(i, j)) * inv_dx2 +
                    (f(i, j + 1) + f(i, j - 1) - 2.0 * f(i, j)) * inv_dy2;
            }
        }
    });
    return out;
}

VectorField gradient(const ScalarField& f, const BoundaryCondition&,
                     int threads) {
    require_valid(f.grid);
    const int nx = f.grid.nx;
    const int ny = f.grid.ny;
    const double inv_2dx = 1.0 / (2.0 * f.grid.dx);
    const double inv_2dy = 1.0 / (2.0 * f.grid.dy);
    const double inv_dx = 1.0 / f.grid.dx;
    const double inv_dy = 1.0 / f.grid.dy;
    VectorField g{ScalarField(f.grid), ScalarField(f.grid)};
    parallel_chunks(ny, threads, [&](int begin, int end) {
        for (int j = begin; j < end; ++j) {
            for (int i = 0; i < nx; ++i) {
                if (i == 0) {
                    g.x(i, j) = (f(1, j) - f(0, j)) * inv_dx;
                } else if (i == nx - 1) {
                    g.x(i, j) = (f(nx - 1, j) - f(nx - 2, j)) * inv_dx;
                } else {
                    g.x(i, j) = (f(i + 1, j) - f(i - 1, j)) * inv_2dx;
                }
                if (j == 0) {
                    g.y(i, j) = (f(i, 1) - f(i, 0)) * inv_dy;
                } else if (j == ny - 1) {
                    g.y(i, j) = (f(i, ny - 1) - f(i, ny - 2)) * inv_dy;
                } else {
                    g.y(i, j) = (f(i, j + 1) - f(i, j - 1)) * inv_2dy;
                }
            }
        }
    });
    return g;
}

ScalarField grad_magnitude(const VectorField& g, double eps) {
    require_same_grid(g.x.grid, g.y.grid, "grad_magnitude");
    ScalarField out(g.grid());
    out.values =
        (g.x.values.square() + g.y.values.square() + eps * eps).sqrt();
    return out;
}

ScalarField directional_second_derivative(const ScalarField& f,
                                          const VectorField& nu) {
    require_valid(f.grid);
    require_same_grid(f.grid, nu.x.grid, "directional_second_derivative");
    require_same_grid(f.grid, nu.y.grid, "directional_second_derivative");
    const int nx = f.grid.nx;
    const int ny = f.grid.ny;
    const double inv_dx2 = 1.0 / (f.grid.dx * f.grid.dx);
    const double inv_dy2 = 1.0 / (f.grid.dy * f.grid.dy);
    const double inv_4dxdy = 1.0 / (4.0 * f.grid.dx * f.grid.dy);
    ScalarField out(f.grid, 0.0);
    for (int j = 1; j < ny - 1; ++j) {
        for (int i = 1; i < nx - 1; ++i) {
            const double fxx =
                (f(i + 1, j) + f(i - 1, j) - 2.0 * f(i, j)) * inv_dx2;
            const double fyy =
                (f(i, j + 1) + f(i, j - 1) - 2.0 * f(i, j)) * inv_dy2;
            const double fxy = (f(i + 1, j + 1) - f(i + 1, j - 1) -
                                f(i - 1, j + 1) + f(i - 1, j - 1)) *
                               inv_4dxdy;
            const double a = nu.x(i, j);
            const double b = nu.y(i, j);
            out(i, j) = a * a * fxx + 2.0 * a * b * fxy + b * b * fyy;
        }
    }
    return out;
}

}  // namespace emberflow
