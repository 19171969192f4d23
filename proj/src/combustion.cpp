#include "emberflow/combustion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "emberflow/parallel.hpp"

namespace emberflow {

InteractionKernel zero_kernel() { return InteractionKernel{}; }

InteractionKernel delta_kernel(double mass, const Grid& grid) {
    require_valid(grid);
    if (!(mass > 0.0)) {
        throw ScenarioError("kernel mass must be positive");
    }
    InteractionKernel k;
    k.radius = 0.0;
    k.half_x = 0;
    k.half_y = 0;
    k.weights = Eigen::ArrayXXd::Constant(1, 1, mass / (grid.dx * grid.dy));
    k.mass = mass;
    k.cell_dx = grid.dx;
    k.cell_dy = grid.dy;
    return k;
}

InteractionKernel build_dirac_kernel(double radius, double mass,
                                     const Grid& grid) {
    require_valid(grid);
    if (!(mass > 0.0)) {
        throw ScenarioError("kernel mass must be positive");
    }
    if (radius < std::max(grid.dx, grid.dy)) {
        throw DegenerateKernelError(
            "kernel radius " + std::to_string(radius) +
            " is below one cell; use the single-cell delta kernel instead");
    }
    const int hx = std::max(0, int(std::ceil(radius / grid.dx)) - 1);
    const int hy = std::max(0, int(std::ceil(radius / grid.dy)) - 1);
    InteractionKernel k;
    k.radius = radius;
    k.half_x = hx;
    k.half_y = hy;
    k.weights = Eigen::ArrayXXd::Zero(2 * hx + 1, 2 * hy + 1);
    double sum = 0.0;
    for (int b = -hy; b <= hy; ++b) {
        for (int a = -hx; a <= hx; ++a) {
            const double r = std::hypot(a * grid.dx, b * grid.dy);
            const double w = std::max(0.0, 1.0 - r / radius);
            k.weights(a + hx, b + hy) = w;
            sum += w;
        }
    }
    const double scale = mass / (sum * grid.dx * grid.dy);
    k.weights *= scale;
    k.mass = mass;
    k.cell_dx = grid.dx;
    k.cell_dy = grid.dy;
    return k;
}

FuelState::FuelState(ScalarField capacity_, ScalarField burned_,
                     ScalarField theta_bar_)
    : capacity(std::move(capacity_)),
      burned(std::move(burned_)),
      theta_bar(std::move(theta_bar_)) {
    require_same_grid(capacity.grid, burned.grid, "fuel state");
    require_same_grid(capacity.grid, theta_bar.grid, "fuel state");
    burned.values = burned.values.max(0.0).min(capacity.values);
    exhausted = burned.values >= capacity.values;
}

ScalarField effective_theta(const IgnitionModel& model, const Grid& grid) {
    require_valid(grid);
    if (const auto* ct = std::get_if<ConstantTheta>(&model)) {
        return ScalarField(grid, ct->theta0);
    }
    const auto& fm = std::get<FuelMemory>(model);
    const FuelState& fs = fm.state;
    require_same_grid(fs.capacity.grid, grid, "effective_theta");
    if ((fs.capacity.values <= 0.0).any()) {
        throw ScenarioError("fuel capacity must be positive everywhere");
    }
    ScalarField theta(grid);
    const int nx = grid.nx;
    const int ny = grid.ny;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double f = fs.capacity(i, j);
            const double b = fs.burned(i, j);
            if (b >= f) {
                theta(i, j) = kExhaustedTheta;
            } else {
                double v = std::tan(std::numbers::pi * b / (2.0 * f));
                if (fm.floor_at_theta_bar) v = std::max(v, fs.theta_bar(i, j));
                theta(i, j) = v;
            }
        }
    }
    return theta;
}

void accumulate_burn(FuelState& state, const ScalarField& u, double dt) {
    if (!(dt > 0.0)) {
        throw Error("accumulate_burn needs dt > 0");
    }
    require_same_grid(state.capacity.grid, u.grid, "accumulate_burn");
    const int nx = u.grid.nx;
    const int ny = u.grid.ny;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double excess = std::max(0.0, u(i, j) - state.theta_bar(i, j));
            const double b = state.burned(i, j) + dt * excess;
            const double f = state.capacity(i, j);
            state.burned(i, j) = std::min(f, b);
            if (state.burned(i, j) >= f) state.exhausted(i, j) = true;
        }
    }
}

ScalarField combustion_source(const ScalarField& u, const ScalarField& theta,
                              const InteractionKernel& kernel, int threads) {
    require_same_grid(u.grid, theta.grid, "combustion_source");
    ScalarField out(u.grid, 0.0);
    if (kernel.is_zero()) return out;
    if (kernel.cell_dx != u.grid.dx || kernel.cell_dy != u.grid.dy) {
        throw GridMismatchError(
            "combustion_source: kernel was built for a different cell size");
    }
    const int nx = u.grid.nx;
    const int ny = u.grid.ny;
    ScalarField excess(u.grid);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double th = theta(i, j);
            excess(i, j) =
                is_exhausted_theta(th) ? 0.0 : std::max(0.0, u(i, j) - th);
        }
    }
    const int hx = kernel.half_x;
    const int hy = kernel.half_y;
    const double cell = u.grid.dx * u.grid.dy;
    Eigen::ArrayXXd w = kernel.weights * cell;
    parallel_chunks(ny, threads, [&](int begin, int end) {
        for (int j = begin; j < end; ++j) {
            for (int i = 0; i < nx; ++i) {
                double acc = 0.0;
                for (int b = -hy; b <= hy; ++b) {
                    const int jj = j + b;
                    if (jj < 0 || jj >= ny) continue;
                    for (int a = -hx; a <= hx; ++a) {
                        const int ii = i + a;
                        if (ii < 0 || ii >= nx) continue;
                        acc += excess(ii, jj) * w(a + hx, b + hy);
                    }
                }
                out(i, j) = acc;
            }
        }
    });
    return out;
}

}  // namespace emberflow
