#include "emberflow/wind.hpp"

#include <cmath>

#include "emberflow/parallel.hpp"

namespace emberflow {

Eigen::Vector2d evaluate_wind(const WindModel& model, double t) {
    if (const auto* cw = std::get_if<ConstantWind>(&model)) {
        return cw->omega;
    }
    const auto& table = std::get<WindTable>(model).entries;
    if (table.empty()) {
        throw ScenarioError("wind table is empty");
    }
    Eigen::Vector2d result = table.front().second;
    for (const auto& [time, omega] : table) {
        if (time <= t) {
            result = omega;
        } else {
            break;
        }
    }
    return result;
}

double beta_of(const PyrogenicModel& model, double u) {
    const auto& tab = model.beta;
    if (tab.empty()) return 0.0;
    if (u <= tab.front().first) return tab.front().second;
    if (u >= tab.back().first) return tab.back().second;
    for (std::size_t k = 1; k < tab.size(); ++k) {
        if (u <= tab[k].first) {
            const double u0 = tab[k - 1].first;
            const double u1 = tab[k].first;
            const double b0 = tab[k - 1].second;
            const double b1 = tab[k].second;
            const double s = (u - u0) / (u1 - u0);
            return b0 + s * (b1 - b0);
        }
    }
    return tab.back().second;
}

VectorField pyrogenic_velocity(const ScalarField& u, const VectorField& grad_u,
                               const PyrogenicModel& model, int threads) {
    require_same_grid(u.grid, grad_u.x.grid, "pyrogenic_velocity");
    require_same_grid(u.grid, grad_u.y.grid, "pyrogenic_velocity");
    VectorField out{ScalarField(u.grid, 0.0), ScalarField(u.grid, 0.0)};
    if (model.is_zero()) return out;
    const int nx = u.grid.nx;
    const int ny = u.grid.ny;
    parallel_chunks(ny, threads, [&](int begin, int end) {
        for (int j = begin; j < end; ++j) {
            for (int i = 0; i < nx; ++i) {
                const double beta = beta_of(model, u(i, j));
                if (beta == 0.0) continue;
                const double gx = grad_u.x(i, j);
                const double gy = grad_u.y(i, j);
                const double mag =
                    std::sqrt(gx * gx + gy * gy + model.eps * model.eps);
                if (mag == 0.0) continue;
                const double scale = beta / std::pow(mag, model.alpha);
                out.x(i, j) = scale * gx;
                out.y(i, j) = scale * gy;
            }
        }
    });
    return out;
}

ScalarField wind_term(const Eigen::Vector2d& omega, const VectorField& pyro,
                      const VectorField& grad_u, bool use_negative_part,
                      int threads) {
    require_same_grid(pyro.x.grid, grad_u.x.grid, "wind_term");
    require_same_grid(pyro.y.grid, grad_u.y.grid, "wind_term");
    const int nx = grad_u.x.grid.nx;
    const int ny = grad_u.x.grid.ny;
    ScalarField out(grad_u.x.grid);
    parallel_chunks(ny, threads, [&](int begin, int end) {
        for (int j = begin; j < end; ++j) {
            for (int i = 0; i < nx; ++i) {
                const double dot =
                    (omega.x() - pyro.x(i, j)) * grad_u.x(i, j) +
                    (omega.y() - pyro.y(i, j)) * grad_u.y(i, j);
                out(i, j) = use_negative_part ? negative_part(dot) : -dot;
            }
        }
    });
    return out;
}

}  // namespace emberflow
