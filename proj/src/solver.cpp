#include "emberflow/solver.hpp"

#include <algorithm>
#include <cmath>

#include "emberflow/operators.hpp"
#include "emberflow/parallel.hpp"

namespace emberflow {

namespace {

void validate_ignition(const IgnitionModel& ignition, const Grid& grid) {
    if (const auto* ct = std::get_if<ConstantTheta>(&ignition)) {
        if (!std::isfinite(ct->theta0)) {
            throw ScenarioError("theta0 must be finite");
        }
        return;
    }
    const FuelState& fs = std::get<FuelMemory>(ignition).state;
    require_same_grid(fs.capacity.grid, grid, "scenario fuel");
    require_same_grid(fs.burned.grid, grid, "scenario fuel");
    require_same_grid(fs.theta_bar.grid, grid, "scenario fuel");
    if (!fs.capacity.all_finite() || (fs.capacity.values <= 0.0).any()) {
        throw ScenarioError("fuel capacity must be finite and positive");
    }
    if (!fs.burned.all_finite() || (fs.burned.values < 0.0).any() ||
        (fs.burned.values > fs.capacity.values).any()) {
        throw ScenarioError("burned amount must satisfy 0 <= B <= F");
    }
    if (!fs.theta_bar.all_finite()) {
        throw ScenarioError("theta_bar must be finite");
    }
}

}  // namespace

void validate(const Scenario& s) {
    require_valid(s.grid);
    require_same_grid(s.c.grid, s.grid, "scenario c");
    if (!s.c.all_finite() || (s.c.values <= 0.0).any()) {
        throw ScenarioError("diffusion coefficient must be finite and positive");
    }
    if (!s.kernel.is_zero()) {
        if (s.kernel.cell_dx != s.grid.dx || s.kernel.cell_dy != s.grid.dy) {
            throw ScenarioError("kernel was built for a different cell size");
        }
        if ((s.kernel.weights < 0.0).any()) {
            throw ScenarioError("kernel weights must be nonnegative");
        }
    }
    if (const auto* wt = std::get_if<WindTable>(&s.wind)) {
        if (wt->entries.empty()) throw ScenarioError("wind table is empty");
        for (std::size_t k = 1; k < wt->entries.size(); ++k) {
            if (!(wt->entries[k - 1].first < wt->entries[k].first)) {
                throw ScenarioError("wind table times must strictly increase");
            }
        }
    }
    if (!(s.pyro.alpha >= 0.0 && s.pyro.alpha <= 2.0)) {
        throw ScenarioError("pyro alpha must lie in [0, 2]");
    }
    if (!(s.pyro.eps >= 0.0)) {
        throw ScenarioError("pyro eps must be nonnegative");
    }
    for (std::size_t k = 0; k < s.pyro.beta.size(); ++k) {
        if (!std::isfinite(s.pyro.beta[k].first) ||
            !std::isfinite(s.pyro.beta[k].second)) {
            throw ScenarioError("beta table must be finite");
        }
        if (k > 0 && !(s.pyro.beta[k - 1].first < s.pyro.beta[k].first)) {
            throw ScenarioError("beta table u values must strictly increase");
        }
    }
    validate_ignition(s.ignition, s.grid);
    if (!std::isfinite(s.bc.value)) {
        throw ScenarioError("boundary value must be finite");
    }
    require_same_grid(s.u0.grid, s.grid, "scenario u0");
    if (!s.u0.all_finite()) {
        throw ScenarioError("initial temperature must be finite");
    }
    if (!ring_matches(s.u0, s.bc)) {
        throw ScenarioError(
            "initial temperature must equal the boundary value on the ring");
    }
    if (!(s.t_end >= 0.0) || !std::isfinite(s.t_end)) {
        throw ScenarioError("t_end must be a nonnegative real");
    }
    if (!(s.snapshot_every >= 0.0)) {
        throw ScenarioError("snapshot_every must be nonnegative");
    }
    if (!std::isfinite(s.front_level)) {
        throw ScenarioError("front level must be finite");
    }
}

double stable_dt(const Scenario& s, const ScalarField& u, double t,
                 const SolverConfig& config) {
    const double dx = s.grid.dx;
    const double dy = s.grid.dy;
    const double c_max = s.c.values.maxCoeff();
    const double diffusive =
        (dx * dx * dy * dy) / (2.0 * c_max * (dx * dx + dy * dy));

    const Eigen::Vector2d omega = evaluate_wind(s.wind, t);
    double vx = std::abs(omega.x());
    double vy = std::abs(omega.y());
    if (!s.pyro.is_zero()) {
        const VectorField g = gradient(u, s.bc);
        const VectorField pv = pyrogenic_velocity(u, g, s.pyro);
        vx = (omega.x() - pv.x.values).abs().maxCoeff();
        vy = (omega.y() - pv.y.values).abs().maxCoeff();
    }
    constexpr double tiny = 1e-30;
    const double adv_x = dx / (2.0 * vx + tiny);
    const double adv_y = dy / (2.0 * vy + tiny);

    double dt = config.cfl_safety * std::min({diffusive, adv_x, adv_y});
    dt = std::min(dt, config.dt_max);
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw UnstableScenarioError("no positive stable dt at t=" +
                                    std::to_string(t));
    }
    return dt;
}

void step(ScalarField& u, IgnitionModel& ignition, double t, double dt,
          const Scenario& s, int threads) {
    const Grid& grid = s.grid;
    const ScalarField theta = effective_theta(ignition, grid);
    const ScalarField lap = laplacian(u, s.bc, threads);
    const VectorField grad = gradient(u, s.bc, threads);
    const ScalarField source = combustion_source(u, theta, s.kernel, threads);
    const VectorField pv = pyrogenic_velocity(u, grad, s.pyro, threads);
    const Eigen::Vector2d omega = evaluate_wind(s.wind, t);
    const ScalarField wt =
        wind_term(omega, pv, grad, s.wind_negative_part, threads);

    // Burn bookkeeping integrates the incoming u (left-endpoint rule), so it
    // runs before u is overwritten.
    if (auto* fm = std::get_if<FuelMemory>(&ignition)) {
        accumulate_burn(fm->state, u, dt);
    }

    const int nx = grid.nx;
    const int ny = grid.ny;
    parallel_chunks(ny, threads, [&](int begin, int end) {
        for (int j = begin; j < end; ++j) {
            for (int i = 0; i < nx; ++i) {
                u(i, j) += dt * (s.c(i, j) * lap(i, j) + source(i, j) +
                                 wt(i, j));
            }
        }
    });
    apply_boundary_ring(u, s.bc);

    if (!u.all_finite()) {
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                if (!std::isfinite(u(i, j))) {
                    throw BlowUpError(t + dt, i, j);
                }
            }
        }
    }
}

namespace {

Snapshot make_snapshot(const Scenario& s, const ScalarField& u,
                       const IgnitionModel& ignition,
                       const ScalarField& u_running_max, double t) {
    Snapshot snap;
    snap.t = t;
    snap.u = u;
    snap.theta = effective_theta(ignition, s.grid);
    if (const auto* fm = std::get_if<FuelMemory>(&ignition)) {
        snap.burned = fm->state.burned;
    }
    snap.fronts = extract_level_set(u, s.front_level);
    auto samples = sample_front(snap.fronts, u, s.bc, s.pyro.eps);
    snap.samples = predicted_normal_velocity(
        std::move(samples), u, snap.theta, s.kernel, evaluate_wind(s.wind, t),
        s.pyro, s.c, s.bc, s.pyro.eps);
    snap.burned_area = burned_area(u, s.front_level);
    snap.running_max_area = burned_area(u_running_max, s.front_level);
    snap.max_u = u.values.maxCoeff();
    return snap;
}

}  // namespace

std::vector<Snapshot> run(const Scenario& s, const SolverConfig& config) {
    validate(s);
    const int threads = std::max(1, config.threads);

    ScalarField u = s.u0;
    IgnitionModel ignition = s.ignition;
    ScalarField u_running_max = u;

    std::vector<double> emit_times;
    if (s.snapshot_every > 0.0) {
        const double tol = 1e-9 * std::max(s.snapshot_every, s.t_end);
        for (int k = 1; k * s.snapshot_every < s.t_end - tol; ++k) {
            emit_times.push_back(k * s.snapshot_every);
        }
    }
    if (s.t_end > 0.0) emit_times.push_back(s.t_end);

    std::vector<Snapshot> snapshots;
    snapshots.push_back(make_snapshot(s, u, ignition, u_running_max, 0.0));

    double t = 0.0;
    for (const double target : emit_times) {
        while (t < target) {
            double dt = config.fixed_dt ? *config.fixed_dt
                                        : stable_dt(s, u, t, config);
            if (!(dt > 0.0)) {
                throw UnstableScenarioError("nonpositive dt at t=" +
                                            std::to_string(t));
            }
            bool lands = false;
            if (t + dt >= target) {
                dt = target - t;
                lands = true;
            }
            step(u, ignition, t, dt, s, threads);
            u_running_max.values = u_running_max.values.max(u.values);
            t = lands ? target : t + dt;
        }
        snapshots.push_back(make_snapshot(s, u, ignition, u_running_max, t));
    }
    return snapshots;
}

}  // namespace emberflow
