#pragma once

#include <algorithm>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "emberflow/grid.hpp"

namespace emberflow {

inline double positive_part(double x) { return std::max(0.0, x); }
inline double negative_part(double x) { return std::max(0.0, -x); }

struct ConstantWind {
    Eigen::Vector2d omega{0.0, 0.0};
};

/// Piecewise-constant wind schedule. Each entry holds from its time until the
/// next entry; the last entry holds forever, the first also covers t before
/// its own time.
struct WindTable {
    std::vector<std::pair<double, Eigen::Vector2d>> entries;
};

using WindModel = std::variant<ConstantWind, WindTable>;

/// Wind vector at time t. Throws on an empty table.
Eigen::Vector2d evaluate_wind(const WindModel& model, double t);

/// Fire-induced flow beta(u) * grad_u / |grad_u|_eps^alpha. beta is a
/// piecewise-linear table over u (empty table means beta = 0) with constant
/// extension beyond its endpoints.
struct PyrogenicModel {
    std::vector<std::pair<double, double>> beta;
    double alpha = 1.0;
    double eps = 1e-8;

    bool is_zero() const { return beta.empty(); }
};

double beta_of(const PyrogenicModel& model, double u);

VectorField pyrogenic_velocity(const ScalarField& u, const VectorField& grad_u,
                               const PyrogenicModel& model, int threads = 1);

/// Transport source of the temperature equation. With use_negative_part
/// (the default) returns ((omega - pyro) . grad_u)_- = max(0, -dot), which
/// only ever heats; with the toggle off returns -dot unclamped, i.e. plain
/// advection that translates the field along omega.
ScalarField wind_term(const Eigen::Vector2d& omega, const VectorField& pyro,
                      const VectorField& grad_u,
                      bool use_negative_part = true, int threads = 1);

}  // namespace emberflow
