#pragma once

#include <limits>
#include <variant>

#include <Eigen/Dense>

#include "emberflow/grid.hpp"

namespace emberflow {

/// Theta value marking a cell whose fuel is spent. Downstream consumers never
/// do arithmetic on it; the positive part (u - theta)+ is defined to be 0
/// wherever theta carries this sentinel.
inline constexpr double kExhaustedTheta = std::numeric_limits<double>::infinity();

inline bool is_exhausted_theta(double theta) { return std::isinf(theta); }

/// Compact-support radial weight table. weights(a, b) multiplies the
/// contribution of the cell at offset (a - half_x, b - half_y) from the
/// evaluation cell; mass = sum(weights) * dx * dy.
struct InteractionKernel {
    double radius = 0.0;
    int half_x = 0;
    int half_y = 0;
    Eigen::ArrayXXd weights;
    double mass = 0.0;
    double cell_dx = 0.0;
    double cell_dy = 0.0;

    bool is_zero() const { return mass == 0.0; }
};

/// Kernel with no support at all; the combustion source vanishes identically.
InteractionKernel zero_kernel();

/// All the mass on the zero offset: source reduces to mass * (u - theta)+.
InteractionKernel delta_kernel(double mass, const Grid& grid);

/// Truncated radial bump w(r) proportional to max(0, 1 - r/radius), sampled
/// at cell-offset distances and normalized so sum(w) * dx * dy = mass.
/// radius below max(dx, dy) leaves only the zero offset and is rejected;
/// use delta_kernel for that.
InteractionKernel build_dirac_kernel(double radius, double mass,
                                     const Grid& grid);

/// Fuel bookkeeping: capacity F, burned amount B, constitutional ignition
/// temperature theta_bar, and the exhausted mask B >= F.
struct FuelState {
    ScalarField capacity;
    ScalarField burned;
    ScalarField theta_bar;
    Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> exhausted;

    FuelState() = default;
    FuelState(ScalarField capacity_, ScalarField burned_,
              ScalarField theta_bar_);
};

struct ConstantTheta {
    double theta0 = 1.0;
};

struct FuelMemory {
    FuelState state;
    /// When true, the effective theta is floored at theta_bar instead of
    /// starting from 0 at B = 0. Off by default.
    bool floor_at_theta_bar = false;
};

using IgnitionModel = std::variant<ConstantTheta, FuelMemory>;

/// Effective ignition temperature field. ConstantTheta yields a uniform
/// field; FuelMemory yields tan(pi B / (2F)) where B < F and the exhausted
/// sentinel elsewhere. Throws if any capacity cell is <= 0.
ScalarField effective_theta(const IgnitionModel& model, const Grid& grid);

/// Left-endpoint update of the burn accumulator:
/// B <- min(F, B + dt * (u - theta_bar)+), exhausted mask refreshed.
void accumulate_burn(FuelState& state, const ScalarField& u, double dt);

/// Nonlocal ignition source
///   s(x) = sum_y (u(y) - theta(y))+ * w(x - y) * dx * dy
/// over the kernel support, with sentinel cells contributing 0 and offsets
/// falling outside the grid contributing 0.
ScalarField combustion_source(const ScalarField& u, const ScalarField& theta,
                              const InteractionKernel& kernel,
                              int threads = 1);

}  // namespace emberflow
