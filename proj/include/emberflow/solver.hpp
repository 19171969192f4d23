#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "emberflow/combustion.hpp"
#include "emberflow/front.hpp"
#include "emberflow/grid.hpp"
#include "emberflow/wind.hpp"

namespace emberflow {

/// Full problem description. c is stored as a field even when uniform; the
/// stepper multiplies the Laplacian by it pointwise.
struct Scenario {
    Grid grid;
    ScalarField c;
    IgnitionModel ignition;
    InteractionKernel kernel;
    WindModel wind;
    PyrogenicModel pyro;
    BoundaryCondition bc;
    ScalarField u0;
    double t_end = 1.0;
    double snapshot_every = 0.1;
    bool wind_negative_part = true;
    /// Level at which fronts are extracted and areas measured.
    double front_level = 1.0;
};

/// Throws ScenarioError on any violated invariant (grid shape, c > 0,
/// t_end >= 0, u0 finite and matching the boundary ring, alpha range).
void validate(const Scenario& s);

struct SolverConfig {
    double cfl_safety = 0.4;
    double dt_max = std::numeric_limits<double>::infinity();
    std::optional<double> fixed_dt;
    int threads = 1;
};

struct Snapshot {
    double t = 0.0;
    ScalarField u;
    ScalarField theta;
    std::optional<ScalarField> burned;
    FrontSet fronts;
    std::vector<FrontSample> samples;
    double burned_area = 0.0;
    double running_max_area = 0.0;
    double max_u = 0.0;
};

/// Largest admissible explicit step at state (u, t):
/// cfl_safety * min(dx^2 dy^2 / (2 c_max (dx^2 + dy^2)),
///                  dx / (2 |v|max_x), dy / (2 |v|max_y))
/// with v = omega(t) - pyrogenic flow, capped at dt_max. Throws
/// UnstableScenarioError if the result is not positive.
double stable_dt(const Scenario& s, const ScalarField& u, double t,
                 const SolverConfig& config);

/// One forward-Euler update, fully explicit and unsplit: every term is
/// evaluated on the incoming u, the ring is reset to the Dirichlet value,
/// then the burn accumulator advances on the incoming u. Throws BlowUpError
/// when the update leaves a non-finite cell.
void step(ScalarField& u, IgnitionModel& ignition, double t, double dt,
          const Scenario& s, int threads = 1);

/// Integrates from t = 0 to t_end, emitting snapshots at t = 0, every
/// snapshot_every units (stepping lands on those times exactly), and t_end.
/// Deterministic across runs and thread counts.
std::vector<Snapshot> run(const Scenario& s, const SolverConfig& config = {});

}  // namespace emberflow
