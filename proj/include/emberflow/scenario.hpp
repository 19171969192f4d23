#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "emberflow/solver.hpp"

namespace emberflow {

struct PointHotspot {
    std::array<double, 2> center{0.5, 0.5};
    double radius = 0.1;
    double peak = 2.0;
    bool operator==(const PointHotspot&) const = default;
};

/// Two straight arms meeting at the vertex, symmetric about the +x axis and
/// opening by angle_degrees between their axes.
struct VShape {
    std::array<double, 2> vertex{0.3, 0.5};
    double angle_degrees = 30.0;
    double arm_length = 0.35;
    double width = 0.03;
    double peak = 2.0;
    bool operator==(const VShape&) const = default;
};

struct SquareRing {
    std::array<double, 2> center{0.5, 0.5};
    double side = 0.3;
    double thickness = 0.04;
    double peak = 2.0;
    bool operator==(const SquareRing&) const = default;
};

struct FieldFile {
    std::string path;
    bool operator==(const FieldFile&) const = default;
};

using InitialCondition =
    std::variant<PointHotspot, VShape, SquareRing, FieldFile>;

/// Samples the shape onto the grid: peak inside, 0 outside, cosine taper
/// across a 2-cell band centered on the shape boundary; the ring is then
/// forced to the boundary value. Throws if the shape (taper included) leaves
/// the domain rectangle.
ScalarField build_initial(const InitialCondition& cond, const Grid& grid,
                          const BoundaryCondition& bc);

/// Raw key-value content of a scenario document, defaults filled in.
/// Kept separate from Scenario so parse/serialize is an exact round trip.
struct ScenarioConfig {
    int nx = 100;
    int ny = 100;
    double lx = 1.0;
    double ly = 1.0;
    double c = 1e-3;

    std::string ignition_type = "constant";  // constant | fuel
    double theta0 = 1.0;
    double theta_bar = 1.0;
    double fuel = 1.0;
    std::string theta_floor = "none";  // none | theta_bar

    std::string kernel_type = "bump";  // zero | dirac | bump
    double kernel_radius = 0.03;
    double kernel_mass = 1.0;

    std::string wind_type = "constant";  // constant | table
    std::array<double, 2> omega{0.0, 0.0};
    std::vector<std::array<double, 3>> wind_table;  // t, wx, wy
    bool wind_negative_part = true;

    double pyro_alpha = 1.0;
    double pyro_eps = 1e-8;
    std::vector<std::array<double, 2>> beta;  // u, beta(u)

    InitialCondition initial = PointHotspot{};

    double t_end = 1.0;
    double snapshot_every = 0.1;
    std::optional<double> front_level;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Parses the line-oriented `section.key = value` format. Unknown sections or
/// keys, malformed values, and duplicate keys are errors carrying the line
/// number. '#' starts a comment.
ScenarioConfig parse_scenario_config(const std::string& text);

/// Canonical document for a config; parse_scenario_config inverts it exactly.
std::string serialize_scenario_config(const ScenarioConfig& cfg);

/// Materializes grid, kernel, fields, and wind from a config and validates
/// the result.
Scenario build_scenario(const ScenarioConfig& cfg);

/// parse + build + validate in one call.
Scenario parse_scenario(const std::string& text);

std::vector<std::string> preset_names();

/// Built-in configs: heat-only, point-e14, vshape, square-ring. Throws
/// ScenarioError for unknown names.
ScenarioConfig preset_config(const std::string& name);

}  // namespace emberflow
