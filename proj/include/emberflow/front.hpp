#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "emberflow/combustion.hpp"
#include "emberflow/grid.hpp"
#include "emberflow/wind.hpp"

namespace emberflow {

/// One contour chain in domain coordinates. Closed chains repeat the first
/// vertex at the end.
struct FrontChain {
    std::vector<Eigen::Vector2d> points;
    bool closed = false;
};

struct FrontSet {
    std::vector<FrontChain> chains;
    double level = 0.0;

    bool empty() const { return chains.empty(); }
    std::size_t vertex_count() const;
};

/// Per-vertex front data. normal is the outward unit normal of the burning
/// set {u > level}, i.e. -grad u / |grad u|; degenerate marks samples where
/// |grad u| was too small to trust the normal.
struct FrontSample {
    int chain_id = 0;
    Eigen::Vector2d position{0.0, 0.0};
    Eigen::Vector2d normal{0.0, 0.0};
    double H = 0.0;
    double grad_mag = 0.0;
    double v_predicted = 0.0;
    std::optional<double> v_observed;
    bool degenerate = false;
};

/// Marching-squares contour of {u = level} with linear interpolation along
/// cell edges; saddle cells are split by the sign of the cell-center average.
/// Chains are emitted in scan order of their first crossing, each walked with
/// the burning side on the left, so output is deterministic.
FrontSet extract_level_set(const ScalarField& u, double level);

/// Area of {u > level}: per-cell bilinear fractions between adjacent cell
/// centers plus the outer half-cell margin, so a uniformly hot field counts
/// the whole nx*dx by ny*dy rectangle.
double burned_area(const ScalarField& u, double level);

/// Curvature of the level lines as seen from the burning set:
/// H = div(-grad u / |grad u|_eps), positive on the boundary of a convex hot
/// region. Ring cells output 0.
ScalarField curvature_field(const ScalarField& u, double eps = 1e-8);

/// Signed area sum of the closed chains (shoelace; open chains contribute 0).
double chains_area(const FrontSet& front);

/// Builds per-vertex samples: normal and |grad u| from the interpolated
/// gradient, H from the interpolated curvature field. Samples with
/// |grad u| < 10*eps are flagged degenerate.
std::vector<FrontSample> sample_front(const FrontSet& front,
                                      const ScalarField& u,
                                      const BoundaryCondition& bc,
                                      double eps = 1e-8);

/// Fills v_predicted with the front-speed diagnostic
///   v = -c H + c d2u/dnu2 / |grad u| + source / |grad u|
///       + ((omega - pyro) . grad u / |grad u|)_-
/// each field bilinearly interpolated to the sample. Degenerate samples are
/// left untouched.
std::vector<FrontSample> predicted_normal_velocity(
    std::vector<FrontSample> samples, const ScalarField& u,
    const ScalarField& theta, const InteractionKernel& kernel,
    const Eigen::Vector2d& omega, const PyrogenicModel& pyro,
    const ScalarField& c, const BoundaryCondition& bc, double eps = 1e-8);

/// Distance from a point to the nearest point on any chain segment.
double nearest_front_distance(const FrontSet& front,
                              const Eigen::Vector2d& point);

/// Fills v_observed: signed distance from each sample along its normal to the
/// nearest point of the later front, divided by dt. Throws if the later
/// front is empty.
std::vector<FrontSample> observed_normal_velocity(
    std::vector<FrontSample> samples, const FrontSet& later, double dt);

}  // namespace emberflow
