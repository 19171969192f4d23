#pragma once

#include "emberflow/grid.hpp"

namespace emberflow {

/// 5-point Laplacian. Interior cells get
/// (f[i+1,j] + f[i-1,j] - 2f[i,j])/dx^2 + (f[i,j+1] + f[i,j-1] - 2f[i,j])/dy^2;
/// ring cells output 0 (the stepper rewrites Dirichlet rows itself, so the
/// ring value of the result is never consumed).
ScalarField laplacian(const ScalarField& f, const BoundaryCondition& bc,
                      int threads = 1);

/// Componentwise first derivatives: central differences on the interior,
/// one-sided two-point differences on the ring.
VectorField gradient(const ScalarField& f, const BoundaryCondition& bc,
                     int threads = 1);

/// Regularized magnitude sqrt(gx^2 + gy^2 + eps^2), strictly positive for
/// eps > 0.
ScalarField grad_magnitude(const VectorField& g, double eps);

/// Second derivative of f along the direction field nu (assumed unit length
/// where evaluated): nu^T Hess(f) nu, with 3-point second differences and the
/// 4-point cross stencil for the mixed term. Ring cells output 0.
ScalarField directional_second_derivative(const ScalarField& f,
                                          const VectorField& nu);

}  // namespace emberflow
