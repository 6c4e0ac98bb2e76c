#pragma once

#include <functional>
#include <vector>

#include "imkit/states.hpp"

namespace imkit {

struct OptimizerConfig {
    int restarts = 24;
    int maxIterations = 500;
    double functionTolerance = 1e-10;
    std::uint64_t seed = 0;
};

struct FeasibilityConfig {
    int maxSweeps = 2000;
    double residualTolerance = 1e-7;
};

inline constexpr double kDefaultBisectionTolerance = 1e-5;

struct FeasibilityResult {
    bool feasible;
    Matrix iterate;
    double residual;  // max over sets of Frobenius distance from the iterate
};

/// Best-effort global maximization of `objective` over pure states in C^dim:
/// Nelder-Mead on the 2*dim real embedding (amplitudes normalized before
/// evaluation), restarted from seeded random starts. Deterministic for a
/// fixed seed; ties between restarts resolve to the lowest restart index.
std::pair<PureState, double> maximize_over_pure_states(
    const std::function<double(const PureState&)>& objective, int dim,
    const OptimizerConfig& cfg = {});

/// Plain Nelder-Mead minimization of f starting from `start` with initial
/// simplex step `step`. Deterministic; returns the best point and its value.
/// The returned value never undershoots the true minimum, which makes it
/// usable as a one-sided feasibility certificate for convex objectives.
std::pair<std::vector<double>, double> nelder_mead_minimize(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& start, double step, int maxIterations,
    double functionTolerance);

/// Dykstra's cyclic corrected projections onto an intersection of closed
/// convex sets, each given by its (Frobenius-)nearest-point projection.
FeasibilityResult dykstra_feasibility(
    const std::vector<std::function<Matrix(const Matrix&)>>& projections,
    const Matrix& start, const FeasibilityConfig& cfg = {});

/// Smallest s in [0, 1] with feasibleAt(s) true, assuming monotonicity and
/// feasibility at s = 1. Returns 0 immediately when feasibleAt(0).
double bisect_min_feasible_s(const std::function<bool(double)>& feasibleAt,
                             double tolerance = kDefaultBisectionTolerance);

/// Runs fn(i) for i in [0, n) across worker threads. Thread count comes from
/// the IMKIT_THREADS environment variable (0 or unset = hardware concurrency).
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace imkit
