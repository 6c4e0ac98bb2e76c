#pragma once

#include <vector>

#include "imkit/matrix.hpp"
#include "imkit/rng.hpp"

namespace imkit {

namespace tol {
// Trace-level constraints (trace preservation, POVM completeness).
inline constexpr double kTrace = 1e-8;
// PSD / Hermiticity slack on validated objects.
inline constexpr double kPsd = 1e-9;
// Unit-norm slack on pure-state amplitudes.
inline constexpr double kUnitNorm = 1e-10;
}  // namespace tol

/// Density operator: Hermitian, PSD, unit trace (all within tolerance).
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix mat);

    int dim() const { return int(mat_.rows()); }
    const Matrix& mat() const { return mat_; }

private:
    Matrix mat_;
};

/// Unit vector in C^dim.
class PureState {
public:
    explicit PureState(Vector amplitudes);

    int dim() const { return int(amplitudes_.size()); }
    const Vector& amplitudes() const { return amplitudes_; }
    /// |psi><psi|
    Matrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

private:
    Vector amplitudes_;
};

/// Positive operator-valued measure: PSD elements summing to identity.
class Povm {
public:
    Povm(int dim, std::vector<Matrix> elements);

    int dim() const { return dim_; }
    const std::vector<Matrix>& elements() const { return elements_; }

private:
    int dim_;
    std::vector<Matrix> elements_;
};

/// Random density matrix GG†/tr(GG†) with Gaussian G. Real entries when
/// `real` is set.
DensityMatrix random_density(int dim, Rng& rng, bool real = false);

/// Haar-ish random pure state (normalized Gaussian vector).
PureState random_pure_state(int dim, Rng& rng);

}  // namespace imkit
