#pragma once

#include <optional>

#include "imkit/operation.hpp"

namespace imkit {

namespace tol {
// An operation is free when max |Im Choi entry| <= kFreeness * max(1, ||Choi||_F).
inline constexpr double kFreeness = 1e-8;
// Entrywise symmetry slack on free-POVM elements.
inline constexpr double kFreePovm = 1e-9;
}  // namespace tol

/// Index (i, j, k, l) of a Choi coefficient: image of |i><j| at |k><l|.
struct CoefficientIndex {
    int i, j, k, l;
};

struct FreenessReport {
    bool isFree;
    double maxImagCoefficient;
    std::optional<CoefficientIndex> witnessIndex;
    bool isRko;
};

/// Deimaginarity map: rho -> (rho + rho^T)/2, the entrywise real part in the
/// fixed basis for Hermitian inputs. Accepts any square matrix.
Matrix deimaginarity(const Matrix& rho);

/// The 4x4 output of (deimaginarity ⊗ identity) on a maximally entangled-type
/// two-qubit input, together with its minimum eigenvalue. The eigenvalue is
/// negative, witnessing that the deimaginarity map is not completely positive.
std::pair<Matrix, double> deimaginarity_noncp_witness();

/// A POVM is free iff every element is symmetric (E^T = E), equivalently the
/// outcome probabilities cannot see the imaginary part of the state.
bool is_free_povm(const Povm& e);

/// Decides freeness from the Choi coefficients (all real <=> the operation
/// can neither detect nor create imaginarity). isRko checks entrywise
/// realness of the stored Kraus list only; the gauge search is out of scope.
FreenessReport classify_freeness(const KrausOperation& op);

/// The free operation whose Choi matrix is the entrywise real part of
/// Choi(op); a fixed point on free inputs, channel-preserving.
KrausOperation realify(const KrausOperation& op);

namespace fixtures {

/// Qubit operation with diagonal complex Kraus operators whose Choi matrix is
/// nevertheless real: free, but not presented with real Kraus operators.
KrausOperation free_with_complex_kraus();

}  // namespace fixtures

}  // namespace imkit
