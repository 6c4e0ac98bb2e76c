#pragma once

#include <vector>

#include "imkit/matrix.hpp"
#include "imkit/rng.hpp"
#include "imkit/states.hpp"

namespace imkit {

namespace tol {
// Complete-positivity / trace-preservation slack on Choi matrices.
inline constexpr double kChoi = 1e-8;
}  // namespace tol

/// Choi form of a quantum operation: the (dimIn*dimOut)-square Hermitian PSD
/// matrix whose entry ((i,k),(j,l)) is the coefficient of |k><l| in the image
/// of |i><j|. Composite index (i,k) -> i*dimOut + k.
class ChoiMatrix {
public:
    ChoiMatrix(int dimIn, int dimOut, Matrix mat, double slack = tol::kChoi);

    int dim_in() const { return dimIn_; }
    int dim_out() const { return dimOut_; }
    const Matrix& mat() const { return mat_; }
    bool is_channel() const { return isChannel_; }

private:
    int dimIn_;
    int dimOut_;
    Matrix mat_;
    bool isChannel_;
};

/// Quantum operation as a finite Kraus list {K_n}, each K_n of shape
/// dimOut x dimIn, with sum K†K <= I. The Choi form is computed at
/// construction and shared immutably.
class KrausOperation {
public:
    KrausOperation(int dimIn, int dimOut, std::vector<Matrix> kraus);

    int dim_in() const { return dimIn_; }
    int dim_out() const { return dimOut_; }
    const std::vector<Matrix>& kraus() const { return kraus_; }
    const ChoiMatrix& choi() const { return choi_; }
    bool is_channel() const { return choi_.is_channel(); }

    /// sum_n K_n X K_n† for any dimIn-square matrix X.
    Matrix apply_raw(const Matrix& x) const;
    Matrix apply(const DensityMatrix& rho) const { return apply_raw(rho.mat()); }

private:
    int dimIn_;
    int dimOut_;
    std::vector<Matrix> kraus_;
    ChoiMatrix choi_;
};

/// Unitary (or general single-Kraus) conjugation rho -> U rho U†.
KrausOperation conjugation(const Matrix& u);

/// second ∘ first, Kraus list {K2_m K1_n}.
KrausOperation compose(const KrausOperation& second, const KrausOperation& first);

/// a ⊗ b, Kraus list {Ka ⊗ Kb}.
KrausOperation tensor(const KrausOperation& a, const KrausOperation& b);

/// Convex mixture sum_j p_j op_j realized by scaled Kraus lists {sqrt(p_j) K}.
/// Weights must be nonnegative and sum to 1 within 1e-9.
KrausOperation mix(const std::vector<KrausOperation>& ops,
                   const std::vector<double>& weights);

/// Seed-deterministic random channel from a QR-orthonormalized Gaussian
/// isometry; krausCount = 1 with dimIn = dimOut gives a Haar-random unitary
/// conjugation. When `real` is set all Kraus operators are real (a free
/// channel).
KrausOperation random_channel(int dimIn, int dimOut, int krausCount,
                              std::uint64_t seed, bool real = false);

/// Kraus list of the operation with the given Choi matrix, via
/// eigendecomposition with eigenvalues clipped at `clip`.
KrausOperation kraus_from_choi(const ChoiMatrix& choi, double clip = 1e-12);

}  // namespace imkit
