#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace imkit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Vector = Eigen::VectorXcd;

/// Spectral decomposition of a Hermitian matrix.
/// Eigenvalues are sorted ascending; columns of `vectors` are the
/// corresponding orthonormal eigenvectors.
struct HermitianEig {
    RealVector values;
    Matrix vectors;
};

namespace tol {
// Entrywise Hermiticity tolerance; inputs further off than this are rejected,
// anything closer is silently symmetrized.
inline constexpr double kHermitian = 1e-9;
}  // namespace tol

/// Throws std::invalid_argument if any entry is NaN or infinite.
void require_finite(const Matrix& a);

/// Schatten p-norm (tr |A|^p)^(1/p); p = 1 is the trace norm.
/// Singular values are taken from the spectrum of A†A with negative
/// eigenvalues clipped at zero. Rejects p < 1.
double schatten_norm(const Matrix& a, double p);

/// Singular values of a, sorted descending.
RealVector singular_values(const Matrix& a);

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (a + a†)/2 first and rejected if it deviates from Hermitian by more than
/// tol::kHermitian entrywise.
HermitianEig hermitian_eig(const Matrix& a);

/// Frobenius-nearest positive semidefinite matrix (eigenvalue clipping at 0).
Matrix project_psd(const Matrix& a);

/// Traces out the B factor of a (dimA*dimB)x(dimA*dimB) matrix, composite
/// index (i, k) -> i*dimB + k.
Matrix partial_trace_out(const Matrix& a, int dimA, int dimB);

/// Kronecker product, index convention matching partial_trace_out.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace imkit
