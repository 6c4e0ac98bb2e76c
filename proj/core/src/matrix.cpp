#include "imkit/matrix.hpp"

#include <cmath>

namespace imkit {

void require_finite(const Matrix& a) {
    if (!a.allFinite())
        throw std::invalid_argument("matrix has NaN or infinite entries");
}

RealVector singular_values(const Matrix& a) {
    Matrix gram = a.adjoint() * a;
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
    RealVector vals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return vals.reverse();
}

double schatten_norm(const Matrix& a, double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("Schatten norm requires p >= 1");
    RealVector sv = singular_values(a);
    if (p == 1.0)
        return sv.sum();
    if (p == 2.0)
        return std::sqrt(sv.squaredNorm());
    double acc = 0.0;
    for (int i = 0; i < sv.size(); ++i)
        acc += std::pow(sv[i], p);
    return std::pow(acc, 1.0 / p);
}

HermitianEig hermitian_eig(const Matrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("hermitian_eig requires a square matrix");
    double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (dev > 2.0 * tol::kHermitian)
        throw std::invalid_argument("matrix is not Hermitian within tolerance");
    Matrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    return {es.eigenvalues(), es.eigenvectors()};
}

Matrix project_psd(const Matrix& a) {
    HermitianEig eig = hermitian_eig(a);
    RealVector clipped = eig.values.cwiseMax(0.0);
    return eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();
}

Matrix partial_trace_out(const Matrix& a, int dimA, int dimB) {
    if (a.rows() != a.cols() || a.rows() != Eigen::Index(dimA) * dimB)
        throw std::invalid_argument("partial_trace_out: dimension mismatch");
    Matrix out = Matrix::Zero(dimA, dimA);
    for (int i = 0; i < dimA; ++i)
        for (int j = 0; j < dimA; ++j)
            for (int k = 0; k < dimB; ++k)
                out(i, j) += a(i * dimB + k, j * dimB + k);
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace imkit
