#include "imkit/states.hpp"

#include <cmath>

namespace imkit {

DensityMatrix::DensityMatrix(Matrix mat) : mat_(std::move(mat)) {
    require_finite(mat_);
    if (mat_.rows() != mat_.cols() || mat_.rows() == 0)
        throw std::invalid_argument("density matrix must be square and nonempty");
    if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > tol::kHermitian)
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(mat_.trace().real() - 1.0) > tol::kPsd ||
        std::abs(mat_.trace().imag()) > tol::kPsd)
        throw std::invalid_argument("density matrix trace is not 1");
    HermitianEig eig = hermitian_eig(mat_);
    if (eig.values.minCoeff() < -tol::kPsd)
        throw std::invalid_argument("density matrix has a negative eigenvalue");
}

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0)
        throw std::invalid_argument("pure state must be nonempty");
    if (!amplitudes_.allFinite())
        throw std::invalid_argument("pure state has non-finite amplitudes");
    if (std::abs(amplitudes_.norm() - 1.0) > tol::kUnitNorm)
        throw std::invalid_argument("pure state amplitudes are not unit norm");
}

Povm::Povm(int dim, std::vector<Matrix> elements)
    : dim_(dim), elements_(std::move(elements)) {
    if (dim_ <= 0 || elements_.empty())
        throw std::invalid_argument("POVM needs a positive dimension and elements");
    Matrix sum = Matrix::Zero(dim_, dim_);
    for (const Matrix& e : elements_) {
        require_finite(e);
        if (e.rows() != dim_ || e.cols() != dim_)
            throw std::invalid_argument("POVM element dimension mismatch");
        if ((e - e.adjoint()).cwiseAbs().maxCoeff() > tol::kPsd)
            throw std::invalid_argument("POVM element is not Hermitian");
        if (hermitian_eig(e).values.minCoeff() < -tol::kPsd)
            throw std::invalid_argument("POVM element is not PSD");
        sum += e;
    }
    if ((sum - Matrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff() > tol::kTrace)
        throw std::invalid_argument("POVM elements do not sum to identity");
}

DensityMatrix random_density(int dim, Rng& rng, bool real) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            g(i, j) = Complex(rng.normal(), real ? 0.0 : rng.normal());
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(rho);
}

PureState random_pure_state(int dim, Rng& rng) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i)
        v[i] = Complex(rng.normal(), rng.normal());
    v.normalize();
    return PureState(v);
}

}  // namespace imkit
