#include "imkit/operation.hpp"

#include <cmath>
#include <numeric>

namespace imkit {

namespace {

Matrix choi_of(int dimIn, int dimOut, const std::vector<Matrix>& kraus) {
    if (kraus.empty())
        throw std::invalid_argument("Kraus list must be nonempty");
    for (const Matrix& k : kraus) {
        require_finite(k);
        if (k.rows() != dimOut || k.cols() != dimIn)
            throw std::invalid_argument("Kraus operator shape mismatch");
    }
    const int d = dimIn * dimOut;
    Matrix j = Matrix::Zero(d, d);
    Vector v(d);
    for (const Matrix& k : kraus) {
        for (int i = 0; i < dimIn; ++i)
            for (int o = 0; o < dimOut; ++o)
                v[i * dimOut + o] = k(o, i);
        j += v * v.adjoint();
    }
    return j;
}

}  // namespace

ChoiMatrix::ChoiMatrix(int dimIn, int dimOut, Matrix mat, double slack)
    : dimIn_(dimIn), dimOut_(dimOut), mat_(std::move(mat)) {
    if (dimIn_ <= 0 || dimOut_ <= 0)
        throw std::invalid_argument("Choi matrix needs positive dimensions");
    const Eigen::Index d = Eigen::Index(dimIn_) * dimOut_;
    if (mat_.rows() != d || mat_.cols() != d)
        throw std::invalid_argument("Choi matrix size does not match dimensions");
    require_finite(mat_);
    if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > slack)
        throw std::invalid_argument("Choi matrix is not Hermitian");
    if (hermitian_eig(mat_).values.minCoeff() < -slack)
        throw std::invalid_argument("Choi matrix is not PSD (map not completely positive)");
    Matrix reduced = partial_trace_out(mat_, dimIn_, dimOut_);
    Matrix defect = Matrix::Identity(dimIn_, dimIn_) - reduced;
    if (hermitian_eig(defect).values.minCoeff() < -slack)
        throw std::invalid_argument("operation is not trace-nonincreasing");
    isChannel_ = defect.cwiseAbs().maxCoeff() <= slack;
}

KrausOperation::KrausOperation(int dimIn, int dimOut, std::vector<Matrix> kraus)
    : dimIn_(dimIn),
      dimOut_(dimOut),
      kraus_(std::move(kraus)),
      choi_(dimIn, dimOut, choi_of(dimIn, dimOut, kraus_)) {}

Matrix KrausOperation::apply_raw(const Matrix& x) const {
    if (x.rows() != dimIn_ || x.cols() != dimIn_)
        throw std::invalid_argument("apply: dimension mismatch");
    Matrix out = Matrix::Zero(dimOut_, dimOut_);
    for (const Matrix& k : kraus_)
        out += k * x * k.adjoint();
    return out;
}

KrausOperation conjugation(const Matrix& u) {
    return KrausOperation(int(u.cols()), int(u.rows()), {u});
}

KrausOperation compose(const KrausOperation& second, const KrausOperation& first) {
    if (first.dim_out() != second.dim_in())
        throw std::invalid_argument("compose: dimension mismatch");
    std::vector<Matrix> kraus;
    kraus.reserve(first.kraus().size() * second.kraus().size());
    for (const Matrix& k2 : second.kraus())
        for (const Matrix& k1 : first.kraus())
            kraus.push_back(k2 * k1);
    return KrausOperation(first.dim_in(), second.dim_out(), std::move(kraus));
}

KrausOperation tensor(const KrausOperation& a, const KrausOperation& b) {
    std::vector<Matrix> kraus;
    kraus.reserve(a.kraus().size() * b.kraus().size());
    for (const Matrix& ka : a.kraus())
        for (const Matrix& kb : b.kraus())
            kraus.push_back(kron(ka, kb));
    return KrausOperation(a.dim_in() * b.dim_in(), a.dim_out() * b.dim_out(),
                          std::move(kraus));
}

KrausOperation mix(const std::vector<KrausOperation>& ops,
                   const std::vector<double>& weights) {
    if (ops.empty() || ops.size() != weights.size())
        throw std::invalid_argument("mix: ops and weights must match and be nonempty");
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("mix: weights must sum to 1");
    std::vector<Matrix> kraus;
    for (std::size_t n = 0; n < ops.size(); ++n) {
        if (weights[n] < 0.0)
            throw std::invalid_argument("mix: negative weight");
        if (ops[n].dim_in() != ops[0].dim_in() || ops[n].dim_out() != ops[0].dim_out())
            throw std::invalid_argument("mix: dimension mismatch");
        for (const Matrix& k : ops[n].kraus())
            kraus.push_back(std::sqrt(weights[n]) * k);
    }
    return KrausOperation(ops[0].dim_in(), ops[0].dim_out(), std::move(kraus));
}

KrausOperation random_channel(int dimIn, int dimOut, int krausCount,
                              std::uint64_t seed, bool real) {
    if (dimIn <= 0 || dimOut <= 0 || krausCount <= 0)
        throw std::invalid_argument("random_channel: dimensions must be positive");
    Rng rng(seed);
    Matrix g(dimOut * krausCount, dimIn);
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j)
            g(i, j) = Complex(rng.normal(), real ? 0.0 : rng.normal());
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix iso = qr.householderQ() * Matrix::Identity(g.rows(), dimIn);
    std::vector<Matrix> kraus(krausCount);
    for (int n = 0; n < krausCount; ++n)
        kraus[n] = iso.block(n * dimOut, 0, dimOut, dimIn);
    return KrausOperation(dimIn, dimOut, std::move(kraus));
}

KrausOperation kraus_from_choi(const ChoiMatrix& choi, double clip) {
    HermitianEig eig = hermitian_eig(choi.mat());
    const int dIn = choi.dim_in();
    const int dOut = choi.dim_out();
    std::vector<Matrix> kraus;
    for (int n = 0; n < eig.values.size(); ++n) {
        if (eig.values[n] <= clip)
            continue;
        double w = std::sqrt(eig.values[n]);
        Matrix k(dOut, dIn);
        for (int i = 0; i < dIn; ++i)
            for (int o = 0; o < dOut; ++o)
                k(o, i) = w * eig.vectors(i * dOut + o, n);
        kraus.push_back(std::move(k));
    }
    if (kraus.empty())
        kraus.push_back(Matrix::Zero(dOut, dIn));
    return KrausOperation(dIn, dOut, std::move(kraus));
}

}  // namespace imkit
