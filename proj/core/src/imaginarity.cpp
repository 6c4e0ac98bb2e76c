#include "imkit/imaginarity.hpp"

#include <cmath>

namespace imkit {

Matrix deimaginarity(const Matrix& rho) {
    if (rho.rows() != rho.cols())
        throw std::invalid_argument("deimaginarity requires a square matrix");
    return 0.5 * (rho + rho.transpose());
}

std::pair<Matrix, double> deimaginarity_noncp_witness() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(3, 3) = 1.0;
    m(0, 3) = m(3, 0) = 0.5;
    m(1, 2) = m(2, 1) = 0.5;
    double minEig = hermitian_eig(m).values.minCoeff();
    return {m, minEig};
}

bool is_free_povm(const Povm& e) {
    for (const Matrix& el : e.elements()) {
        if ((el - el.transpose()).cwiseAbs().maxCoeff() > tol::kFreePovm)
            return false;
    }
    return true;
}

FreenessReport classify_freeness(const KrausOperation& op) {
    const Matrix& j = op.choi().mat();
    const int dOut = op.dim_out();
    double maxImag = 0.0;
    std::optional<CoefficientIndex> witness;
    for (Eigen::Index r = 0; r < j.rows(); ++r) {
        for (Eigen::Index c = 0; c < j.cols(); ++c) {
            double im = std::abs(j(r, c).imag());
            if (im > maxImag) {
                maxImag = im;
                witness = CoefficientIndex{int(r) / dOut, int(c) / dOut,
                                           int(r) % dOut, int(c) % dOut};
            }
        }
    }
    double threshold = tol::kFreeness * std::max(1.0, j.norm());
    bool isFree = maxImag <= threshold;

    bool isRko = true;
    for (const Matrix& k : op.kraus()) {
        double scale = tol::kFreeness * std::max(1.0, k.norm());
        if (k.imag().cwiseAbs().maxCoeff() > scale) {
            isRko = false;
            break;
        }
    }
    return {isFree, maxImag, isFree ? std::nullopt : witness, isRko};
}

KrausOperation realify(const KrausOperation& op) {
    // Re of a PSD matrix is PSD and the partial trace commutes with Re, so
    // the real part of the Choi matrix is again a valid (free) operation.
    Matrix realChoi = op.choi().mat().real().cast<Complex>();
    return kraus_from_choi(ChoiMatrix(op.dim_in(), op.dim_out(), realChoi));
}

namespace fixtures {

KrausOperation free_with_complex_kraus() {
    const double r = std::sqrt(2.0) / 4.0;
    Matrix k1 = Matrix::Zero(2, 2);
    k1(0, 0) = Complex(0.25, 0.5);
    k1(1, 1) = Complex(0.25, -0.5);
    Matrix k2 = Matrix::Zero(2, 2);
    k2(0, 0) = Complex(-r, r);
    k2(1, 1) = Complex(-r, -r);
    return KrausOperation(2, 2, {k1, k2});
}

}  // namespace fixtures

}  // namespace imkit
