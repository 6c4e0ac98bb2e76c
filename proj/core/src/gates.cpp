#include "imkit/gates.hpp"

#include <cmath>

namespace imkit {
namespace gates {

namespace {
const Complex kI(0.0, 1.0);
}

Matrix identity2() { return Matrix::Identity(2, 2); }

Matrix sigma_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix sigma_y() {
    Matrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

Matrix sigma_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix s_gate() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = kI;
    return m;
}

Matrix t_gate() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = std::exp(kI * (M_PI / 4.0));
    return m;
}

Matrix rx(double alpha) {
    Matrix m(2, 2);
    double c = std::cos(alpha / 2.0), s = std::sin(alpha / 2.0);
    m << c, -kI * s, -kI * s, c;
    return m;
}

Matrix rz(double alpha) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = std::exp(kI * alpha);
    return m;
}

Matrix qubit_unitary(double theta, double phi, double lambda) {
    double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    Matrix m(2, 2);
    m(0, 0) = c;
    m(0, 1) = -std::exp(kI * lambda) * s;
    m(1, 0) = std::exp(kI * phi) * s;
    m(1, 1) = std::exp(kI * (phi + lambda)) * c;
    return m;
}

}  // namespace gates
}  // namespace imkit
