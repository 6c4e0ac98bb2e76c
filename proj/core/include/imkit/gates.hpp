#pragma once

#include "imkit/matrix.hpp"

namespace imkit {
namespace gates {

Matrix identity2();
Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();
Matrix s_gate();        // diag(1, i)
Matrix t_gate();        // diag(1, e^{i pi/4})
Matrix rx(double alpha);
Matrix rz(double alpha);

/// General qubit unitary
///   [ cos(t/2)              -e^{i l} sin(t/2)      ]
///   [ e^{i f} sin(t/2)       e^{i(f+l)} cos(t/2)   ]
Matrix qubit_unitary(double theta, double phi, double lambda);

}  // namespace gates
}  // namespace imkit
