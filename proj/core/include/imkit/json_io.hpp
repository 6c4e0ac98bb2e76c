#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "imkit/operation.hpp"

namespace imkit {

/// JSON encodings. Matrices are flat row-major arrays of [re, im] pairs:
///   operation: {"dim_in": n, "dim_out": m, "kraus": [<matrix>, ...]}
///   state:     {"dim": n, "matrix": <matrix>}
///   povm:      {"dim": n, "elements": [<matrix>, ...]}
/// Serialization reproduces doubles in shortest round-trip decimal form, so
/// parse(serialize(x)) is bit-exact.

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, int rows, int cols);

KrausOperation operation_from_json(const nlohmann::json& j);
nlohmann::json operation_to_json(const KrausOperation& op);

DensityMatrix state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const DensityMatrix& rho);

Povm povm_from_json(const nlohmann::json& j);
nlohmann::json povm_to_json(const Povm& e);

nlohmann::json choi_to_json(const ChoiMatrix& choi);

/// Reads a file holding either an operation or a POVM (distinguished by the
/// "kraus" / "elements" key). Parse and validation failures throw
/// std::runtime_error with a diagnostic message.
nlohmann::json load_json_file(const std::string& path);

}  // namespace imkit
