#include "imkit/json_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace imkit {

using nlohmann::json;

namespace {

json require_key(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::runtime_error(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

int require_positive_int(const json& j, const char* key) {
    json v = require_key(j, key);
    if (!v.is_number_integer() || v.get<int>() <= 0)
        throw std::runtime_error(std::string("\"") + key + "\" must be a positive integer");
    return v.get<int>();
}

}  // namespace

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            out.push_back({m(r, c).real(), m(r, c).imag()});
    return out;
}

Matrix matrix_from_json(const json& j, int rows, int cols) {
    if (!j.is_array() || j.size() != std::size_t(rows) * std::size_t(cols))
        throw std::runtime_error("matrix entry count does not match dimensions");
    Matrix m(rows, cols);
    std::size_t idx = 0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c, ++idx) {
            const json& pair = j.at(idx);
            if (!pair.is_array() || pair.size() != 2 || !pair.at(0).is_number() ||
                !pair.at(1).is_number())
                throw std::runtime_error("matrix entries must be [re, im] pairs");
            m(r, c) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
    }
    require_finite(m);
    return m;
}

KrausOperation operation_from_json(const json& j) {
    int dimIn = require_positive_int(j, "dim_in");
    int dimOut = require_positive_int(j, "dim_out");
    json list = require_key(j, "kraus");
    if (!list.is_array() || list.empty())
        throw std::runtime_error("\"kraus\" must be a nonempty array of matrices");
    std::vector<Matrix> kraus;
    kraus.reserve(list.size());
    for (const json& k : list)
        kraus.push_back(matrix_from_json(k, dimOut, dimIn));
    return KrausOperation(dimIn, dimOut, std::move(kraus));
}

json operation_to_json(const KrausOperation& op) {
    json kraus = json::array();
    for (const Matrix& k : op.kraus())
        kraus.push_back(matrix_to_json(k));
    return {{"dim_in", op.dim_in()}, {"dim_out", op.dim_out()}, {"kraus", kraus}};
}

DensityMatrix state_from_json(const json& j) {
    int dim = require_positive_int(j, "dim");
    return DensityMatrix(matrix_from_json(require_key(j, "matrix"), dim, dim));
}

json state_to_json(const DensityMatrix& rho) {
    return {{"dim", rho.dim()}, {"matrix", matrix_to_json(rho.mat())}};
}

Povm povm_from_json(const json& j) {
    int dim = require_positive_int(j, "dim");
    json list = require_key(j, "elements");
    if (!list.is_array() || list.empty())
        throw std::runtime_error("\"elements\" must be a nonempty array of matrices");
    std::vector<Matrix> elements;
    elements.reserve(list.size());
    for (const json& e : list)
        elements.push_back(matrix_from_json(e, dim, dim));
    return Povm(dim, std::move(elements));
}

json povm_to_json(const Povm& e) {
    json elements = json::array();
    for (const Matrix& el : e.elements())
        elements.push_back(matrix_to_json(el));
    return {{"dim", e.dim()}, {"elements", elements}};
}

json choi_to_json(const ChoiMatrix& choi) {
    return {{"dim_in", choi.dim_in()},
            {"dim_out", choi.dim_out()},
            {"is_channel", choi.is_channel()},
            {"choi", matrix_to_json(choi.mat())}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& err) {
        throw std::runtime_error(std::string("JSON parse error in ") + path + ": " +
                                 err.what());
    }
}

}  // namespace imkit
