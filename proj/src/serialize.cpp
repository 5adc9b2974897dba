#include "qlogic/serialize.hpp"

namespace qlogic {

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Vector& v) {
    Json coords = Json::array();
    for (const auto& c : v.coords()) coords.push_back(c.to_string());
    return Json{{"field", v.field().to_string()}, {"coords", coords}};
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return Json{{"field", m.field().to_string()}, {"rows", rows}};
}

Json to_json(const Subspace& x) {
    Json out = to_json(x.basis());
    return Json{{"ambient_dim", x.ambient_dim()}, {"field", out["field"]}, {"rows", out["rows"]}};
}

Matrix matrix_from_json(const Json& j) {
    try {
        const FieldTag field = FieldTag::parse(j.at("field").get<std::string>());
        const auto& rows = j.at("rows");
        const std::size_t r = rows.size();
        const std::size_t c = j.contains("ambient_dim") ? j.at("ambient_dim").get<std::size_t>()
                                                        : (r == 0 ? 0 : rows.at(0).size());
        std::vector<Scalar> entries;
        for (const auto& row : rows) {
            if (row.size() != c) throw Error(ErrorKind::ParseError, "ragged matrix rows");
            for (const auto& e : row) entries.push_back(Scalar::parse(e.get<std::string>(), field));
        }
        return Matrix(field, r, c, std::move(entries));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

Subspace subspace_from_json(const Json& j) { return Subspace::row_space(matrix_from_json(j)); }

}  // namespace qlogic
