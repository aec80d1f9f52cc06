#ifndef ELLIPTICA_SERIALIZE_HPP
#define ELLIPTICA_SERIALIZE_HPP

#include <json.hpp>

#include "elliptica/relations.hpp"

namespace elliptica {

using Json = nlohmann::json;

inline Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

/// Wire format: {n, k, eta, tau, chars, rows: [[ [re,im], ... ] per row],
/// singular_values descending}, columns ordered by a*n + b.
inline Json to_json(const RelationSystem& sys) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < sys.coeffs.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < sys.coeffs.cols(); ++c)
            row.push_back(to_json(sys.coeffs(r, c)));
        rows.push_back(std::move(row));
    }
    Json sv = Json::array();
    for (Eigen::Index i = 0; i < sys.singular_values.size(); ++i)
        sv.push_back(sys.singular_values(i));
    return Json{{"n", sys.n},
                {"k", sys.k},
                {"eta", to_json(sys.basis.params.eta)},
                {"tau", to_json(sys.tau)},
                {"chars", Json::array({sys.basis.chars.a, sys.basis.chars.b})},
                {"rows", std::move(rows)},
                {"singular_values", std::move(sv)}};
}

} // namespace elliptica

#endif
