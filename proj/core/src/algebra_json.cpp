#include "griess/algebra_json.hpp"

namespace griess {

using nlohmann::json;

json to_json(const SparseVector& v) {
    json out = json::array();
    for (const auto& t : v) out.push_back(json::array({t.index, to_string(t.coeff)}));
    return out;
}

json to_json(const AlgebraElement& e) { return to_json(e.sparse()); }

SparseVector sparse_from_json(const json& j) {
    if (!j.is_array()) throw InvalidArgument("sparse vector must be an array");
    SparseVector v;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_unsigned() || !term[1].is_string()) {
            throw InvalidArgument("sparse term must be [index, \"p/q\"]");
        }
        v.push_back({term[0].get<std::size_t>(), parse_rational(term[1].get<std::string>())});
    }
    return v;
}

json to_json(const StructureAlgebra& algebra) {
    json products = json::array();
    for (std::size_t i = 0; i < algebra.dim(); ++i) {
        for (const auto& e : algebra.row(i)) {
            if (e.other < i) continue;
            products.push_back(json::array({i, e.other, to_json(e.value)}));
        }
    }
    json gram = json::array();
    for (std::size_t i = 0; i < algebra.dim(); ++i) {
        json row = json::array();
        for (const auto& x : algebra.gram().row(i)) row.push_back(to_string(x));
        gram.push_back(std::move(row));
    }
    return json{{"basis", algebra.labels()}, {"products", std::move(products)}, {"gram", std::move(gram)}};
}

AlgebraPtr algebra_from_json(const json& j) {
    try {
        const auto labels = j.at("basis").get<std::vector<std::string>>();
        const std::size_t n = labels.size();
        StructureAlgebra::Builder b(labels);
        for (const auto& p : j.at("products")) {
            if (!p.is_array() || p.size() != 3) throw InvalidArgument("product entry must be [i, j, terms]");
            const auto i = p[0].get<std::size_t>();
            const auto k = p[1].get<std::size_t>();
            if (i > k) throw InvalidArgument("product entries need i <= j");
            for (const auto& t : sparse_from_json(p[2])) b.add_product(i, k, t.index, t.coeff);
        }
        const auto& gram = j.at("gram");
        if (!gram.is_array() || gram.size() != n) throw InvalidArgument("gram must be dim x dim");
        for (std::size_t r = 0; r < n; ++r) {
            if (!gram[r].is_array() || gram[r].size() != n) throw InvalidArgument("gram must be dim x dim");
            for (std::size_t c = 0; c < n; ++c) {
                const Rational v = parse_rational(gram[r][c].get<std::string>());
                if (c < r) {
                    if (v != parse_rational(gram[c][r].get<std::string>())) throw InvalidArgument("gram is not symmetric");
                    continue;
                }
                b.set_form(r, c, v);
            }
        }
        return std::move(b).build();
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed algebra JSON: ") + e.what());
    }
}

}  // namespace griess
