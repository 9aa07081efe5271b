#include "griess/tables.hpp"

#include <map>
#include <nlohmann/json.hpp>

#include "griess/catalog.hpp"
#include "griess/embedded_data.hpp"
#include "griess/f2quad.hpp"

namespace griess {

Integer conway_group_order() {
    Integer out = 1;
    for (auto [p, e] : {std::pair{2u, 21u}, {3u, 9u}, {5u, 4u}, {7u, 2u}, {11u, 1u}, {13u, 1u}, {23u, 1u}}) {
        Integer f;
        mpz_ui_pow_ui(f.get_mpz_t(), p, e);
        out *= f;
    }
    return out;
}

Table1Report table1_consistency() {
    Table1Report rep;
    const Integer order = conway_group_order();
    rep.expected = lagrangian_extension_count(12);
    rep.all_integral = true;
    for (const auto& e : catalog()) {
        Table1Row row{e.name, e.mass, e.mass * Rational(order), false};
        row.integral = row.count.get_den() == 1 && row.count > 0;
        rep.all_integral = rep.all_integral && row.integral;
        rep.total += row.count.get_num() / row.count.get_den();
        rep.rows.push_back(std::move(row));
    }
    rep.sum_matches = rep.all_integral && rep.total == rep.expected;
    return rep;
}

Table2Data load_table2() {
    const auto j = nlohmann::json::parse(data::table2_json);
    Table2Data out;
    out.group_order = parse_integer(j.at("group_order").get<std::string>());
    for (const auto& r : j.at("rows")) {
        Table2Row row;
        row.symbol = r.at("symbol").get<std::string>();
        row.dim = r.at("dim").get<int>();
        row.stabilizer = r.value("stabilizer", "");
        if (r.contains("stabilizer_order") && !r["stabilizer_order"].is_null()) {
            row.stabilizer_order = parse_integer(r["stabilizer_order"].get<std::string>());
        }
        for (const auto& e : r.at("edges")) {
            row.edges.push_back({e.at("extensions").get<long>(), e.at("containments").get<long>(),
                                 e.at("child").get<std::string>()});
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

Table2Report table2_consistency(const Table2Data& data) {
    Table2Report rep;
    std::map<std::string, Integer> orbit;
    for (const auto& row : data.rows) {
        if (!row.stabilizer_order || *row.stabilizer_order <= 0) {
            rep.warnings.push_back(row.symbol + ": no stabilizer order, row skipped");
            continue;
        }
        if (data.group_order % *row.stabilizer_order != 0) {
            rep.warnings.push_back(row.symbol + ": stabilizer order does not divide the group order");
        }
        orbit[row.symbol] = data.group_order / *row.stabilizer_order;
    }
    rep.anchor_rows_pass = true;
    bool anchors_seen = false;
    for (const auto& row : data.rows) {
        const bool anchor = row.symbol == "A_1" || row.symbol == "A_2" || row.symbol == "A_3";
        for (const auto& e : row.edges) {
            auto p = orbit.find(row.symbol);
            auto c = orbit.find(e.child);
            if (p == orbit.end() || c == orbit.end() || e.extensions <= 0 || e.containments <= 0) {
                rep.warnings.push_back(row.symbol + " -> " + e.child + ": edge skipped");
                if (anchor) rep.anchor_rows_pass = false;
                continue;
            }
            Table2EdgeCheck check{row.symbol, e.child, e.extensions, e.containments,
                                  p->second * e.containments, c->second * e.extensions, false};
            check.pass = check.lhs == check.rhs;
            if (check.pass) ++rep.passed;
            if (anchor) {
                anchors_seen = true;
                rep.anchor_rows_pass = rep.anchor_rows_pass && check.pass;
            }
            rep.edges.push_back(std::move(check));
        }
    }
    rep.anchor_rows_pass = rep.anchor_rows_pass && anchors_seen;
    return rep;
}

}  // namespace griess
