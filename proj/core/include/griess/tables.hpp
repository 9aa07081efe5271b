#pragma once

#include <optional>
#include <string>
#include <vector>

#include "griess/rational.hpp"

namespace griess {

/// |Co_1| = 2^21 3^9 5^4 7^2 11 13 23.
Integer conway_group_order();

struct Table1Row {
    std::string name;
    Rational mass;
    Rational count;  // mass * |Co_1|
    bool integral = false;
};

struct Table1Report {
    std::vector<Table1Row> rows;
    Integer total;     // sum of the counts (meaningful when all are integral)
    Integer expected;  // number of Lagrangians of the 24-dimensional space
    bool all_integral = false;
    bool sum_matches = false;

    bool ok() const { return all_integral && sum_matches; }
};

Table1Report table1_consistency();

struct Table2Edge {
    long extensions = 0;
    long containments = 0;
    std::string child;
};

struct Table2Row {
    std::string symbol;
    int dim = 0;
    std::string stabilizer;
    std::optional<Integer> stabilizer_order;
    std::vector<Table2Edge> edges;
};

struct Table2Data {
    Integer group_order;
    std::vector<Table2Row> rows;
};

/// The embedded isotropic-subspace table.
Table2Data load_table2();

struct Table2EdgeCheck {
    std::string parent;
    std::string child;
    long extensions = 0;
    long containments = 0;
    Integer lhs;  // N(parent) * containments
    Integer rhs;  // N(child) * extensions
    bool pass = false;
};

struct Table2Report {
    std::vector<Table2EdgeCheck> edges;
    std::vector<std::string> warnings;  // skipped rows and edges
    std::size_t passed = 0;
    bool anchor_rows_pass = false;      // every edge of A_1, A_2, A_3

    double pass_fraction() const { return edges.empty() ? 0.0 : double(passed) / double(edges.size()); }
    bool ok() const { return anchor_rows_pass && passed * 10 >= edges.size() * 9; }
};

/// N(P) * containments = N(C) * extensions for every edge, N(X) = |G| / |Stab(X)|.
Table2Report table2_consistency(const Table2Data& data);

}  // namespace griess
