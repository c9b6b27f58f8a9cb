// Multiplicity/deficiency rows for every catalog family, as stated in the
// construction proofs. These pin the generated graph shapes: the test
// I(G) m^t = -n^t over this data is what validates the family generator.
#pragma once

#include <vector>

#include "plumbook/graph.hpp"

namespace catalog_tables {

struct MnRow {
    plumbook::FamilySpec spec;
    std::vector<long long> m, n;
};

inline std::vector<MnRow> star_rows(int b) {
    using namespace plumbook;
    auto spec = [](Family f, int variant, int b_) {
        FamilySpec s;
        s.family = f;
        s.variant = variant;
        s.b = b_;
        return s;
    };
    std::vector<MnRow> rows;
    const long long c = b - 3;
    if (b > 2) {
        rows = {
            {spec(Family::Tetrahedral, 1, b), std::vector<long long>(6, 1), {1, 0, c, 0, 1, 1}},
            {spec(Family::Tetrahedral, 2, b), std::vector<long long>(5, 1), {2, c, 0, 1, 1}},
            {spec(Family::Tetrahedral, 3, b), std::vector<long long>(4, 1), {2, c, 2, 1}},
            {spec(Family::Octahedral, 1, b), std::vector<long long>(7, 1), {1, 0, 0, c, 0, 1, 1}},
            {spec(Family::Octahedral, 2, b), std::vector<long long>(6, 1), {1, 0, 0, c, 2, 1}},
            {spec(Family::Octahedral, 3, b), std::vector<long long>(5, 1), {3, c, 0, 1, 1}},
            {spec(Family::Octahedral, 4, b), std::vector<long long>(4, 1), {3, c, 2, 1}},
            {spec(Family::Icosahedral, 1, b), std::vector<long long>(8, 1), {1, 0, 0, 0, c, 0, 1, 1}},
            {spec(Family::Icosahedral, 2, b), std::vector<long long>(6, 1), {2, 0, c, 0, 1, 1}},
            {spec(Family::Icosahedral, 3, b), std::vector<long long>(7, 1), {1, 0, 0, 0, c, 2, 1}},
            {spec(Family::Icosahedral, 4, b), std::vector<long long>(6, 1), {1, 1, c, 0, 1, 1}},
            {spec(Family::Icosahedral, 5, b), std::vector<long long>(5, 1), {2, 0, c, 2, 1}},
            {spec(Family::Icosahedral, 6, b), std::vector<long long>(5, 1), {4, c, 0, 1, 1}},
            {spec(Family::Icosahedral, 7, b), std::vector<long long>(5, 1), {1, 1, c, 2, 1}},
            {spec(Family::Icosahedral, 8, b), std::vector<long long>(4, 1), {4, c, 2, 1}},
        };
    } else {
        rows = {
            {spec(Family::Tetrahedral, 1, 2), {1, 2, 3, 2, 1, 2}, {0, 0, 0, 0, 0, 1}},
            {spec(Family::Tetrahedral, 2, 2), {1, 2, 2, 1, 1}, {1, 0, 1, 0, 0}},
            {spec(Family::Tetrahedral, 3, 2), {1, 2, 1, 1}, {1, 1, 1, 0}},
            {spec(Family::Octahedral, 1, 2), {1, 2, 3, 4, 3, 2, 2}, {0, 0, 0, 0, 0, 1, 0}},
            {spec(Family::Octahedral, 2, 2), {1, 2, 2, 2, 1, 1}, {0, 1, 0, 0, 1, 0}},
            {spec(Family::Octahedral, 3, 2), {1, 2, 2, 1, 1}, {2, 0, 1, 0, 0}},
            {spec(Family::Octahedral, 4, 2), {1, 2, 1, 1}, {2, 1, 1, 0}},
            {spec(Family::Icosahedral, 1, 2), {2, 3, 4, 5, 6, 4, 2, 3}, {1, 0, 0, 0, 0, 0, 0, 0}},
            {spec(Family::Icosahedral, 2, 2), {1, 2, 3, 2, 1, 2}, {1, 0, 0, 0, 0, 1}},
            {spec(Family::Icosahedral, 3, 2), {1, 2, 2, 2, 2, 1, 1}, {0, 1, 0, 0, 0, 1, 0}},
            {spec(Family::Icosahedral, 4, 2), {1, 1, 2, 2, 1, 1}, {1, 0, 0, 1, 0, 0}},
            {spec(Family::Icosahedral, 5, 2), {1, 2, 2, 1, 1}, {1, 1, 0, 1, 0}},
            {spec(Family::Icosahedral, 6, 2), {1, 2, 2, 1, 1}, {3, 0, 1, 0, 0}},
            {spec(Family::Icosahedral, 7, 2), {1, 1, 2, 1, 1}, {1, 0, 1, 1, 0}},
            {spec(Family::Icosahedral, 8, 2), {1, 2, 1, 1}, {3, 1, 1, 0}},
        };
    }
    return rows;
}

// For b=2 the stated data is the multiplicity vector; n is left empty and
// callers pin it through the defining identity I(G) m^t = -n^t.
inline MnRow dihedral_row(const std::vector<int>& chain, int b) {
    using namespace plumbook;
    MnRow row;
    row.spec.family = Family::Dihedral;
    row.spec.chain = chain;
    row.spec.b = b;
    const int r = static_cast<int>(chain.size()) + 1;
    row.m.assign(r + 2, 1);
    if (b > 2) {
        row.n.push_back(chain[0] - 1);
        for (int i = 1; i + 1 < r; ++i) row.n.push_back(chain[i] - 2);
        row.n.push_back(b - 3);
        row.n.push_back(1);
        row.n.push_back(1);
        return row;
    }
    int k = 0;
    for (size_t i = 0; i < chain.size(); ++i)
        if (chain[i] > 2) k = static_cast<int>(i) + 1;
    for (int i = std::max(k, 1); i < r; ++i) row.m[i] = 2;
    return row;
}

inline MnRow cyclic_row(const std::vector<int>& chain) {
    using namespace plumbook;
    MnRow row;
    row.spec.family = Family::Cyclic;
    row.spec.chain = chain;
    const int r = static_cast<int>(chain.size());
    row.m.assign(r, 1);
    if (r == 1) {
        row.n = {chain[0]};
    } else {
        row.n.push_back(chain[0] - 1);
        for (int i = 1; i + 1 < r; ++i) row.n.push_back(chain[i] - 2);
        row.n.push_back(chain[r - 1] - 1);
    }
    return row;
}

}  // namespace catalog_tables
