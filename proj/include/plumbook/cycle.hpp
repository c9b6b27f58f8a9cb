#pragma once

#include <functional>
#include <vector>

#include "plumbook/graph.hpp"

namespace plumbook {

// Fundamental cycle data: I(G) m^t = -n^t with m >= 1 componentwise minimal
// and n >= 0.
struct CycleData {
    std::vector<long long> m;
    std::vector<long long> n;

    bool operator==(const CycleData&) const = default;
};

// Smallest positive m with -I(G) m >= 0, found by Laufer iteration (start at
// all ones, bump the lowest violating vertex). Requires a negative-definite
// graph; throws std::invalid_argument otherwise.
CycleData fundamental_cycle(const PlumbingGraph& g);

// Expert override: n from a caller-supplied multiplicity vector. No
// minimality claim; throws if any m_i < 1 or any n_i < 0.
CycleData cycle_from_multiplicities(const PlumbingGraph& g, std::vector<long long> m);

struct VertexPiece {
    int vertex = 0;
    long long components = 0;          // d_i
    long long genus_per_component = 0;
    long long boundary = 0;            // n_i + sum of edge annulus counts
    long long binding_annuli = 0;      // n_i
    long long euler = 0;               // m_i (2 - v_i - n_i)
};

struct PieceInventory {
    std::vector<VertexPiece> vertices;
    std::vector<long long> edge_annuli;  // gcd(m_i, m_j), aligned with g.edges
};

// Per-vertex piece data for the open book page. Throws std::runtime_error on
// non-integral or negative genus (impossible for fundamental cycles of
// negative-definite trees; reachable only through multiplicity overrides).
PieceInventory piece_inventory(const PlumbingGraph& g, const CycleData& cycle);

struct PageTopology {
    long long genus = 0;
    long long boundary_count = 0;  // N = sum n_i
    long long euler = 0;
    bool connected = true;

    bool operator==(const PageTopology&) const = default;
};

PageTopology page_topology(const PlumbingGraph& g, const CycleData& cycle);

namespace detail {
// Laufer iteration with a pluggable choice of violating vertex; the result
// must not depend on the choice (exercised by tests).
CycleData fundamental_cycle_with_chooser(
    const PlumbingGraph& g, const std::function<int(const std::vector<int>&)>& pick);
}  // namespace detail

}  // namespace plumbook
