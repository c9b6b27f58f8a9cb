#include "plumbook/cycle.hpp"

#include <numeric>
#include <stdexcept>

namespace plumbook {

namespace {

std::vector<long long> minus_im(const PlumbingGraph& g, const std::vector<long long>& m) {
    std::vector<long long> n(g.size());
    for (int i = 0; i < g.size(); ++i) n[i] = -g.weights[i] * m[i];
    for (auto [a, b] : g.edges) {
        n[a] -= m[b];
        n[b] -= m[a];
    }
    return n;
}

}  // namespace

namespace detail {

CycleData fundamental_cycle_with_chooser(
    const PlumbingGraph& g, const std::function<int(const std::vector<int>&)>& pick) {
    if (!is_negative_definite(intersection_matrix(g)))
        throw std::invalid_argument("fundamental cycle requires a negative-definite graph");
    std::vector<long long> m(g.size(), 1);
    for (;;) {
        auto n = minus_im(g, m);
        std::vector<int> violating;
        for (int i = 0; i < g.size(); ++i)
            if (n[i] < 0) violating.push_back(i);
        if (violating.empty()) return CycleData{std::move(m), std::move(n)};
        ++m[pick(violating)];
    }
}

}  // namespace detail

CycleData fundamental_cycle(const PlumbingGraph& g) {
    return detail::fundamental_cycle_with_chooser(
        g, [](const std::vector<int>& violating) { return violating.front(); });
}

CycleData cycle_from_multiplicities(const PlumbingGraph& g, std::vector<long long> m) {
    if (static_cast<int>(m.size()) != g.size())
        throw std::invalid_argument("multiplicity vector length mismatch");
    for (long long mi : m)
        if (mi < 1) throw std::invalid_argument("multiplicities must be positive");
    auto n = minus_im(g, m);
    for (long long ni : n)
        if (ni < 0) throw std::invalid_argument("multiplicity vector is not feasible (some n_i < 0)");
    return CycleData{std::move(m), std::move(n)};
}

PieceInventory piece_inventory(const PlumbingGraph& g, const CycleData& cycle) {
    const int q = g.size();
    if (static_cast<int>(cycle.m.size()) != q || static_cast<int>(cycle.n.size()) != q)
        throw std::invalid_argument("cycle/graph size mismatch");
    auto valency = g.valencies();
    auto adj = g.adjacency();

    PieceInventory inv;
    inv.edge_annuli.reserve(g.edges.size());
    for (auto [a, b] : g.edges) inv.edge_annuli.push_back(std::gcd(cycle.m[a], cycle.m[b]));

    for (int i = 0; i < q; ++i) {
        const long long mi = cycle.m[i];
        const long long ni = cycle.n[i];
        const long long vi = valency[i];
        long long gcd_sum = 0;
        long long d = mi;
        for (int j : adj[i]) {
            gcd_sum += std::gcd(mi, cycle.m[j]);
            d = std::gcd(d, cycle.m[j]);
        }
        VertexPiece piece;
        piece.vertex = i;
        piece.binding_annuli = ni;
        piece.boundary = ni + gcd_sum;
        piece.euler = mi * (2 - vi - ni);
        long long two_g;
        if (ni > 0) {
            piece.components = 1;
            two_g = mi * (vi + ni - 2) - gcd_sum - ni;  // g = 1 + two_g/2
        } else {
            piece.components = d;
            two_g = (mi / d) * (vi - 2) - gcd_sum / d;
        }
        if (two_g % 2 != 0)
            throw std::runtime_error("non-integral piece genus at vertex " + std::to_string(i));
        piece.genus_per_component = 1 + two_g / 2;
        if (piece.genus_per_component < 0)
            throw std::runtime_error("negative piece genus at vertex " + std::to_string(i));
        // Euler consistency: chi = 2d - 2 d g - boundary.
        if (piece.euler !=
            2 * piece.components - 2 * piece.components * piece.genus_per_component - piece.boundary)
            throw std::runtime_error("piece Euler characteristic mismatch at vertex " +
                                     std::to_string(i));
        inv.vertices.push_back(piece);
    }
    return inv;
}

PageTopology page_topology(const PlumbingGraph& g, const CycleData& cycle) {
    const int q = g.size();
    if (static_cast<int>(cycle.m.size()) != q || static_cast<int>(cycle.n.size()) != q)
        throw std::invalid_argument("cycle/graph size mismatch");
    auto valency = g.valencies();
    PageTopology page;
    page.connected = g.connected();
    for (int i = 0; i < q; ++i) {
        page.boundary_count += cycle.n[i];
        page.euler += cycle.m[i] * (2 - valency[i] - cycle.n[i]);
    }
    const long long two_genus = 2 - page.boundary_count - page.euler;
    if (two_genus % 2 != 0) throw std::runtime_error("non-integral page genus");
    page.genus = two_genus / 2;
    if (page.genus < 0) throw std::runtime_error("negative page genus");
    return page;
}

}  // namespace plumbook
