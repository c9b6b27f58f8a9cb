// Independent test-side oracles: exact rational arithmetic for continued
// fractions, brute-force fundamental-cycle search, and a naive embedding
// search that shares no code with the library path it checks.
#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "plumbook/graph.hpp"

namespace oracles {

struct Rational {
    long long num = 0, den = 1;

    static Rational make(long long n, long long d) {
        long long g = std::gcd(n < 0 ? -n : n, d < 0 ? -d : d);
        if (g == 0) g = 1;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        return Rational{n / g, d / g};
    }
    bool operator==(const Rational&) const = default;
};

// Evaluates b_1 - 1/(b_2 - 1/(... - 1/b_r)) exactly.
inline Rational evaluate_negative_cf(const std::vector<int>& bs) {
    Rational acc{bs.back(), 1};
    for (int i = static_cast<int>(bs.size()) - 2; i >= 0; --i) {
        // b - 1/acc = (b*num - den) / num
        acc = Rational::make(bs[i] * acc.num - acc.den, acc.num);
    }
    return acc;
}

inline std::vector<long long> apply_minus_im(const plumbook::PlumbingGraph& g,
                                             const std::vector<long long>& m) {
    std::vector<long long> n(g.size());
    for (int i = 0; i < g.size(); ++i) n[i] = -g.weights[i] * m[i];
    for (auto [a, b] : g.edges) {
        n[a] -= m[b];
        n[b] -= m[a];
    }
    return n;
}

inline bool feasible(const plumbook::PlumbingGraph& g, const std::vector<long long>& m) {
    for (long long v : apply_minus_im(g, m))
        if (v < 0) return false;
    return true;
}

// Full enumeration of [1,cap]^q: all componentwise-minimal feasible vectors.
inline std::vector<std::vector<long long>> minimal_feasible_full(const plumbook::PlumbingGraph& g,
                                                                 int cap = 8) {
    const int q = g.size();
    std::vector<std::vector<long long>> minimal;
    std::vector<long long> m(q, 1);
    auto dominated = [](const std::vector<long long>& a, const std::vector<long long>& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;  // a <= b componentwise
    };
    for (;;) {
        if (feasible(g, m)) {
            bool keep = true;
            for (const auto& k : minimal)
                if (dominated(k, m)) {
                    keep = false;
                    break;
                }
            if (keep) {
                std::erase_if(minimal,
                              [&](const std::vector<long long>& k) { return dominated(m, k); });
                minimal.push_back(m);
            }
        }
        int i = 0;
        while (i < q && m[i] == cap) m[i++] = 1;
        if (i == q) break;
        ++m[i];
    }
    return minimal;
}

// Exhaustive check over [1,cap]^q that no feasible vector goes below mstar in
// any coordinate (equivalent to mstar being the unique componentwise-minimal
// feasible vector once feasible(mstar) holds). Prunes only on rows whose
// closed neighborhood is fully assigned.
inline bool no_feasible_below(const plumbook::PlumbingGraph& g,
                              const std::vector<long long>& mstar, int cap = 8) {
    const int q = g.size();
    auto adj = g.adjacency();
    std::vector<int> ready_at(q);
    for (int i = 0; i < q; ++i) {
        int r = i;
        for (int j : adj[i]) r = std::max(r, j);
        ready_at[i] = r;
    }
    std::vector<char> can_go_below(q + 1, 0);
    for (int i = q - 1; i >= 0; --i)
        can_go_below[i] = can_go_below[i + 1] || mstar[i] > 1;
    std::vector<long long> m(q, 0);
    bool found_below_feasible = false;
    std::function<void(int, bool)> rec = [&](int depth, bool below) {
        if (found_below_feasible) return;
        if (!below && !can_go_below[depth]) return;
        if (depth == q) {
            if (below) found_below_feasible = true;
            return;
        }
        for (long long v = 1; v <= cap; ++v) {
            m[depth] = v;
            bool ok = true;
            for (int i = 0; i <= depth && ok; ++i) {
                if (ready_at[i] != depth) continue;
                long long row = -g.weights[i] * m[i];
                for (int j : adj[i]) row -= m[j];
                if (row < 0) ok = false;
            }
            if (ok) rec(depth + 1, below || v < mstar[depth]);
            if (found_below_feasible) return;
        }
    };
    rec(0, false);
    return !found_below_feasible;
}

// Naive embedding search: vertices in input order, candidate values tried
// ascending, no symmetry or Cauchy-Schwarz pruning; the only normalization is
// that never-used coordinates enter in fixed order with a weakly decreasing
// positive block (relabeling coordinates nobody has touched is not a choice).
inline bool naive_embeddable(const plumbook::IntersectionMatrix& gram, int dim) {
    const int q = gram.n;
    std::vector<std::vector<int>> vec(q, std::vector<int>(dim, 0));
    std::function<bool(int, int)> place = [&](int v, int used) -> bool {
        if (v == q) return true;
        const long long norm = -gram.at(v, v);
        std::vector<int> cand(dim, 0);
        std::function<bool(int, long long)> fresh = [&](int pos, long long rem) -> bool {
            if (rem == 0) {
                vec[v] = cand;
                if (place(v + 1, pos)) return true;
                return false;
            }
            if (pos >= dim) return false;
            const int prev = pos > used ? cand[pos - 1] : static_cast<int>(rem);
            for (int val = 1; static_cast<long long>(val) * val <= rem && val <= prev; ++val) {
                cand[pos] = val;
                if (fresh(pos + 1, rem - static_cast<long long>(val) * val)) return true;
                cand[pos] = 0;
            }
            return false;
        };
        std::function<bool(int, long long)> fill = [&](int k, long long rem) -> bool {
            if (k == used) {
                for (int p = 0; p < v; ++p) {
                    long long dot = 0;
                    for (int c = 0; c < used; ++c)
                        dot += static_cast<long long>(cand[c]) * vec[p][c];
                    if (dot != -gram.at(p, v)) return false;
                }
                return fresh(used, rem);
            }
            int maxv = 0;
            while (static_cast<long long>(maxv + 1) * (maxv + 1) <= rem) ++maxv;
            for (int val = -maxv; val <= maxv; ++val) {
                cand[k] = val;
                if (fill(k + 1, rem - static_cast<long long>(val) * val)) return true;
            }
            cand[k] = 0;
            return false;
        };
        return fill(0, norm);
    };
    return place(0, 0);
}

// Deterministic random negative-definite trees (weights in [-5,-2]).
inline plumbook::PlumbingGraph random_negdef_tree(std::mt19937& rng, int max_vertices = 6) {
    using namespace plumbook;
    for (;;) {
        const int q = 2 + static_cast<int>(rng() % (max_vertices - 1));
        std::vector<int> weights;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < q; ++i) {
            weights.push_back(-2 - static_cast<int>(rng() % 4));
            if (i > 0) edges.emplace_back(static_cast<int>(rng() % i), i);
        }
        PlumbingGraph g = make_graph(std::move(weights), std::move(edges));
        if (is_negative_definite(intersection_matrix(g))) return g;
    }
}

}  // namespace oracles
