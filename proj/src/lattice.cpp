#include "plumbook/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace plumbook {

Lattice lattice_of(const PlumbingGraph& g) {
    auto m = intersection_matrix(g);
    if (!is_negative_definite(m))
        throw std::invalid_argument("intersection matrix is not negative definite");
    return Lattice{std::move(m)};
}

int sufficient_ambient_dim(const Lattice& lattice) {
    long long sum = 0;
    for (int i = 0; i < lattice.size(); ++i) sum += -lattice.gram.at(i, i);
    return static_cast<int>(sum);
}

bool verify_embedding(const Lattice& lattice, const DiagonalEmbedding& emb) {
    const int q = lattice.size();
    if (static_cast<int>(emb.vectors.size()) != q) return false;
    for (const auto& row : emb.vectors)
        if (static_cast<int>(row.size()) != emb.ambient_dim) return false;
    for (int i = 0; i < q; ++i)
        for (int j = i; j < q; ++j) {
            long long dot = 0;
            for (int k = 0; k < emb.ambient_dim; ++k)
                dot += static_cast<long long>(emb.vectors[i][k]) * emb.vectors[j][k];
            if (-dot != lattice.gram.at(i, j)) return false;
        }
    return true;
}

bool figure12_pattern_match(const PlumbingGraph& g) {
    auto adj = g.adjacency();
    for (int c = 0; c < g.size(); ++c) {
        if (g.weights[c] != -2) continue;
        int star_leaves = 0, tailed = 0;
        for (int x : adj[c]) {
            if (g.weights[x] != -2) continue;
            ++star_leaves;
            if (adj[x].size() >= 2) ++tailed;
        }
        if (star_leaves >= 3 && tailed >= 2) return true;
    }
    return false;
}

namespace detail {

DiagonalEmbedding canonicalize_embedding(const DiagonalEmbedding& emb) {
    const int q = static_cast<int>(emb.vectors.size());
    std::vector<std::vector<int>> cols;
    for (int k = 0; k < emb.ambient_dim; ++k) {
        std::vector<int> col(q);
        bool nonzero = false;
        int lead = 0;
        for (int i = 0; i < q; ++i) {
            col[i] = emb.vectors[i][k];
            if (!nonzero && col[i] != 0) {
                nonzero = true;
                lead = col[i];
            }
        }
        if (!nonzero) continue;
        if (lead < 0)
            for (int& v : col) v = -v;
        cols.push_back(std::move(col));
    }
    std::sort(cols.begin(), cols.end(), std::greater<>());
    DiagonalEmbedding out;
    out.ambient_dim = static_cast<int>(cols.size());
    out.vectors.assign(q, std::vector<int>(out.ambient_dim, 0));
    for (int k = 0; k < out.ambient_dim; ++k)
        for (int i = 0; i < q; ++i) out.vectors[i][k] = cols[k][i];
    return out;
}

std::vector<std::vector<int>> gram_automorphisms(const IntersectionMatrix& gram) {
    const int q = gram.n;
    // row signature: diagonal entry plus sorted off-diagonal multiset
    std::vector<std::vector<long long>> sig(q);
    for (int i = 0; i < q; ++i) {
        sig[i].push_back(gram.at(i, i));
        std::vector<long long> off;
        for (int j = 0; j < q; ++j)
            if (j != i) off.push_back(gram.at(i, j));
        std::sort(off.begin(), off.end());
        sig[i].insert(sig[i].end(), off.begin(), off.end());
    }
    std::vector<std::vector<int>> autos;
    std::vector<int> perm(q, -1);
    std::vector<char> taken(q, 0);
    std::function<void(int)> place = [&](int i) {
        if (i == q) {
            autos.push_back(perm);
            return;
        }
        for (int c = 0; c < q; ++c) {
            if (taken[c] || sig[c] != sig[i]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (gram.at(perm[j], c) != gram.at(j, i)) ok = false;
            if (!ok) continue;
            perm[i] = c;
            taken[c] = 1;
            place(i + 1);
            taken[c] = 0;
        }
    };
    place(0);
    return autos;
}

}  // namespace detail

namespace {

int isqrt_ll(long long x) {
    int r = static_cast<int>(std::max(0.0, std::floor(std::sqrt(static_cast<double>(x)))));
    while (static_cast<long long>(r + 1) * (r + 1) <= x) ++r;
    while (static_cast<long long>(r) * r > x) --r;
    return r;
}

// Connectivity-preserving placement order seeded at the heaviest vertex; each
// later vertex has at least one placed neighbor, keeping constraints tight.
std::vector<int> search_order(const IntersectionMatrix& gram) {
    const int q = gram.n;
    std::vector<std::vector<int>> adj(q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            if (i != j && gram.at(i, j) != 0) adj[i].push_back(j);
    std::vector<char> placed(q, 0);
    std::vector<int> placed_neighbors(q, 0);
    std::vector<int> order;
    auto better_seed = [&](int a, int b) {  // true if a is a better seed than b
        auto key = [&](int v) {
            return std::tuple(-gram.at(v, v), static_cast<int>(adj[v].size()), -v);
        };
        return key(a) > key(b);
    };
    while (static_cast<int>(order.size()) < q) {
        int best = -1;
        bool best_connected = false;
        for (int v = 0; v < q; ++v) {
            if (placed[v]) continue;
            const bool connected = placed_neighbors[v] > 0;
            if (best < 0) {
                best = v;
                best_connected = connected;
                continue;
            }
            if (connected != best_connected) {
                if (connected) {
                    best = v;
                    best_connected = true;
                }
                continue;
            }
            if (connected) {
                auto key = [&](int x) {
                    return std::tuple(placed_neighbors[x], -gram.at(x, x),
                                      static_cast<int>(adj[x].size()), -x);
                };
                if (key(v) > key(best)) best = v;
            } else if (better_seed(v, best)) {
                best = v;
            }
        }
        placed[best] = 1;
        order.push_back(best);
        for (int w : adj[best]) ++placed_neighbors[w];
    }
    return order;
}

struct SearchProblem {
    int q = 0;
    int dim = 0;
    std::vector<int> order;                      // position -> original vertex
    std::vector<long long> norm;                 // per position
    std::vector<std::vector<long long>> target;  // coordsum targets, target[d][p], p < d
};

SearchProblem build_problem(const Lattice& lattice, int dim) {
    SearchProblem prob;
    prob.q = lattice.size();
    prob.dim = dim;
    prob.order = search_order(lattice.gram);
    prob.norm.resize(prob.q);
    prob.target.assign(prob.q, {});
    for (int d = 0; d < prob.q; ++d) {
        const int v = prob.order[d];
        prob.norm[d] = -lattice.gram.at(v, v);
        if (prob.norm[d] < 1) throw std::invalid_argument("lattice diagonal entries must be <= -1");
        prob.target[d].resize(d);
        for (int p = 0; p < d; ++p) prob.target[d][p] = -lattice.gram.at(prob.order[p], v);
    }
    return prob;
}

struct SearchState {
    std::vector<std::vector<int>> vec;  // per position, prob.dim wide
    int used = 0;
};

// Enumerates, in a fixed order, every vector for position `depth` that meets
// all pairwise targets, honoring the canonical-form rules: fresh coordinates
// are consecutive, first use positive, values weakly decreasing within the
// vector's fresh block.
class Searcher {
public:
    Searcher(const SearchProblem& prob, SearchState state)
        : prob_(prob), st_(std::move(state)) {}

    // on_solution returns true to stop the whole search.
    bool run(int depth, const std::function<bool(const SearchState&)>& on_solution,
             const std::function<bool()>& should_abort = {}) {
        on_solution_ = &on_solution;
        should_abort_ = should_abort ? &should_abort : nullptr;
        return dfs(depth);
    }

    // Collects the candidate states one level down (for branch splitting).
    std::vector<SearchState> expand(int depth) {
        std::vector<SearchState> out;
        enumerate(depth, [&]() {
            out.push_back(st_);
            return false;
        });
        return out;
    }

private:
    const SearchProblem& prob_;
    SearchState st_;
    const std::function<bool(const SearchState&)>* on_solution_ = nullptr;
    const std::function<bool()>* should_abort_ = nullptr;

    bool dfs(int depth) {
        if (should_abort_ && (*should_abort_)()) return true;
        if (depth == prob_.q) return (*on_solution_)(st_);
        return enumerate(depth, [&]() { return dfs(depth + 1); });
    }

    // Runs `next` for every legal vector at `depth`; restores state after.
    bool enumerate(int depth, const std::function<bool()>& next) {
        const int used = st_.used;
        const long long s = prob_.norm[depth];
        // suffix[p][k]: sum of squares of st_.vec[p][k..used)
        std::vector<std::vector<long long>> suffix(depth, std::vector<long long>(used + 1, 0));
        for (int p = 0; p < depth; ++p)
            for (int k = used - 1; k >= 0; --k)
                suffix[p][k] = suffix[p][k + 1] +
                               static_cast<long long>(st_.vec[p][k]) * st_.vec[p][k];

        std::vector<int> cand(used, 0);
        std::vector<int> fresh_vals;
        std::vector<long long> pd(depth, 0);
        bool stopped = false;

        std::function<void(long long)> fresh_part = [&](long long rem) {
            if (stopped) return;
            if (rem == 0) {
                auto& row = st_.vec[depth];
                std::fill(row.begin(), row.end(), 0);
                for (int k = 0; k < used; ++k) row[k] = cand[k];
                for (size_t f = 0; f < fresh_vals.size(); ++f) row[used + f] = fresh_vals[f];
                const int saved_used = st_.used;
                st_.used = used + static_cast<int>(fresh_vals.size());
                if (next()) stopped = true;
                st_.used = saved_used;
                return;
            }
            if (used + static_cast<int>(fresh_vals.size()) >= prob_.dim) return;
            const int prev = fresh_vals.empty() ? isqrt_ll(rem) : fresh_vals.back();
            for (int v = std::min(prev, isqrt_ll(rem)); v >= 1; --v) {
                fresh_vals.push_back(v);
                fresh_part(rem - static_cast<long long>(v) * v);
                fresh_vals.pop_back();
                if (stopped) return;
            }
        };

        std::function<void(int, long long)> fill = [&](int k, long long rem) {
            if (stopped) return;
            for (int p = 0; p < depth; ++p) {
                const long long gap = prob_.target[depth][p] - pd[p];
                if (gap * gap > rem * suffix[p][k]) return;  // Cauchy-Schwarz
            }
            if (k == used) {
                for (int p = 0; p < depth; ++p)
                    if (pd[p] != prob_.target[depth][p]) return;
                fresh_part(rem);
                return;
            }
            const int maxv = isqrt_ll(rem);
            for (int mag = 0; mag <= maxv; ++mag) {
                for (int sign = 0; sign < (mag == 0 ? 1 : 2); ++sign) {
                    const int c = sign == 0 ? mag : -mag;
                    cand[k] = c;
                    for (int p = 0; p < depth; ++p) pd[p] += static_cast<long long>(c) * st_.vec[p][k];
                    fill(k + 1, rem - static_cast<long long>(c) * c);
                    for (int p = 0; p < depth; ++p) pd[p] -= static_cast<long long>(c) * st_.vec[p][k];
                    cand[k] = 0;
                    if (stopped) return;
                }
            }
        };

        fill(0, s);
        return stopped;
    }
};

DiagonalEmbedding embedding_from_state(const SearchProblem& prob, const SearchState& st) {
    DiagonalEmbedding emb;
    emb.ambient_dim = st.used;
    emb.vectors.assign(prob.q, std::vector<int>(st.used, 0));
    for (int d = 0; d < prob.q; ++d)
        for (int k = 0; k < st.used; ++k) emb.vectors[prob.order[d]][k] = st.vec[d][k];
    return emb;
}

// Expands the search tree to at least `min_branches` frontier states.
struct Frontier {
    int depth = 0;
    std::vector<SearchState> states;
};

Frontier make_frontier(const SearchProblem& prob, int min_branches) {
    Frontier frontier;
    frontier.depth = 0;
    frontier.states.push_back(SearchState{
        std::vector<std::vector<int>>(prob.q, std::vector<int>(prob.dim, 0)), 0});
    while (frontier.depth < prob.q &&
           static_cast<int>(frontier.states.size()) < min_branches && frontier.depth < 3) {
        std::vector<SearchState> next;
        for (auto& st : frontier.states) {
            Searcher s(prob, st);
            auto expanded = s.expand(frontier.depth);
            for (auto& e : expanded) next.push_back(std::move(e));
        }
        frontier.states = std::move(next);
        ++frontier.depth;
        if (frontier.states.empty()) break;
    }
    return frontier;
}

}  // namespace

LatticeVerdict find_embedding(const Lattice& lattice, const EmbedOptions& opts) {
    const int sufficient = sufficient_ambient_dim(lattice);
    const int dim = opts.max_dim > 0 ? opts.max_dim : sufficient;
    LatticeVerdict verdict;
    verdict.max_dim_searched = dim;
    verdict.complete = dim >= sufficient;
    if (lattice.size() == 0) {
        verdict.embeddable = true;
        verdict.embedding = DiagonalEmbedding{0, {}};
        return verdict;
    }
    const SearchProblem prob = build_problem(lattice, dim);

    std::optional<DiagonalEmbedding> found;

#ifdef _OPENMP
    if (opts.parallel) {
        const int threads = omp_get_max_threads();
        Frontier frontier = make_frontier(prob, 4 * threads);
        const int nb = static_cast<int>(frontier.states.size());
        std::vector<std::optional<DiagonalEmbedding>> results(nb);
        std::atomic<int> best{nb};
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i < nb; ++i) {
            if (i > best.load(std::memory_order_relaxed)) continue;
            Searcher s(prob, frontier.states[i]);
            std::function<bool(const SearchState&)> on_solution = [&](const SearchState& st) {
                results[i] = embedding_from_state(prob, st);
                int expect = best.load();
                while (i < expect && !best.compare_exchange_weak(expect, i)) {
                }
                return true;
            };
            std::function<bool()> abort_check = [&, i]() {
                return i > best.load(std::memory_order_relaxed);
            };
            s.run(frontier.depth, on_solution, abort_check);
        }
        for (int i = 0; i < nb; ++i)
            if (results[i]) {
                found = results[i];
                break;
            }
        if (found) {
            verdict.embeddable = true;
            verdict.embedding = detail::canonicalize_embedding(*found);
        }
        return verdict;
    }
#endif

    SearchState root{std::vector<std::vector<int>>(prob.q, std::vector<int>(prob.dim, 0)), 0};
    Searcher s(prob, std::move(root));
    std::function<bool(const SearchState&)> on_solution = [&](const SearchState& st) {
        found = embedding_from_state(prob, st);
        return true;
    };
    s.run(0, on_solution);
    if (found) {
        verdict.embeddable = true;
        verdict.embedding = detail::canonicalize_embedding(*found);
    }
    return verdict;
}

long long count_embeddings_up_to_symmetry(const Lattice& lattice, const EmbedOptions& opts) {
    const int sufficient = sufficient_ambient_dim(lattice);
    const int dim = opts.max_dim > 0 ? opts.max_dim : sufficient;
    if (lattice.size() == 0) return 1;
    const SearchProblem prob = build_problem(lattice, dim);
    const auto autos = detail::gram_automorphisms(lattice.gram);

    auto config_form = [&](const DiagonalEmbedding& emb) {
        DiagonalEmbedding best;
        bool have = false;
        for (const auto& perm : autos) {
            DiagonalEmbedding permuted;
            permuted.ambient_dim = emb.ambient_dim;
            permuted.vectors.resize(emb.vectors.size());
            for (size_t i = 0; i < emb.vectors.size(); ++i)
                permuted.vectors[i] = emb.vectors[perm[i]];
            auto canon = detail::canonicalize_embedding(permuted);
            if (!have || canon.vectors < best.vectors) {
                best = std::move(canon);
                have = true;
            }
        }
        return best;
    };

    std::set<std::vector<std::vector<int>>> configs;
    std::atomic<long long> seen{0};
    std::atomic<bool> out_of_budget{false};
    auto budget_spent = [&]() {
        if (opts.count_solution_budget > 0 &&
            seen.fetch_add(1, std::memory_order_relaxed) >= opts.count_solution_budget) {
            out_of_budget.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    };

#ifdef _OPENMP
    if (opts.parallel) {
        const int threads = omp_get_max_threads();
        Frontier frontier = make_frontier(prob, 4 * threads);
        const int nb = static_cast<int>(frontier.states.size());
        std::vector<std::set<std::vector<std::vector<int>>>> partial(nb);
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i < nb; ++i) {
            Searcher s(prob, frontier.states[i]);
            std::function<bool(const SearchState&)> on_solution = [&](const SearchState& st) {
                if (budget_spent()) return true;
                partial[i].insert(config_form(embedding_from_state(prob, st)).vectors);
                return false;
            };
            s.run(frontier.depth, on_solution);
        }
        if (out_of_budget) throw std::length_error("embedding count exceeds the solution budget");
        for (auto& p : partial) configs.merge(p);
        return static_cast<long long>(configs.size());
    }
#endif

    SearchState root{std::vector<std::vector<int>>(prob.q, std::vector<int>(prob.dim, 0)), 0};
    Searcher s(prob, std::move(root));
    std::function<bool(const SearchState&)> on_solution = [&](const SearchState& st) {
        if (budget_spent()) return true;
        configs.insert(config_form(embedding_from_state(prob, st)).vectors);
        return false;
    };
    s.run(0, on_solution);
    if (out_of_budget) throw std::length_error("embedding count exceeds the solution budget");
    return static_cast<long long>(configs.size());
}

}  // namespace plumbook
