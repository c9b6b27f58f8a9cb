#pragma once

#include <optional>
#include <vector>

#include "plumbook/graph.hpp"

namespace plumbook {

// Negative-definite intersection lattice presented by its Gram matrix.
struct Lattice {
    IntersectionMatrix gram;
    int size() const { return gram.n; }
};

// Intersection lattice of a plumbing; throws std::invalid_argument if the
// intersection matrix is not negative definite.
Lattice lattice_of(const PlumbingGraph& g);

// Isometric embedding into the diagonal lattice (e_k . e_k = -1): row i is
// the image of generator i, and -sum_k V[i][k] V[j][k] = gram[i][j].
// Certificates are canonical: every column's first nonzero entry is positive
// and columns are sorted in descending lexicographic order, so repeated runs
// and different schedules produce the identical matrix.
struct DiagonalEmbedding {
    int ambient_dim = 0;
    std::vector<std::vector<int>> vectors;

    bool operator==(const DiagonalEmbedding&) const = default;
};

struct LatticeVerdict {
    bool embeddable = false;
    std::optional<DiagonalEmbedding> embedding;
    int max_dim_searched = 0;
    // True when the searched dimension bound is provably sufficient, making a
    // negative verdict a genuine certificate.
    bool complete = true;
};

struct EmbedOptions {
    int max_dim = 0;        // 0 = the sufficient bound sum_i |gram[i][i]|
    bool parallel = false;  // split first-level branches across OpenMP threads
    // Counting enumerates every embedding; on large embeddable lattices that
    // is exponential. A positive budget aborts the count with
    // std::length_error once this many raw solutions have been seen.
    long long count_solution_budget = 0;
};

// A vector of square-norm s has at most s nonzero coordinates, so
// sum_i |gram[i][i]| ambient dimensions always suffice.
int sufficient_ambient_dim(const Lattice& lattice);

// Backtracking search with signed-permutation symmetry pruning (fresh
// coordinates enter in increasing order, first use positive). Deterministic:
// the first solution in the fixed enumeration order is returned, canonicalized.
LatticeVerdict find_embedding(const Lattice& lattice, const EmbedOptions& opts = {});

// Number of distinct embeddings up to coordinate signed permutations and
// Gram-preserving relabelings of the generators (i.e. distinct image
// configurations in the diagonal lattice).
long long count_embeddings_up_to_symmetry(const Lattice& lattice, const EmbedOptions& opts = {});

// Independent certificate check: recomputes every pairwise product.
bool verify_embedding(const Lattice& lattice, const DiagonalEmbedding& emb);

// Fast sufficient obstruction: a -2 vertex with three -2 neighbors of which
// at least two have further neighbors outside the star. Any lattice
// containing that configuration admits no embedding into the diagonal
// lattice (parity of products against the forced star image).
bool figure12_pattern_match(const PlumbingGraph& g);

namespace detail {
// Canonical representative of emb under signed column permutations.
DiagonalEmbedding canonicalize_embedding(const DiagonalEmbedding& emb);
// Gram-preserving generator permutations (graph automorphisms of the lattice).
std::vector<std::vector<int>> gram_automorphisms(const IntersectionMatrix& gram);
}  // namespace detail

}  // namespace plumbook
