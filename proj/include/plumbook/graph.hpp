#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plumbook {

// Thrown for malformed input documents; line is 1-based, 0 if not line-bound.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_ : what_),
          line(line_) {}
};

// Weighted plumbing tree/graph. Vertex ids are 0..q-1 in order; edges are
// stored normalized (a < b) and sorted.
struct PlumbingGraph {
    std::vector<int> weights;
    std::vector<std::pair<int, int>> edges;

    int size() const { return static_cast<int>(weights.size()); }
    std::vector<int> valencies() const;
    std::vector<std::vector<int>> adjacency() const;
    bool connected() const;
    bool is_tree() const;

    bool operator==(const PlumbingGraph&) const = default;
};

// Validates ids/edges and normalizes edge order. Throws std::invalid_argument
// on self-loops, duplicate edges, or out-of-range endpoints.
PlumbingGraph make_graph(std::vector<int> weights, std::vector<std::pair<int, int>> edges);

enum class Family { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
// Number of roman-numbered variants (0 for cyclic/dihedral).
int family_variant_count(Family f);
std::string variant_roman(int variant);
std::optional<int> variant_from_string(std::string_view s, Family f);

// Parameters selecting one catalog singularity.
//  - cyclic: chain = [b_1..b_r] and/or nq = (n, q), no b, no variant
//  - dihedral: chain = [b_1..b_{r-1}] (nonempty), central weight b
//  - tetrahedral/octahedral/icosahedral: variant (1-based) and b
struct FamilySpec {
    Family family = Family::Cyclic;
    int variant = 0;
    int b = 0;
    std::vector<int> chain;
    std::optional<std::pair<long long, long long>> nq;

    bool operator==(const FamilySpec&) const = default;
};

struct IntersectionMatrix {
    int n = 0;
    std::vector<long long> entry;  // row-major

    IntersectionMatrix() = default;
    explicit IntersectionMatrix(int n_) : n(n_), entry(static_cast<size_t>(n_) * n_, 0) {}
    long long at(int i, int j) const { return entry[static_cast<size_t>(i) * n + j]; }
    long long& at(int i, int j) { return entry[static_cast<size_t>(i) * n + j]; }

    bool operator==(const IntersectionMatrix&) const = default;
};

// Line-oriented graph DSL:
//   vertex <id:int> <weight:int>
//   edge <id:int> <id:int>
// '#' starts a comment, blank lines ignored. Vertices must appear in id order
// starting at 0; throws ParseError with the offending line number otherwise.
PlumbingGraph parse_graph(std::string_view text);
std::string serialize_graph(const PlumbingGraph& g);

// JSON form: {"vertices":[{"id":0,"weight":-2},...],"edges":[[0,1],...]}.
PlumbingGraph graph_from_json(const std::string& text);
std::string graph_to_json(const PlumbingGraph& g);

// Negative continued fraction n/q = b_1 - 1/(b_2 - 1/(...)), all b_i >= 2.
// Requires 0 < q < n and gcd(n, q) = 1.
std::vector<int> continued_fraction_expand(long long n, long long q);

// Resolution graph of the catalog singularity described by spec.
PlumbingGraph generate_family(const FamilySpec& spec);

IntersectionMatrix intersection_matrix(const PlumbingGraph& g);

// Exact test via fraction-free (Bareiss) leading principal minors:
// true iff minors alternate in sign starting negative.
bool is_negative_definite(const IntersectionMatrix& m);

namespace detail {
// Leaf-to-center arm weight profiles for the star families, as positive b_i.
struct StarShape {
    std::vector<int> left;
    std::vector<int> right;
};
const StarShape& star_shape(Family f, int variant);
}  // namespace detail

}  // namespace plumbook
