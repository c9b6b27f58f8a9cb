#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "plumbook/cycle.hpp"
#include "plumbook/graph.hpp"

namespace plumbook {

// Named curves on the genus-1 model surfaces (one- to five-holed torus).
// Alpha/Beta/Delta live on the one-holed torus; A1..A4 are the chain curves
// and D1..D5 the boundary-parallel curves of the multi-holed models.
enum class ModelCurve { Alpha, Beta, Delta, A1, A2, A3, A4, D1, D2, D3, D4, D5 };

const char* model_curve_name(ModelCurve c);

// A simple closed curve a Dehn twist can be taken about. Vertex labels and
// annulus indices are 1-based (A_1..A_q convention).
struct CurveRef {
    enum class Kind { Boundary, EdgeCore, Model };
    Kind kind = Kind::Model;
    int vertex = 0, index = 0;   // Boundary: delta^vertex_index
    int ea = 0, eb = 0, copy = 0;  // EdgeCore: annulus copy on edge (ea, eb)
    ModelCurve model = ModelCurve::Alpha;

    static CurveRef boundary(int vertex, int index);
    static CurveRef edge_core(int ea, int eb, int copy = 1);
    static CurveRef model_curve(ModelCurve c);

    bool is_boundary_parallel() const;  // Boundary or a model Delta/D* curve

    friend auto operator<=>(const CurveRef&, const CurveRef&) = default;
};

// Prints d[i,t], c[i,j,l], or a model name (al, be, de, a1..a4, de1..de5).
std::string curve_name(const CurveRef& c);

struct TwistFactor {
    CurveRef curve;
    long long exponent = 1;

    bool operator==(const TwistFactor&) const = default;
};

// Ordered product of right Dehn twists; leftmost factor acts first.
struct TwistWord {
    std::vector<TwistFactor> factors;

    bool operator==(const TwistWord&) const = default;
};

// Bit-exact serialization: factors separated by spaces, each "T(<curve>)^e"
// with "^1" omitted.
std::string word_to_string(const TwistWord& w);

// Per-annulus root instructions: (phi restricted to the annulus)^root_order
// equals the full right twist about the annulus core.
struct FractionalTwistEntry {
    bool binding = false;     // binding annulus U^vertex_index vs edge annulus
    int vertex = 0, index = 0;
    int ea = 0, eb = 0, copy = 0;
    long long root_order = 1;
    CurveRef target;

    bool operator==(const FractionalTwistEntry&) const = default;
};

struct FractionalTwistPlan {
    std::vector<FractionalTwistEntry> entries;
};

// One entry per binding annulus (root order m_i) and per edge annulus copy
// (root order m_i m_j / gcd(m_i, m_j)).
FractionalTwistPlan fractional_plan(const PlumbingGraph& g, const CycleData& cycle);

// A catalog monodromy word plus notes about entries whose traditional closed
// forms are misprinted and were normalized or reconstructed here.
struct CatalogWord {
    TwistWord word;
    long long page_genus = 0;
    std::vector<std::string> notes;
};

// Closed-form monodromy for a catalog spec: an explicit Dehn-twist word for
// every planar page, and the genus-one word (over model curves) for b = 2
// cases. Throws std::invalid_argument outside the catalog.
CatalogWord catalog_word(const FamilySpec& spec);

// First homology of a model surface with its intersection pairing and the
// classes of the named model curves.
struct HomologyModel {
    int genus = 0;
    int boundary = 0;
    int rank = 0;
    std::vector<std::string> basis;               // "a", "b", "d1", ...
    std::vector<std::vector<long long>> pairing;  // rank x rank, antisymmetric

    // Throws std::invalid_argument for curves with no class in this model.
    std::vector<long long> class_of(const CurveRef& c) const;
};

HomologyModel torus_model(int boundary_count);   // genus 1, k >= 1 boundaries
HomologyModel planar_model(int boundary_count);  // genus 0, k >= 2 boundaries

struct Relation {
    std::string name;
    TwistWord left, right;
    int model_boundary = 1;  // relation lives on torus_model(model_boundary)
};

// The torus relations: one-holed, two-holed (three forms), three-holed (two
// forms), four-holed.
std::vector<Relation> relation_library();

using ActionMatrix = std::vector<std::vector<long long>>;

ActionMatrix identity_matrix(int rank);

// Product of transvections x -> x + <x, [c]>[c] in word order (leftmost
// factor applied first); exponent e gives the e-th power.
ActionMatrix homology_action(const TwistWord& w, const HomologyModel& model);

struct RelationCheck {
    std::string name;
    bool holds = false;
};

// Checks left and right action matrices agree for every library relation.
std::vector<RelationCheck> verify_relations();

// Total twist exponent about each boundary-parallel curve in a word.
struct BoundaryProfile {
    std::map<CurveRef, long long> counts;
    long long distinct_curves = 0;
};

// With a cycle supplied, boundary references d[i,t] are range-checked against
// n_i (throws std::out_of_range on violation); the number of distinct
// boundary-parallel curves must not exceed page.boundary_count.
BoundaryProfile word_boundary_profile(const TwistWord& w, const PageTopology& page,
                                      const CycleData* cycle = nullptr);

}  // namespace plumbook
