#include "plumbook/monodromy.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace plumbook {

const char* model_curve_name(ModelCurve c) {
    switch (c) {
        case ModelCurve::Alpha: return "al";
        case ModelCurve::Beta: return "be";
        case ModelCurve::Delta: return "de";
        case ModelCurve::A1: return "a1";
        case ModelCurve::A2: return "a2";
        case ModelCurve::A3: return "a3";
        case ModelCurve::A4: return "a4";
        case ModelCurve::D1: return "de1";
        case ModelCurve::D2: return "de2";
        case ModelCurve::D3: return "de3";
        case ModelCurve::D4: return "de4";
        case ModelCurve::D5: return "de5";
    }
    return "?";
}

CurveRef CurveRef::boundary(int vertex, int index) {
    CurveRef c;
    c.kind = Kind::Boundary;
    c.vertex = vertex;
    c.index = index;
    return c;
}

CurveRef CurveRef::edge_core(int ea, int eb, int copy) {
    CurveRef c;
    c.kind = Kind::EdgeCore;
    c.ea = ea;
    c.eb = eb;
    c.copy = copy;
    return c;
}

CurveRef CurveRef::model_curve(ModelCurve m) {
    CurveRef c;
    c.kind = Kind::Model;
    c.model = m;
    return c;
}

bool CurveRef::is_boundary_parallel() const {
    if (kind == Kind::Boundary) return true;
    if (kind != Kind::Model) return false;
    switch (model) {
        case ModelCurve::Delta:
        case ModelCurve::D1:
        case ModelCurve::D2:
        case ModelCurve::D3:
        case ModelCurve::D4:
        case ModelCurve::D5: return true;
        default: return false;
    }
}

std::string curve_name(const CurveRef& c) {
    std::ostringstream out;
    switch (c.kind) {
        case CurveRef::Kind::Boundary:
            out << "d[" << c.vertex << ',' << c.index << ']';
            break;
        case CurveRef::Kind::EdgeCore:
            out << "c[" << c.ea << ',' << c.eb << ',' << c.copy << ']';
            break;
        case CurveRef::Kind::Model:
            out << model_curve_name(c.model);
            break;
    }
    return out.str();
}

std::string word_to_string(const TwistWord& w) {
    std::ostringstream out;
    bool first = true;
    for (const auto& f : w.factors) {
        if (!first) out << ' ';
        first = false;
        out << "T(" << curve_name(f.curve) << ')';
        if (f.exponent != 1) out << '^' << f.exponent;
    }
    return out.str();
}

FractionalTwistPlan fractional_plan(const PlumbingGraph& g, const CycleData& cycle) {
    const int q = g.size();
    if (static_cast<int>(cycle.m.size()) != q || static_cast<int>(cycle.n.size()) != q)
        throw std::invalid_argument("cycle/graph size mismatch");
    FractionalTwistPlan plan;
    for (int i = 0; i < q; ++i)
        for (long long t = 1; t <= cycle.n[i]; ++t) {
            FractionalTwistEntry e;
            e.binding = true;
            e.vertex = i + 1;
            e.index = static_cast<int>(t);
            e.root_order = cycle.m[i];
            e.target = CurveRef::boundary(i + 1, static_cast<int>(t));
            plan.entries.push_back(e);
        }
    for (auto [a, b] : g.edges) {
        const long long gc = std::gcd(cycle.m[a], cycle.m[b]);
        for (long long l = 1; l <= gc; ++l) {
            FractionalTwistEntry e;
            e.binding = false;
            e.ea = a + 1;
            e.eb = b + 1;
            e.copy = static_cast<int>(l);
            e.root_order = cycle.m[a] / gc * cycle.m[b];
            e.target = CurveRef::edge_core(a + 1, b + 1, static_cast<int>(l));
            plan.entries.push_back(e);
        }
    }
    return plan;
}

namespace {

void push(TwistWord& w, CurveRef c, long long exp = 1) {
    if (exp != 0) w.factors.push_back({c, exp});
}

void push_group(TwistWord& w, const std::vector<TwistFactor>& group, int times) {
    for (int i = 0; i < times; ++i)
        for (const auto& f : group) w.factors.push_back(f);
}

TwistFactor M(ModelCurve c, long long exp = 1) { return {CurveRef::model_curve(c), exp}; }

// Planar star-family word: every annulus contributes one twist about its
// core; cores passing through two-circle pieces are isotopic to each other
// and to binding cores, so their twists merge. Boundary twists come first in
// vertex order, surviving edge cores after in edge order.
TwistWord star_planar_word(const PlumbingGraph& g, const CycleData& cycle) {
    const int q = g.size();
    auto valency = g.valencies();

    struct Annulus {
        bool binding;
        int vertex, t;  // binding
        int edge;       // index into g.edges
    };
    std::vector<Annulus> annuli;
    std::vector<std::vector<int>> at_vertex(q);  // incident annulus ids
    for (int i = 0; i < q; ++i)
        for (long long t = 1; t <= cycle.n[i]; ++t) {
            at_vertex[i].push_back(static_cast<int>(annuli.size()));
            annuli.push_back({true, i, static_cast<int>(t), -1});
        }
    for (size_t e = 0; e < g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        at_vertex[a].push_back(static_cast<int>(annuli.size()));
        at_vertex[b].push_back(static_cast<int>(annuli.size()));
        annuli.push_back({false, -1, -1, static_cast<int>(e)});
    }

    std::vector<int> parent(annuli.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < q; ++i) {
        const long long circles = valency[i] + cycle.n[i];
        if (circles == 2 && at_vertex[i].size() == 2)
            parent[find(at_vertex[i][0])] = find(at_vertex[i][1]);
    }

    struct ClassInfo {
        int binding_vertex = -1, binding_t = 0;
        int lowest_edge = -1;
        long long count = 0;
    };
    std::map<int, ClassInfo> classes;
    for (size_t a = 0; a < annuli.size(); ++a) {
        auto& ci = classes[find(static_cast<int>(a))];
        ++ci.count;
        if (annuli[a].binding) {
            if (ci.binding_vertex < 0 || std::pair(annuli[a].vertex, annuli[a].t) <
                                             std::pair(ci.binding_vertex, ci.binding_t)) {
                ci.binding_vertex = annuli[a].vertex;
                ci.binding_t = annuli[a].t;
            }
        } else if (ci.lowest_edge < 0 || annuli[a].edge < ci.lowest_edge) {
            ci.lowest_edge = annuli[a].edge;
        }
    }

    std::vector<std::pair<std::pair<int, int>, long long>> boundary_factors;
    std::vector<std::pair<int, long long>> core_factors;
    for (auto& [root, ci] : classes) {
        if (ci.binding_vertex >= 0)
            boundary_factors.push_back({{ci.binding_vertex, ci.binding_t}, ci.count});
        else
            core_factors.push_back({ci.lowest_edge, ci.count});
    }
    std::sort(boundary_factors.begin(), boundary_factors.end());
    std::sort(core_factors.begin(), core_factors.end());

    TwistWord w;
    for (auto& [key, count] : boundary_factors)
        push(w, CurveRef::boundary(key.first + 1, key.second), count);
    for (auto& [edge, count] : core_factors) {
        auto [a, b] = g.edges[edge];
        push(w, CurveRef::edge_core(a + 1, b + 1, 1), count);
    }
    return w;
}

TwistWord star_genus_one_word(Family family, int variant) {
    using MC = ModelCurve;
    TwistWord w;
    switch (family) {
        case Family::Tetrahedral:
            switch (variant) {
                case 1:
                    push_group(w, {M(MC::Alpha), M(MC::Beta)}, 4);
                    return w;
                case 2:
                    push(w, CurveRef::boundary(1, 1));
                    push_group(w, {M(MC::A1), M(MC::A2), M(MC::Beta)}, 2);
                    push(w, CurveRef::model_curve(MC::A2));
                    return w;
                case 3:
                    push(w, CurveRef::boundary(1, 1));
                    push(w, CurveRef::boundary(3, 1));
                    push_group(w, {M(MC::A1), M(MC::A3), M(MC::Beta), M(MC::A2), M(MC::A3), M(MC::Beta)}, 1);
                    return w;
            }
            break;
        case Family::Octahedral:
            switch (variant) {
                case 1:
                    push(w, CurveRef::model_curve(MC::Beta));
                    push_group(w, {M(MC::Alpha), M(MC::Beta)}, 4);
                    return w;
                case 2:
                    push(w, CurveRef::model_curve(MC::D2));
                    push(w, CurveRef::model_curve(MC::A1));
                    push(w, CurveRef::model_curve(MC::A2));
                    push_group(w, {M(MC::A1), M(MC::A2), M(MC::Beta)}, 2);
                    return w;
                case 3:
                    push(w, CurveRef::model_curve(MC::D1));
                    push(w, CurveRef::model_curve(MC::D2));
                    push_group(w, {M(MC::A1), M(MC::A2), M(MC::Beta), M(MC::A1), M(MC::A2), M(MC::Beta), M(MC::A2)}, 1);
                    return w;
                case 4:
                    push(w, CurveRef::model_curve(MC::D1));
                    push(w, CurveRef::model_curve(MC::D2));
                    push(w, CurveRef::model_curve(MC::D4));
                    push_group(w, {M(MC::A1), M(MC::A3), M(MC::Beta), M(MC::A2), M(MC::A3), M(MC::Beta)}, 1);
                    return w;
            }
            break;
        case Family::Icosahedral:
            switch (variant) {
                case 1:
                    push_group(w, {M(MC::Alpha), M(MC::Beta)}, 5);
                    return w;
                case 2:
                    push(w, CurveRef::model_curve(MC::D1));
                    push_group(w, {M(MC::A1), M(MC::A2, 2), M(MC::Beta)}, 2);
                    return w;
                case 3:
                    push(w, CurveRef::model_curve(MC::D2));
                    push(w, CurveRef::model_curve(MC::A1));
                    push(w, CurveRef::model_curve(MC::A2));
                    push_group(w, {M(MC::A1), M(MC::A2), M(MC::Beta), M(MC::A1), M(MC::A2), M(MC::Beta), M(MC::A2)}, 1);
                    return w;
                case 4:
                    push(w, CurveRef::model_curve(MC::D1), 2);
                    push_group(w, {M(MC::A1), M(MC::A2), M(MC::Beta), M(MC::A1), M(MC::A2), M(MC::Beta), M(MC::A2)}, 1);
                    return w;
                case 5:
                    push(w, CurveRef::model_curve(MC::D1));
                    push(w, CurveRef::model_curve(MC::D3));
                    push_group(w, {M(MC::A1), M(MC::A2), M(MC::A3), M(MC::Beta), M(MC::A2), M(MC::A3), M(MC::Beta)}, 1);
                    return w;
                case 6:
                    push(w, CurveRef::model_curve(MC::D1));
                    push(w, CurveRef::model_curve(MC::D2));
                    push_group(w, {M(MC::A1), M(MC::A2), M(MC::Beta), M(MC::A1), M(MC::A2), M(MC::Beta), M(MC::A2)}, 1);
                    return w;
                case 7:
                    push(w, CurveRef::model_curve(MC::D1), 2);
                    push(w, CurveRef::model_curve(MC::D3));
                    push_group(w, {M(MC::A1), M(MC::A3), M(MC::Beta), M(MC::A2), M(MC::A3), M(MC::Beta)}, 1);
                    return w;
                case 8:
                    push(w, CurveRef::model_curve(MC::D1));
                    push(w, CurveRef::model_curve(MC::D2));
                    push(w, CurveRef::model_curve(MC::D3));
                    push(w, CurveRef::model_curve(MC::D5));
                    push_group(w, {M(MC::A1), M(MC::A3), M(MC::Beta), M(MC::A2), M(MC::A3), M(MC::Beta)}, 1);
                    return w;
            }
            break;
        default: break;
    }
    throw std::invalid_argument("no genus-one catalog word for this spec");
}

std::vector<std::string> star_word_notes(Family family, int variant, int b) {
    std::vector<std::string> notes;
    if (family == Family::Octahedral && b > 2) {
        if (variant == 1)
            notes.push_back(
                "octahedral (i), b>2: traditional closed form carries a spurious trailing "
                "(T(d[6,1]))^2; the constructed word is emitted");
        if (variant == 3 || variant == 4)
            notes.push_back("octahedral (" + variant_roman(variant) +
                            "), b>2: traditional closed form mislabels its boundary twists; the "
                            "constructed word is emitted");
    }
    if (family == Family::Icosahedral && b > 2) {
        if (variant == 3)
            notes.push_back(
                "icosahedral (iii), b>2: traditional boundary count b+2 is inconsistent with the "
                "multiplicity data; N = b+1 is used");
        if (variant == 8)
            notes.push_back(
                "icosahedral (viii), b>2: repeated twist T(d[3,1]) T(d[3,1]) in the traditional "
                "form read as T(d[3,1]) T(d[3,2])");
    }
    if (family == Family::Octahedral && b == 2 && variant == 2)
        notes.push_back(
            "octahedral (ii), b=2: unbalanced parentheses in the traditional form; normalized "
            "reading T(de2) T(a1) T(a2) (T(a1) T(a2) T(be))^2");
    if (family == Family::Icosahedral && b == 2 && variant == 5)
        notes.push_back(
            "icosahedral (v), b=2: traditional boundary count 4 is inconsistent with the "
            "multiplicity data; N = 3 is used");
    return notes;
}

}  // namespace

CatalogWord catalog_word(const FamilySpec& spec) {
    const PlumbingGraph g = generate_family(spec);
    const CycleData cycle = fundamental_cycle(g);
    const PageTopology page = page_topology(g, cycle);

    CatalogWord result;
    result.page_genus = page.genus;

    if (spec.family == Family::Cyclic) {
        for (int i = 0; i < g.size(); ++i)
            for (long long t = 1; t <= cycle.n[i]; ++t)
                push(result.word, CurveRef::boundary(i + 1, static_cast<int>(t)));
        for (auto [a, b] : g.edges) push(result.word, CurveRef::edge_core(a + 1, b + 1, 1));
        return result;
    }

    if (spec.family == Family::Dihedral) {
        const int r = static_cast<int>(spec.chain.size()) + 1;
        if (spec.b > 2) {
            for (int i = 0; i < r; ++i)
                for (long long t = 1; t <= cycle.n[i]; ++t)
                    push(result.word, CurveRef::boundary(i + 1, static_cast<int>(t)));
            push(result.word, CurveRef::boundary(r + 1, 1), 2);
            push(result.word, CurveRef::boundary(r + 2, 1), 2);
            for (int i = 0; i + 1 < r; ++i)
                push(result.word, CurveRef::edge_core(i + 1, i + 2, 1));
            return result;
        }
        // b = 2: genus-one page
        int k = 0;  // largest 1-based chain index with entry > 2
        for (int i = 0; i < static_cast<int>(spec.chain.size()); ++i)
            if (spec.chain[i] > 2) k = i + 1;
        using MC = ModelCurve;
        if (k == 0) {
            // simple singularity: one-holed torus, (t_al t_be)^3 (t_al)^(r-2)
            push_group(result.word, {M(MC::Alpha), M(MC::Beta)}, 3);
            push(result.word, CurveRef::model_curve(MC::Alpha), r - 2);
            return result;
        }
        for (int i = 0; i < k; ++i)
            for (long long t = 1; t <= cycle.n[i]; ++t)
                push(result.word, CurveRef::boundary(i + 1, static_cast<int>(t)));
        for (int i = 0; i + 1 < k; ++i)
            push(result.word, CurveRef::edge_core(i + 1, i + 2, 1));
        push_group(result.word, {M(MC::A1), M(MC::A2), M(MC::Beta)}, 2);
        push(result.word, CurveRef::model_curve(MC::A2), r - k - 1);
        return result;
    }

    result.notes = star_word_notes(spec.family, spec.variant, spec.b);
    if (spec.b > 2) {
        result.word = star_planar_word(g, cycle);
        return result;
    }
    result.word = star_genus_one_word(spec.family, spec.variant);
    return result;
}

std::vector<long long> HomologyModel::class_of(const CurveRef& c) const {
    if (c.kind != CurveRef::Kind::Model)
        throw std::invalid_argument("curve " + curve_name(c) + " has no class in this model");
    std::vector<long long> v(rank, 0);
    const int k = boundary;
    auto boundary_class = [&](int j) {  // class of delta_j, 1-based
        if (j < 1 || j > k) throw std::invalid_argument("boundary index out of range for model");
        const int off = 2 * genus;
        if (j < k) {
            v[off + j - 1] = 1;
        } else {
            for (int i = 0; i < k - 1; ++i) v[off + i] = -1;
        }
    };
    auto chain_class = [&](int j) {  // class of alpha_j = a + d_1 + ... + d_{j-1}
        if (genus != 1) throw std::invalid_argument("no chain curves on a planar model");
        if (j < 1 || j > k) throw std::invalid_argument("chain index out of range for model");
        v[0] = 1;
        for (int i = 0; i < j - 1; ++i) v[2 + i] = 1;
    };
    switch (c.model) {
        case ModelCurve::Alpha: chain_class(1); break;
        case ModelCurve::Beta:
            if (genus != 1) throw std::invalid_argument("no beta curve on a planar model");
            v[1] = 1;
            break;
        case ModelCurve::Delta:
            if (genus != 1 || k != 1)
                throw std::invalid_argument("delta lives on the one-holed torus model");
            break;  // null-homologous
        case ModelCurve::A1: chain_class(1); break;
        case ModelCurve::A2: chain_class(2); break;
        case ModelCurve::A3: chain_class(3); break;
        case ModelCurve::A4: chain_class(4); break;
        case ModelCurve::D1: boundary_class(1); break;
        case ModelCurve::D2: boundary_class(2); break;
        case ModelCurve::D3: boundary_class(3); break;
        case ModelCurve::D4: boundary_class(4); break;
        case ModelCurve::D5: boundary_class(5); break;
    }
    return v;
}

HomologyModel torus_model(int boundary_count) {
    if (boundary_count < 1) throw std::invalid_argument("torus model needs >= 1 boundary");
    HomologyModel m;
    m.genus = 1;
    m.boundary = boundary_count;
    m.rank = 2 + (boundary_count - 1);
    m.basis = {"a", "b"};
    for (int j = 1; j < boundary_count; ++j) m.basis.push_back("d" + std::to_string(j));
    m.pairing.assign(m.rank, std::vector<long long>(m.rank, 0));
    m.pairing[0][1] = 1;
    m.pairing[1][0] = -1;
    return m;
}

HomologyModel planar_model(int boundary_count) {
    if (boundary_count < 1) throw std::invalid_argument("planar model needs >= 1 boundary");
    HomologyModel m;
    m.genus = 0;
    m.boundary = boundary_count;
    m.rank = boundary_count - 1;
    for (int j = 1; j < boundary_count; ++j) m.basis.push_back("d" + std::to_string(j));
    m.pairing.assign(m.rank, std::vector<long long>(m.rank, 0));
    return m;
}

std::vector<Relation> relation_library() {
    using MC = ModelCurve;
    auto word = [](std::initializer_list<TwistFactor> fs) {
        TwistWord w;
        w.factors = fs;
        return w;
    };
    auto pow_word = [](std::initializer_list<TwistFactor> fs, int p) {
        TwistWord w;
        for (int i = 0; i < p; ++i)
            for (const auto& f : fs) w.factors.push_back(f);
        return w;
    };
    std::vector<Relation> out;
    out.push_back({"one_holed", word({M(MC::Delta)}), pow_word({M(MC::Alpha), M(MC::Beta)}, 6), 1});
    out.push_back({"two_holed_1", word({M(MC::D1), M(MC::D2)}),
                   pow_word({M(MC::A1), M(MC::A2), M(MC::Beta)}, 4), 2});
    out.push_back({"two_holed_2", word({M(MC::D1), M(MC::D2)}),
                   pow_word({M(MC::A1), M(MC::A2), M(MC::A2), M(MC::Beta)}, 3), 2});
    out.push_back({"two_holed_3", word({M(MC::D1), M(MC::D2)}),
                   pow_word({M(MC::A1), M(MC::A2), M(MC::Beta), M(MC::A2), M(MC::A2), M(MC::Beta)}, 2),
                   2});
    out.push_back({"three_holed_1", word({M(MC::D1), M(MC::D2), M(MC::D3)}),
                   pow_word({M(MC::A1), M(MC::A2), M(MC::A3), M(MC::Beta)}, 3), 3});
    out.push_back({"three_holed_2", word({M(MC::D1), M(MC::D2), M(MC::D3)}),
                   pow_word({M(MC::A1), M(MC::A3), M(MC::Beta), M(MC::A2), M(MC::A3), M(MC::Beta)}, 2),
                   3});
    out.push_back({"four_holed", word({M(MC::D1), M(MC::D2), M(MC::D3), M(MC::D4)}),
                   pow_word({M(MC::A1), M(MC::A3), M(MC::Beta), M(MC::A2), M(MC::A4), M(MC::Beta)}, 2),
                   4});
    return out;
}

ActionMatrix identity_matrix(int rank) {
    ActionMatrix m(rank, std::vector<long long>(rank, 0));
    for (int i = 0; i < rank; ++i) m[i][i] = 1;
    return m;
}

namespace {

ActionMatrix matmul(const ActionMatrix& a, const ActionMatrix& b) {
    const int n = static_cast<int>(a.size());
    ActionMatrix out(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

}  // namespace

ActionMatrix homology_action(const TwistWord& w, const HomologyModel& model) {
    const int n = model.rank;
    ActionMatrix result = identity_matrix(n);
    for (const auto& f : w.factors) {
        const auto c = model.class_of(f.curve);
        std::vector<long long> jc(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) jc[i] += model.pairing[i][j] * c[j];
        // transvection^e = I + e * c * (J c)^T ... with <x,c> = x^T (J c)
        ActionMatrix t = identity_matrix(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t[i][j] += f.exponent * c[i] * jc[j];
        result = matmul(t, result);  // leftmost factor applied first
    }
    return result;
}

std::vector<RelationCheck> verify_relations() {
    std::vector<RelationCheck> out;
    for (const auto& rel : relation_library()) {
        const auto model = torus_model(rel.model_boundary);
        out.push_back({rel.name, homology_action(rel.left, model) ==
                                     homology_action(rel.right, model)});
    }
    return out;
}

BoundaryProfile word_boundary_profile(const TwistWord& w, const PageTopology& page,
                                      const CycleData* cycle) {
    BoundaryProfile profile;
    for (const auto& f : w.factors) {
        if (!f.curve.is_boundary_parallel()) continue;
        if (f.curve.kind == CurveRef::Kind::Boundary && cycle) {
            const int v = f.curve.vertex;
            if (v < 1 || v > static_cast<int>(cycle->n.size()))
                throw std::out_of_range("boundary curve names vertex " + std::to_string(v) +
                                        " outside the graph");
            if (f.curve.index < 1 || f.curve.index > cycle->n[v - 1])
                throw std::out_of_range("boundary curve " + curve_name(f.curve) +
                                        " exceeds n_" + std::to_string(v) + " = " +
                                        std::to_string(cycle->n[v - 1]));
        }
        if (f.curve.kind == CurveRef::Kind::Model) {
            int j = 0;
            switch (f.curve.model) {
                case ModelCurve::Delta: j = 1; break;
                case ModelCurve::D1: j = 1; break;
                case ModelCurve::D2: j = 2; break;
                case ModelCurve::D3: j = 3; break;
                case ModelCurve::D4: j = 4; break;
                case ModelCurve::D5: j = 5; break;
                default: break;
            }
            if (j > page.boundary_count)
                throw std::out_of_range("boundary curve " + curve_name(f.curve) +
                                        " exceeds the page boundary count " +
                                        std::to_string(page.boundary_count));
        }
        profile.counts[f.curve] += f.exponent;
    }
    profile.distinct_curves = static_cast<long long>(profile.counts.size());
    if (profile.distinct_curves > page.boundary_count)
        throw std::out_of_range("word references more boundary curves than the page has");
    return profile;
}

}  // namespace plumbook
