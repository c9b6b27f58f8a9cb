#include "plumbook/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace plumbook {

const char* support_genus_name(SupportGenus g) {
    switch (g) {
        case SupportGenus::Zero: return "support_genus_0";
        case SupportGenus::One: return "support_genus_1";
        case SupportGenus::AtMostOne: return "support_genus_at_most_1";
    }
    return "?";
}

SupportGenus classify(const PageTopology& page, const LatticeVerdict& verdict) {
    if (page.genus == 0) return SupportGenus::Zero;
    if (page.genus == 1) {
        if (!verdict.embeddable && verdict.complete) return SupportGenus::One;
        return SupportGenus::AtMostOne;
    }
    throw std::domain_error("page genus " + std::to_string(page.genus) +
                            " is outside the catalog classification");
}

std::optional<FamilySpec> recognize_family(const PlumbingGraph& g) {
    auto matches = [&](const FamilySpec& spec) -> bool {
        try {
            return generate_family(spec) == g;
        } catch (const std::invalid_argument&) {
            return false;
        }
    };
    const int q = g.size();
    if (q == 0) return std::nullopt;

    {  // cyclic: chain read off the vertex order
        FamilySpec spec;
        spec.family = Family::Cyclic;
        for (int w : g.weights) spec.chain.push_back(-w);
        if (matches(spec)) return spec;
    }
    if (q >= 4) {  // dihedral: chain, center at q-3, two leaves
        FamilySpec spec;
        spec.family = Family::Dihedral;
        for (int i = 0; i + 3 < q; ++i) spec.chain.push_back(-g.weights[i]);
        spec.b = -g.weights[q - 3];
        if (matches(spec)) return spec;
    }
    for (Family f : {Family::Tetrahedral, Family::Octahedral, Family::Icosahedral})
        for (int variant = 1; variant <= family_variant_count(f); ++variant) {
            const auto& shape = detail::star_shape(f, variant);
            const int expect = static_cast<int>(shape.left.size() + shape.right.size()) + 2;
            if (q != expect) continue;
            FamilySpec spec;
            spec.family = f;
            spec.variant = variant;
            spec.b = -g.weights[shape.left.size()];
            if (matches(spec)) return spec;
        }
    return std::nullopt;
}

std::string spec_to_string(const FamilySpec& spec) {
    std::ostringstream out;
    out << family_name(spec.family);
    if (spec.variant > 0) out << " (" << variant_roman(spec.variant) << ')';
    if (!spec.chain.empty()) {
        out << " [";
        for (size_t i = 0; i < spec.chain.size(); ++i) {
            if (i) out << ',';
            out << spec.chain[i];
        }
        out << ']';
    }
    if (spec.family != Family::Cyclic) out << " b=" << spec.b;
    return out.str();
}

AnalysisReport analyze_graph(const PlumbingGraph& g, const AnalyzeOptions& opts) {
    if (g.size() == 0) throw std::invalid_argument("graph has no vertices");
    if (!g.connected()) throw std::invalid_argument("graph is not connected");
    auto im = intersection_matrix(g);
    if (!is_negative_definite(im))
        throw std::invalid_argument("intersection matrix is not negative definite");

    AnalysisReport rep;
    rep.graph = g;
    const bool overridden = opts.multiplicities.has_value();
    rep.cycle = overridden ? cycle_from_multiplicities(g, *opts.multiplicities)
                           : fundamental_cycle(g);
    rep.pieces = piece_inventory(g, rep.cycle);
    rep.page = page_topology(g, rep.cycle);
    rep.plan = fractional_plan(g, rep.cycle);
    if (!overridden) {
        rep.family = recognize_family(g);
        if (rep.family) {
            rep.word = catalog_word(*rep.family);
            if (rep.page.genus == 0)
                word_boundary_profile(rep.word->word, rep.page, &rep.cycle);
            for (const auto& note : rep.word->notes) rep.notes.push_back(note);
        }
    }
    EmbedOptions eopts;
    eopts.parallel = opts.parallel_embedding;
    rep.verdict = find_embedding(Lattice{std::move(im)}, eopts);
    if (rep.verdict.embeddable) {
        Lattice check{intersection_matrix(g)};
        if (!verify_embedding(check, *rep.verdict.embedding))
            throw std::runtime_error("embedding certificate failed independent verification");
    }
    if (overridden) {
        rep.classification = std::nullopt;
        rep.notes.push_back("multiplicity override: no minimality or classification claims");
        return rep;
    }
    try {
        rep.classification = classify(rep.page, rep.verdict);
    } catch (const std::domain_error& e) {
        rep.classification = std::nullopt;
        rep.notes.push_back(e.what());
    }
    return rep;
}

namespace {

std::string annulus_name(const FractionalTwistEntry& e) {
    std::ostringstream out;
    if (e.binding)
        out << "U[" << e.vertex << ',' << e.index << ']';
    else
        out << "U[" << e.ea << ',' << e.eb << ',' << e.copy << ']';
    return out.str();
}

nlohmann::json lattice_json(const LatticeVerdict& verdict, std::optional<long long> count = {}) {
    nlohmann::json j;
    if (verdict.embeddable) {
        j["verdict"] = "embeddable";
        j["ambient_dim"] = verdict.embedding->ambient_dim;
        j["vectors"] = verdict.embedding->vectors;
    } else {
        j["verdict"] = "not_embeddable";
        j["max_dim_searched"] = verdict.max_dim_searched;
        if (!verdict.complete) j["complete"] = false;
    }
    if (count) j["count"] = *count;
    return j;
}

}  // namespace

std::string report_to_json(const AnalysisReport& rep) {
    nlohmann::json j;
    j["tool_version"] = kToolVersion;
    j["format_version"] = kReportFormatVersion;
    j["graph"] = nlohmann::json::parse(graph_to_json(rep.graph));
    j["m"] = rep.cycle.m;
    j["n"] = rep.cycle.n;
    j["pieces"] = nlohmann::json::array();
    for (const auto& p : rep.pieces.vertices)
        j["pieces"].push_back({{"vertex", p.vertex},
                               {"components", p.components},
                               {"genus", p.genus_per_component},
                               {"boundary", p.boundary}});
    j["page"] = {{"genus", rep.page.genus},
                 {"boundary", rep.page.boundary_count},
                 {"euler", rep.page.euler}};
    nlohmann::json mono;
    mono["fractional_plan"] = nlohmann::json::array();
    for (const auto& e : rep.plan.entries)
        mono["fractional_plan"].push_back({{"annulus", annulus_name(e)},
                                           {"root_order", e.root_order},
                                           {"target", curve_name(e.target)}});
    if (rep.family) mono["family"] = spec_to_string(*rep.family);
    if (rep.word) mono["catalog_word"] = word_to_string(rep.word->word);
    j["monodromy"] = std::move(mono);
    j["lattice"] = lattice_json(rep.verdict);
    if (rep.classification)
        j["classification"] = support_genus_name(*rep.classification);
    else
        j["classification"] = nullptr;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j.dump(2);
}

std::string report_to_text(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "graph: " << rep.graph.size() << " vertices, " << rep.graph.edges.size()
        << " edges\n";
    if (rep.family) out << "family: " << spec_to_string(*rep.family) << '\n';
    out << "m:";
    for (auto v : rep.cycle.m) out << ' ' << v;
    out << "\nn:";
    for (auto v : rep.cycle.n) out << ' ' << v;
    out << "\npage: genus " << rep.page.genus << ", boundary " << rep.page.boundary_count
        << ", euler " << rep.page.euler << '\n';
    out << "pieces:\n";
    for (const auto& p : rep.pieces.vertices)
        out << "  vertex " << p.vertex << ": components " << p.components << ", genus "
            << p.genus_per_component << ", boundary " << p.boundary << ", euler " << p.euler
            << '\n';
    if (rep.word) out << "catalog word: " << word_to_string(rep.word->word) << '\n';
    out << "fractional plan:\n";
    for (const auto& e : rep.plan.entries)
        out << "  (phi|" << annulus_name(e) << ")^" << e.root_order << " = T("
            << curve_name(e.target) << ")\n";
    if (rep.verdict.embeddable) {
        out << "lattice: embeddable in dimension " << rep.verdict.embedding->ambient_dim << '\n';
        for (const auto& row : rep.verdict.embedding->vectors) {
            out << "  ";
            for (int v : row) out << v << ' ';
            out << '\n';
        }
    } else {
        out << "lattice: not embeddable (searched dimension " << rep.verdict.max_dim_searched
            << (rep.verdict.complete ? ", sufficient bound" : ", incomplete") << ")\n";
    }
    out << "classification: "
        << (rep.classification ? support_genus_name(*rep.classification) : "unavailable") << '\n';
    for (const auto& note : rep.notes) out << "note: " << note << '\n';
    return out.str();
}

PlumbingGraph load_graph_text(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return graph_from_json(text);
        break;
    }
    return parse_graph(text);
}

namespace {

std::optional<std::string> read_file(const std::string& path, std::string& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err = "cannot open '" + path + "'";
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int load_and_analyze(const std::string& path, AnalysisReport& rep, std::string& err,
                     const AnalyzeOptions& opts = {}) {
    std::string text;
    if (auto t = read_file(path, err))
        text = std::move(*t);
    else
        return 2;
    try {
        PlumbingGraph g = load_graph_text(text);
        rep = analyze_graph(g, opts);
        return 0;
    } catch (const ParseError& e) {
        err = std::string("parse: ") + e.what();
        return 2;
    } catch (const std::invalid_argument& e) {
        err = std::string("validate: ") + e.what();
        return 2;
    } catch (const std::runtime_error& e) {
        err = std::string("internal: ") + e.what();
        return 3;
    } catch (const std::exception& e) {
        err = std::string("internal: ") + e.what();
        return 3;
    }
}

}  // namespace

int run_analyze(const std::string& path, bool json, std::string& out, std::string& err,
                const AnalyzeOptions& opts) {
    AnalysisReport rep;
    int code = load_and_analyze(path, rep, err, opts);
    if (code != 0) return code;
    out = json ? report_to_json(rep) : report_to_text(rep);
    if (!rep.classification && !opts.multiplicities) {
        err = "classify: page genus outside the catalog classification";
        return 2;
    }
    return 0;
}

int run_classify(const std::string& path, std::string& out, std::string& err) {
    AnalysisReport rep;
    int code = load_and_analyze(path, rep, err);
    if (code != 0) return code;
    if (!rep.classification) {
        err = "classify: page genus outside the catalog classification";
        return 2;
    }
    out = support_genus_name(*rep.classification);
    return 0;
}

int run_embed(const std::string& path, int max_dim, bool count, bool json, std::string& out,
              std::string& err) {
    std::string text;
    if (auto t = read_file(path, err))
        text = std::move(*t);
    else
        return 2;
    try {
        PlumbingGraph g = load_graph_text(text);
        Lattice lattice = lattice_of(g);
        EmbedOptions opts;
        opts.max_dim = max_dim;
        LatticeVerdict verdict = find_embedding(lattice, opts);
        if (verdict.embeddable && !verify_embedding(lattice, *verdict.embedding)) {
            err = "internal: embedding certificate failed independent verification";
            return 3;
        }
        std::optional<long long> count_value;
        if (count) {
            opts.count_solution_budget = 100000;
            try {
                count_value = count_embeddings_up_to_symmetry(lattice, opts);
            } catch (const std::length_error&) {
                err = "count: more than 100000 embeddings enumerated; counting is only "
                      "practical for small lattices";
                return 2;
            }
        }
        if (json) {
            out = lattice_json(verdict, count_value).dump(2);
        } else {
            std::ostringstream text_out;
            if (verdict.embeddable) {
                text_out << "embeddable, ambient dimension " << verdict.embedding->ambient_dim
                         << '\n';
                for (const auto& row : verdict.embedding->vectors) {
                    text_out << "  ";
                    for (int v : row) text_out << v << ' ';
                    text_out << '\n';
                }
            } else {
                text_out << "not embeddable (searched dimension " << verdict.max_dim_searched
                         << (verdict.complete ? ", sufficient bound" : ", incomplete") << ")\n";
            }
            if (count_value) text_out << "embeddings up to symmetry: " << *count_value << '\n';
            out = text_out.str();
        }
        return 0;
    } catch (const ParseError& e) {
        err = std::string("parse: ") + e.what();
        return 2;
    } catch (const std::invalid_argument& e) {
        err = std::string("validate: ") + e.what();
        return 2;
    } catch (const std::runtime_error& e) {
        err = std::string("internal: ") + e.what();
        return 3;
    }
}

std::pair<long long, long long> closed_form_page(const FamilySpec& spec) {
    auto chain_sum = [&]() {
        long long s = 0;
        for (int b : spec.chain) s += b;
        return s;
    };
    switch (spec.family) {
        case Family::Cyclic: {
            const long long r = static_cast<long long>(spec.chain.size());
            return {0, chain_sum() - 2 * (r - 1)};
        }
        case Family::Dihedral: {
            const long long r = static_cast<long long>(spec.chain.size()) + 1;
            if (spec.b > 2) return {0, chain_sum() + spec.b - 2 * r + 2};
            long long k = 0;
            for (size_t i = 0; i < spec.chain.size(); ++i)
                if (spec.chain[i] > 2) k = static_cast<long long>(i) + 1;
            if (k == 0) return {1, 1};
            long long prefix = 0;
            for (long long i = 0; i < k; ++i) prefix += spec.chain[i];
            return {1, prefix - 2 * k + 1};
        }
        case Family::Tetrahedral: {
            static const long long off[] = {0, 1, 2};
            static const long long n2[] = {1, 2, 3};
            return spec.b > 2 ? std::pair<long long, long long>{0, spec.b + off[spec.variant - 1]}
                              : std::pair<long long, long long>{1, n2[spec.variant - 1]};
        }
        case Family::Octahedral: {
            static const long long off[] = {0, 1, 2, 3};
            static const long long n2[] = {1, 2, 3, 4};
            return spec.b > 2 ? std::pair<long long, long long>{0, spec.b + off[spec.variant - 1]}
                              : std::pair<long long, long long>{1, n2[spec.variant - 1]};
        }
        case Family::Icosahedral: {
            static const long long off[] = {0, 1, 1, 1, 2, 3, 2, 4};
            static const long long n2[] = {1, 2, 2, 2, 3, 4, 3, 5};
            return spec.b > 2 ? std::pair<long long, long long>{0, spec.b + off[spec.variant - 1]}
                              : std::pair<long long, long long>{1, n2[spec.variant - 1]};
        }
    }
    throw std::invalid_argument("unknown family");
}

std::vector<long long> closed_form_multiplicities(const FamilySpec& spec) {
    auto ones = [](size_t q) { return std::vector<long long>(q, 1); };
    switch (spec.family) {
        case Family::Cyclic: return ones(spec.chain.size());
        case Family::Dihedral: {
            const int r = static_cast<int>(spec.chain.size()) + 1;
            if (spec.b > 2) return ones(r + 2);
            int k = 0;
            for (size_t i = 0; i < spec.chain.size(); ++i)
                if (spec.chain[i] > 2) k = static_cast<int>(i) + 1;
            std::vector<long long> m(r + 2, 1);
            for (int i = std::max(k, 1); i < r; ++i) m[i] = 2;  // positions k+1..r (1-based)
            return m;
        }
        case Family::Tetrahedral: {
            if (spec.b > 2) return ones(detail::star_shape(spec.family, spec.variant).left.size() +
                                        detail::star_shape(spec.family, spec.variant).right.size() + 2);
            static const std::vector<std::vector<long long>> m2 = {
                {1, 2, 3, 2, 1, 2}, {1, 2, 2, 1, 1}, {1, 2, 1, 1}};
            return m2[spec.variant - 1];
        }
        case Family::Octahedral: {
            if (spec.b > 2) return ones(detail::star_shape(spec.family, spec.variant).left.size() +
                                        detail::star_shape(spec.family, spec.variant).right.size() + 2);
            static const std::vector<std::vector<long long>> m2 = {
                {1, 2, 3, 4, 3, 2, 2}, {1, 2, 2, 2, 1, 1}, {1, 2, 2, 1, 1}, {1, 2, 1, 1}};
            return m2[spec.variant - 1];
        }
        case Family::Icosahedral: {
            if (spec.b > 2) return ones(detail::star_shape(spec.family, spec.variant).left.size() +
                                        detail::star_shape(spec.family, spec.variant).right.size() + 2);
            static const std::vector<std::vector<long long>> m2 = {
                {2, 3, 4, 5, 6, 4, 2, 3}, {1, 2, 3, 2, 1, 2},    {1, 2, 2, 2, 2, 1, 1},
                {1, 1, 2, 2, 1, 1},       {1, 2, 2, 1, 1},       {1, 2, 2, 1, 1},
                {1, 1, 2, 1, 1},          {1, 2, 1, 1}};
            return m2[spec.variant - 1];
        }
    }
    throw std::invalid_argument("unknown family");
}

std::vector<FamilySpec> catalog_grid(const ReproduceOptions& opts) {
    std::vector<Family> families = opts.families;
    if (families.empty())
        families = {Family::Cyclic, Family::Dihedral, Family::Tetrahedral, Family::Octahedral,
                    Family::Icosahedral};
    std::vector<FamilySpec> grid;
    auto chains = [&](int max_len) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        std::function<void()> rec = [&]() {
            if (!cur.empty()) out.push_back(cur);
            if (static_cast<int>(cur.size()) == max_len) return;
            for (int b = 2; b <= opts.chain_entry_max; ++b) {
                cur.push_back(b);
                rec();
                cur.pop_back();
            }
        };
        rec();
        return out;
    };
    for (Family f : families) {
        switch (f) {
            case Family::Cyclic:
                for (auto& chain : chains(opts.chain_len_max)) {
                    FamilySpec spec;
                    spec.family = f;
                    spec.chain = chain;
                    grid.push_back(std::move(spec));
                }
                break;
            case Family::Dihedral:
                for (auto& chain : chains(opts.chain_len_max - 1))
                    for (int b = 2; b <= opts.b_max; ++b) {
                        FamilySpec spec;
                        spec.family = f;
                        spec.chain = chain;
                        spec.b = b;
                        grid.push_back(std::move(spec));
                    }
                break;
            default:
                for (int variant = 1; variant <= family_variant_count(f); ++variant)
                    for (int b = 2; b <= opts.b_max; ++b) {
                        FamilySpec spec;
                        spec.family = f;
                        spec.variant = variant;
                        spec.b = b;
                        grid.push_back(spec);
                    }
        }
    }
    return grid;
}

namespace {

SupportGenus expected_classification(const FamilySpec& spec) {
    if (spec.family == Family::Cyclic || spec.b > 2) return SupportGenus::Zero;
    const bool genus_one_exact =
        (spec.family == Family::Tetrahedral && spec.variant == 1) ||
        (spec.family == Family::Octahedral && spec.variant == 1) ||
        (spec.family == Family::Icosahedral && (spec.variant == 1 || spec.variant == 2));
    return genus_one_exact ? SupportGenus::One : SupportGenus::AtMostOne;
}

ReproduceCase check_case(const FamilySpec& spec) {
    ReproduceCase rc;
    rc.spec = spec;
    auto fail = [&](const std::string& msg) {
        rc.ok = false;
        rc.failures.push_back(msg);
    };
    try {
        const PlumbingGraph g = generate_family(spec);
        if (!g.is_tree()) fail("graph is not a tree");
        const CycleData cycle = fundamental_cycle(g);
        if (cycle.m != closed_form_multiplicities(spec))
            fail("fundamental cycle disagrees with the published multiplicities");
        const PageTopology page = page_topology(g, cycle);
        rc.genus = page.genus;
        rc.boundary = page.boundary_count;
        const auto [genus_expected, boundary_expected] = closed_form_page(spec);
        if (page.genus != genus_expected)
            fail("page genus " + std::to_string(page.genus) + " != closed form " +
                 std::to_string(genus_expected));
        if (page.boundary_count != boundary_expected)
            fail("boundary count " + std::to_string(page.boundary_count) + " != closed form " +
                 std::to_string(boundary_expected));

        const CatalogWord word = catalog_word(spec);
        rc.notes = word.notes;
        const BoundaryProfile profile = word_boundary_profile(word.word, page, &cycle);
        if (page.genus == 0) {
            if (profile.distinct_curves != page.boundary_count)
                fail("planar word references " + std::to_string(profile.distinct_curves) +
                     " boundary curves, page has " + std::to_string(page.boundary_count));
            for (const auto& f : word.word.factors)
                if (f.curve.kind == CurveRef::Kind::EdgeCore) {
                    const std::pair<int, int> e{f.curve.ea - 1, f.curve.eb - 1};
                    if (std::find(g.edges.begin(), g.edges.end(), e) == g.edges.end())
                        fail("word twists about a core of a nonexistent edge");
                    else if (std::gcd(cycle.m[e.first], cycle.m[e.second]) != 1 ||
                             cycle.m[e.first] * cycle.m[e.second] != 1)
                        fail("planar word uses an edge core with root order > 1");
                }
        }

        const bool fig12 = figure12_pattern_match(g);
        SupportGenus classification;
        if (page.genus == 0) {
            if (fig12) fail("planar page but obstruction pattern matched");
            classification = SupportGenus::Zero;
        } else {
            const LatticeVerdict verdict = find_embedding(lattice_of(g));
            if (verdict.embeddable) {
                Lattice lattice = lattice_of(g);
                if (!verify_embedding(lattice, *verdict.embedding))
                    fail("embedding certificate failed verification");
            }
            if (fig12 && verdict.embeddable)
                fail("obstruction pattern matched but an embedding was found");
            classification = classify(page, verdict);
            if (expected_classification(spec) != classification)
                fail(std::string("classification ") + support_genus_name(classification) +
                     " does not match the expected table");
        }
        rc.classification = classification;
    } catch (const std::exception& e) {
        fail(std::string("exception: ") + e.what());
    }
    return rc;
}

}  // namespace

ReproduceResult run_reproduce(const ReproduceOptions& opts) {
    ReproduceResult result;
    const auto grid = catalog_grid(opts);
    result.cases.resize(grid.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (opts.parallel)
#endif
    for (long long i = 0; i < static_cast<long long>(grid.size()); ++i)
        result.cases[i] = check_case(grid[i]);

    result.checked = static_cast<int>(result.cases.size());
    for (const auto& rc : result.cases)
        if (!rc.ok) ++result.failed;

    if (opts.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& rc : result.cases) {
            nlohmann::json c;
            c["spec"] = spec_to_string(rc.spec);
            c["genus"] = rc.genus;
            c["boundary"] = rc.boundary;
            c["classification"] = support_genus_name(rc.classification);
            c["ok"] = rc.ok;
            if (!rc.failures.empty()) c["failures"] = rc.failures;
            if (!rc.notes.empty()) c["notes"] = rc.notes;
            j.push_back(std::move(c));
        }
        result.rendered = j.dump(2);
        return result;
    }

    std::ostringstream out;
    std::map<std::string, std::array<long long, 5>> table;  // cases, sg0, sg1, sg<=1, failures
    std::vector<std::string> flagged;
    for (const auto& rc : result.cases) {
        auto& row = table[family_name(rc.spec.family)];
        ++row[0];
        switch (rc.classification) {
            case SupportGenus::Zero: ++row[1]; break;
            case SupportGenus::One: ++row[2]; break;
            case SupportGenus::AtMostOne: ++row[3]; break;
        }
        if (!rc.ok) ++row[4];
        for (const auto& note : rc.notes) {
            if (std::find(flagged.begin(), flagged.end(), note) == flagged.end())
                flagged.push_back(note);
        }
    }
    char line[128];
    std::snprintf(line, sizeof line, "%-13s %6s %6s %6s %6s %7s\n", "family", "cases", "sg=0",
                  "sg=1", "sg<=1", "failed");
    out << line;
    for (Family f : {Family::Cyclic, Family::Dihedral, Family::Tetrahedral, Family::Octahedral,
                     Family::Icosahedral}) {
        auto it = table.find(family_name(f));
        if (it == table.end()) continue;
        const auto& row = it->second;
        std::snprintf(line, sizeof line, "%-13s %6lld %6lld %6lld %6lld %7lld\n", family_name(f),
                      row[0], row[1], row[2], row[3], row[4]);
        out << line;
    }
    for (const auto& rc : result.cases)
        if (!rc.ok)
            for (const auto& f : rc.failures)
                out << "FAIL " << spec_to_string(rc.spec) << ": " << f << '\n';
    if (!flagged.empty()) {
        out << "catalog notes:\n";
        for (const auto& note : flagged) out << "  " << note << '\n';
    }
    out << (result.failed == 0 ? "all checks passed" : "checks FAILED") << " (" << result.checked
        << " cases)\n";
    result.rendered = out.str();
    return result;
}

}  // namespace plumbook
