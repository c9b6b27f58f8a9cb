// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion is checked exactly (integer equality throughout) and against
// its stated wall-clock budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "catalog_tables.hpp"
#include "oracles.hpp"
#include "plumbook/pipeline.hpp"

using namespace plumbook;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

FamilySpec star(Family f, int variant, int b) {
    FamilySpec s;
    s.family = f;
    s.variant = variant;
    s.b = b;
    return s;
}

std::vector<FamilySpec> default_grid() {
    ReproduceOptions opts;
    return catalog_grid(opts);
}

bool check_cycle_oracles(std::string& detail) {
    const auto grid = default_grid();
    int checked = 0;
    for (const auto& spec : grid) {
        auto g = generate_family(spec);
        if (g.size() > 8) continue;
        auto mstar = fundamental_cycle(g).m;
        if (!oracles::feasible(g, mstar)) {
            detail = "laufer output infeasible for " + spec_to_string(spec);
            return false;
        }
        if (g.size() <= 6) {
            auto minimal = oracles::minimal_feasible_full(g);
            if (minimal.size() != 1 || minimal.front() != mstar) {
                detail = "brute force disagrees for " + spec_to_string(spec);
                return false;
            }
        } else if (!oracles::no_feasible_below(g, mstar)) {
            detail = "smaller feasible vector exists for " + spec_to_string(spec);
            return false;
        }
        ++checked;
    }
    std::mt19937 rng(2024);
    for (int i = 0; i < 200; ++i) {
        auto g = oracles::random_negdef_tree(rng, 6);
        auto mstar = fundamental_cycle(g).m;
        auto minimal = oracles::minimal_feasible_full(g);
        if (minimal.size() != 1 || minimal.front() != mstar) {
            detail = "brute force disagrees on random tree " + std::to_string(i);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " graphs";
    return true;
}

bool check_mn_tables(std::string& detail) {
    int checked = 0;
    for (int b : {2, 3, 4, 5, 6})
        for (const auto& row : catalog_tables::star_rows(b)) {
            auto cycle = fundamental_cycle(generate_family(row.spec));
            if (cycle.m != row.m || cycle.n != row.n) {
                detail = "m/n mismatch for " + spec_to_string(row.spec);
                return false;
            }
            ++checked;
        }
    for (int b : {2, 3, 4, 5, 6})
        for (std::vector<int> chain :
             {std::vector<int>{2}, {3}, {5}, {4, 2}, {2, 5, 3}, {3, 2, 2, 4}, {2, 2, 2, 2}}) {
            auto row = catalog_tables::dihedral_row(chain, b);
            auto cycle = fundamental_cycle(generate_family(row.spec));
            if (cycle.m != row.m) {
                detail = "dihedral m mismatch for " + spec_to_string(row.spec);
                return false;
            }
            if (b > 2 && cycle.n != row.n) {
                detail = "dihedral n mismatch for " + spec_to_string(row.spec);
                return false;
            }
            ++checked;
        }
    for (std::vector<int> chain :
         {std::vector<int>{2}, {5}, {2, 3}, {5, 2, 2}, {2, 2, 2, 2, 2}, {3, 4, 5}}) {
        auto row = catalog_tables::cyclic_row(chain);
        auto cycle = fundamental_cycle(generate_family(row.spec));
        if (cycle.m != row.m || cycle.n != row.n) {
            detail = "cyclic m/n mismatch";
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " published vectors";
    return true;
}

bool check_page_tables(std::string& detail) {
    int checked = 0;
    for (const auto& spec : default_grid()) {
        auto g = generate_family(spec);
        auto page = page_topology(g, fundamental_cycle(g));
        auto [genus, boundary] = closed_form_page(spec);
        if (page.genus != genus || page.boundary_count != boundary) {
            detail = "page mismatch for " + spec_to_string(spec);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " pages";
    return true;
}

bool check_relations(std::string& detail) {
    for (const auto& check : verify_relations())
        if (!check.holds) {
            detail = "relation " + check.name + " fails on homology";
            return false;
        }
    auto model = torus_model(1);
    TwistWord ab;
    ab.factors = {{CurveRef::model_curve(ModelCurve::Alpha), 1},
                  {CurveRef::model_curve(ModelCurve::Beta), 1}};
    auto step = homology_action(ab, model);
    auto acc = identity_matrix(2);
    for (int power = 1; power <= 6; ++power) {
        ActionMatrix next(2, std::vector<long long>(2, 0));
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k)
                for (int j = 0; j < 2; ++j) next[i][j] += step[i][k] * acc[k][j];
        acc = next;
        const bool is_id = acc == identity_matrix(2);
        if (power < 6 && is_id) {
            detail = "(t_al t_be) has order < 6";
            return false;
        }
        if (power == 6 && !is_id) {
            detail = "(t_al t_be)^6 is not the identity";
            return false;
        }
    }
    detail = "7 relations, order check";
    return true;
}

bool check_lattice_verdicts(std::string& detail) {
    using clock = std::chrono::steady_clock;
    auto timed_embedding = [&](const Lattice& lattice, const char* what,
                               std::string& why) -> std::optional<LatticeVerdict> {
        auto t0 = clock::now();
        auto verdict = find_embedding(lattice);
        double dt = std::chrono::duration<double>(clock::now() - t0).count();
        if (dt >= 5.0) {
            why = std::string("search exceeded 5 s on ") + what;
            return std::nullopt;
        }
        return verdict;
    };

    // D4: embeddable with exactly one canonical embedding
    FamilySpec d4;
    d4.family = Family::Dihedral;
    d4.chain = {2};
    d4.b = 2;
    auto d4_lattice = lattice_of(generate_family(d4));
    auto d4_verdict = timed_embedding(d4_lattice, "D4", detail);
    if (!d4_verdict) return false;
    if (!d4_verdict->embeddable || !verify_embedding(d4_lattice, *d4_verdict->embedding)) {
        detail = "D4 must embed";
        return false;
    }
    if (count_embeddings_up_to_symmetry(d4_lattice) != 1) {
        detail = "D4 embedding is not unique up to symmetry";
        return false;
    }

    // the obstruction-pattern sublattice and the four catalog b=2 cases
    std::vector<std::pair<std::string, PlumbingGraph>> obstructed;
    obstructed.emplace_back("obstruction pattern",
                            make_graph({-2, -2, -2, -2, -2, -2},
                                       {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}}));
    obstructed.emplace_back("E6", generate_family(star(Family::Tetrahedral, 1, 2)));
    obstructed.emplace_back("E7", generate_family(star(Family::Octahedral, 1, 2)));
    obstructed.emplace_back("E8", generate_family(star(Family::Icosahedral, 1, 2)));
    obstructed.emplace_back("icosahedral (ii) b=2",
                            generate_family(star(Family::Icosahedral, 2, 2)));
    for (const auto& [name, g] : obstructed) {
        auto verdict = timed_embedding(lattice_of(g), name.c_str(), detail);
        if (!verdict) return false;
        if (verdict->embeddable || !verdict->complete) {
            detail = name + " must be non-embeddable with a complete search";
            return false;
        }
    }

    // every b >= 3 catalog graph embeds, Gram-verified
    int embedded = 0;
    for (const auto& spec : default_grid()) {
        if (spec.family == Family::Cyclic || spec.b < 3) continue;
        auto lattice = lattice_of(generate_family(spec));
        auto verdict = timed_embedding(lattice, spec_to_string(spec).c_str(), detail);
        if (!verdict) return false;
        if (!verdict->embeddable) {
            detail = spec_to_string(spec) + " should embed";
            return false;
        }
        if (!verify_embedding(lattice, *verdict->embedding)) {
            detail = spec_to_string(spec) + " certificate failed verification";
            return false;
        }
        ++embedded;
    }

    // naive-oracle agreement on small lattices (sum |w| <= 20)
    std::vector<PlumbingGraph> small = {
        make_graph({-2, -2}, {{0, 1}}),
        make_graph({-2, -2, -2}, {{0, 1}, {1, 2}}),
        make_graph({-2, -2, -2, -2, -2}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
        generate_family(d4),
        make_graph({-2, -2, -2, -2, -2}, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}),  // D5
        make_graph({-2, -2, -2, -2, -2, -2}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}),  // D6
        make_graph({-2, -2, -2, -2, -2, -2}, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}}),
        generate_family(star(Family::Tetrahedral, 1, 2)),
        generate_family(star(Family::Octahedral, 1, 2)),
        generate_family(star(Family::Icosahedral, 1, 2)),
        generate_family(star(Family::Icosahedral, 2, 2)),
        generate_family(star(Family::Tetrahedral, 2, 2)),
        generate_family(star(Family::Tetrahedral, 3, 3)),
    };
    std::mt19937 rng(99);
    while (small.size() < 18) {
        auto g = oracles::random_negdef_tree(rng, 5);
        long long total = 0;
        for (int w : g.weights) total += -w;
        if (total <= 20) small.push_back(g);
    }
    int agreed = 0;
    for (const auto& g : small) {
        if (!is_negative_definite(intersection_matrix(g))) continue;
        auto lattice = lattice_of(g);
        auto verdict = timed_embedding(lattice, "naive battery", detail);
        if (!verdict) return false;
        bool naive = oracles::naive_embeddable(lattice.gram, sufficient_ambient_dim(lattice));
        if (verdict->embeddable != naive) {
            detail = "naive oracle disagrees on " + serialize_graph(g);
            return false;
        }
        ++agreed;
    }
    detail = "D4 unique, 5 obstructions, " + std::to_string(embedded) + " certificates, " +
             std::to_string(agreed) + " oracle agreements";
    return true;
}

bool check_classification_table(std::string& detail) {
    ReproduceOptions opts;
    auto result = run_reproduce(opts);
    if (result.failed != 0) {
        for (const auto& rc : result.cases)
            if (!rc.ok) {
                detail = spec_to_string(rc.spec) + ": " + rc.failures.front();
                return false;
            }
    }
    // cross-check the four support-genus-one entries explicitly
    int genus_one = 0;
    for (const auto& rc : result.cases)
        if (rc.classification == SupportGenus::One) ++genus_one;
    if (genus_one != 4) {
        detail = "expected exactly 4 support-genus-one entries, found " +
                 std::to_string(genus_one);
        return false;
    }
    detail = std::to_string(result.checked) + " grid entries";
    return true;
}

bool check_word_catalog(std::string& detail) {
    int checked = 0;
    for (const auto& spec : default_grid()) {
        auto word = catalog_word(spec);
        auto g = generate_family(spec);
        auto cycle = fundamental_cycle(g);
        auto page = page_topology(g, cycle);
        BoundaryProfile profile;
        try {
            profile = word_boundary_profile(word.word, page, &cycle);
        } catch (const std::exception& e) {
            detail = spec_to_string(spec) + ": " + e.what();
            return false;
        }
        if (page.genus == 0) {
            if (profile.distinct_curves != page.boundary_count) {
                detail = spec_to_string(spec) + ": planar word misses boundary curves";
                return false;
            }
            if (spec.family == Family::Cyclic)
                for (const auto& [curve, count] : profile.counts)
                    if (count != 1) {
                        detail = "cyclic boundary twist repeated";
                        return false;
                    }
        }
        ++checked;
    }
    // the known misprints must be flagged
    const std::vector<FamilySpec> flagged = {
        star(Family::Octahedral, 1, 3),  star(Family::Octahedral, 3, 3),
        star(Family::Octahedral, 4, 3),  star(Family::Icosahedral, 3, 3),
        star(Family::Icosahedral, 8, 3), star(Family::Octahedral, 2, 2),
        star(Family::Icosahedral, 5, 2),
    };
    for (const auto& spec : flagged)
        if (catalog_word(spec).notes.empty()) {
            detail = spec_to_string(spec) + ": missing misprint note";
            return false;
        }
    detail = std::to_string(checked) + " words";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 fundamental-cycle oracle equivalence", 10.0, check_cycle_oracles},
        {"2 published m/n tables", 1.0, check_mn_tables},
        {"3 page tables over the full grid", 5.0, check_page_tables},
        {"4 torus relations on homology", 1.0, check_relations},
        {"5 lattice verdicts and oracle agreement", 300.0, check_lattice_verdicts},
        {"6 support-genus table", 60.0, check_classification_table},
        {"7 word catalog consistency", 1.0, check_word_catalog},
    };
    for (auto& criterion : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt > criterion.budget_seconds) {
            ok = false;
            detail += " [exceeded " + std::to_string(criterion.budget_seconds) + " s budget]";
        }
        std::printf("[%s] %-42s %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", criterion.name.c_str(),
                    ok ? "ok" : "failed", dt, detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}
