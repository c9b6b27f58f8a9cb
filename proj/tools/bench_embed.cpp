// Benchmarks the serial embedding search against the OpenMP branch-parallel
// mode on representative catalog lattices and checks they agree.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "plumbook/lattice.hpp"
#include "plumbook/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace plumbook;

namespace {

double seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Case {
    std::string name;
    PlumbingGraph graph;
};

std::vector<Case> bench_cases() {
    std::vector<Case> cases;
    auto add = [&](std::string name, const FamilySpec& spec) {
        cases.push_back({std::move(name), generate_family(spec)});
    };
    FamilySpec e8{Family::Icosahedral, 1, 2, {}, {}};
    add("icosahedral(i) b=2 (E8, infeasible)", e8);
    FamilySpec e7{Family::Octahedral, 1, 2, {}, {}};
    add("octahedral(i) b=2 (E7, infeasible)", e7);
    FamilySpec ico6{Family::Icosahedral, 1, 6, {}, {}};
    add("icosahedral(i) b=6", ico6);
    FamilySpec dih{Family::Dihedral, 0, 6, {5, 5, 5, 5}, {}};
    add("dihedral [5,5,5,5] b=6", dih);
    FamilySpec dih2{Family::Dihedral, 0, 2, {5, 2, 2, 2}, {}};
    add("dihedral [5,2,2,2] b=2", dih2);
    FamilySpec ico2{Family::Icosahedral, 2, 2, {}, {}};
    add("icosahedral(ii) b=2 (infeasible)", ico2);
    FamilySpec cyc{Family::Cyclic, 0, 0, {5, 5, 5, 5, 5}, {}};
    add("cyclic [5,5,5,5,5]", cyc);
    // obstructed -2 star buried under a heavy chain: forces a deep exhaustion
    cases.push_back({"two-tailed star + heavy chain (infeasible)",
                     make_graph({-5, -5, -5, -2, -2, -2, -2, -2, -2},
                                {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}, {7, 8}})});
    return cases;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel mode falls back to serial\n");
#endif
    std::printf("%-40s %12s %12s %8s %s\n", "case", "serial [s]", "parallel [s]", "speedup",
                "verdicts");
    bool all_agree = true;
    for (const auto& c : bench_cases()) {
        Lattice lattice = lattice_of(c.graph);

        auto t0 = std::chrono::steady_clock::now();
        LatticeVerdict serial = find_embedding(lattice);
        const double ts = seconds(t0);

        EmbedOptions par;
        par.parallel = true;
        t0 = std::chrono::steady_clock::now();
        LatticeVerdict parallel = find_embedding(lattice, par);
        const double tp = seconds(t0);

        const bool agree = serial.embeddable == parallel.embeddable &&
                           serial.embedding == parallel.embedding;
        all_agree = all_agree && agree;
        std::printf("%-40s %12.4f %12.4f %8.2f %s%s\n", c.name.c_str(), ts, tp,
                    tp > 0 ? ts / tp : 0.0, serial.embeddable ? "embeddable" : "not embeddable",
                    agree ? "" : "  MISMATCH");
    }
    if (!all_agree) {
        std::printf("serial/parallel results disagree\n");
        return 1;
    }
    return 0;
}
