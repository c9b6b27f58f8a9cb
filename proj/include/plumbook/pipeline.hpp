#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plumbook/cycle.hpp"
#include "plumbook/graph.hpp"
#include "plumbook/lattice.hpp"
#include "plumbook/monodromy.hpp"

namespace plumbook {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportFormatVersion = "1";

enum class SupportGenus { Zero, One, AtMostOne };

const char* support_genus_name(SupportGenus g);

// Support-genus trichotomy: a genus-0 page proves support genus 0; a genus-1
// page with no diagonal embedding proves support genus 1; a genus-1 page with
// an embedding leaves only the upper bound. Pages of genus >= 2 are outside
// the catalog guarantees and throw std::domain_error.
SupportGenus classify(const PageTopology& page, const LatticeVerdict& verdict);

// Exact match of the graph against a catalog shape (ids, weights, edges).
std::optional<FamilySpec> recognize_family(const PlumbingGraph& g);

std::string spec_to_string(const FamilySpec& spec);

struct AnalysisReport {
    PlumbingGraph graph;
    CycleData cycle;
    PieceInventory pieces;
    PageTopology page;
    FractionalTwistPlan plan;
    std::optional<FamilySpec> family;
    std::optional<CatalogWord> word;
    LatticeVerdict verdict;
    std::optional<SupportGenus> classification;  // absent when page genus >= 2
    std::vector<std::string> notes;
};

struct AnalyzeOptions {
    bool parallel_embedding = false;
    // Expert override: analyze a caller-supplied multiplicity vector instead
    // of the fundamental cycle. No minimality claims are made; the catalog
    // word and the support-genus classification are omitted.
    std::optional<std::vector<long long>> multiplicities;
};

// Full pipeline on a validated graph. Throws std::invalid_argument /
// ParseError for bad inputs, std::runtime_error for internal inconsistencies.
AnalysisReport analyze_graph(const PlumbingGraph& g, const AnalyzeOptions& opts = {});

std::string report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

// CLI entry points. Exit codes: 0 success, 2 invalid input, 3 internal
// consistency failure.
int run_analyze(const std::string& path, bool json, std::string& out, std::string& err,
                const AnalyzeOptions& opts = {});
int run_classify(const std::string& path, std::string& out, std::string& err);
int run_embed(const std::string& path, int max_dim, bool count, bool json, std::string& out,
              std::string& err);

// Reads either the line DSL or the JSON graph form (sniffs a leading '{').
PlumbingGraph load_graph_text(const std::string& text);

struct ReproduceOptions {
    std::vector<Family> families;  // empty = all five
    int b_max = 6;
    int chain_entry_max = 5;
    int chain_len_max = 5;  // max r for cyclic, max r for dihedral (r = len+1)
    bool json = false;
    bool parallel = true;
};

struct ReproduceCase {
    FamilySpec spec;
    long long genus = 0, boundary = 0;
    SupportGenus classification = SupportGenus::Zero;
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

struct ReproduceResult {
    std::vector<ReproduceCase> cases;
    int checked = 0;
    int failed = 0;
    std::string rendered;  // per-family tables or JSON
};

// Re-derives the catalog: closed-form page data, published multiplicity
// vectors, word boundary profiles, and the support-genus table, for the whole
// parameter grid. Any mismatch marks the case failed.
ReproduceResult run_reproduce(const ReproduceOptions& opts);

// Closed-form (genus, N) for a catalog spec, as stated family by family.
std::pair<long long, long long> closed_form_page(const FamilySpec& spec);

// The multiplicity vector the construction picks for a catalog spec.
std::vector<long long> closed_form_multiplicities(const FamilySpec& spec);

// Catalog parameter grid used by reproduce and the acceptance suite.
std::vector<FamilySpec> catalog_grid(const ReproduceOptions& opts);

}  // namespace plumbook
