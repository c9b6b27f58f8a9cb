#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "plumbook/pipeline.hpp"

namespace {

int emit(int code, const std::string& out, const std::string& err) {
    if (!out.empty()) std::cout << out << (out.back() == '\n' ? "" : "\n");
    if (!err.empty()) std::cerr << "error: " << err << '\n';
    return code;
}

std::optional<plumbook::FamilySpec> build_spec(const std::string& family_name,
                                               const std::string& variant,
                                               const std::string& chain, const std::string& nq,
                                               int b, std::string& err) {
    using namespace plumbook;
    auto family = family_from_name(family_name);
    if (!family) {
        err = "unknown family '" + family_name + "'";
        return std::nullopt;
    }
    FamilySpec spec;
    spec.family = *family;
    if (!variant.empty()) {
        auto v = variant_from_string(variant, *family);
        if (!v) {
            err = "invalid variant '" + variant + "' for " + family_name;
            return std::nullopt;
        }
        spec.variant = *v;
    } else if (family_variant_count(*family) > 0) {
        err = family_name + " requires --variant";
        return std::nullopt;
    }
    if (b > 0) spec.b = b;
    if (!chain.empty()) {
        std::string tok;
        std::istringstream in(chain);
        while (std::getline(in, tok, ',')) {
            try {
                spec.chain.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                err = "invalid chain entry '" + tok + "'";
                return std::nullopt;
            }
        }
    }
    if (!nq.empty()) {
        auto slash = nq.find('/');
        if (slash == std::string::npos) {
            err = "--nq expects N/Q";
            return std::nullopt;
        }
        try {
            spec.nq = {std::stoll(nq.substr(0, slash)), std::stoll(nq.substr(slash + 1))};
        } catch (const std::exception&) {
            err = "invalid --nq value '" + nq + "'";
            return std::nullopt;
        }
    }
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace plumbook;
    CLI::App app{"Milnor open books and planarity obstructions for quotient surface "
                 "singularity links"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "emit a catalog resolution graph");
    std::string gen_family, gen_variant, gen_chain, gen_nq, gen_out;
    int gen_b = 0;
    generate->add_option("--family", gen_family, "cyclic|dihedral|tetrahedral|octahedral|icosahedral")
        ->required();
    generate->add_option("--variant", gen_variant, "variant (i, ii, ...) for the star families");
    generate->add_option("--b", gen_b, "central weight b >= 2");
    generate->add_option("--chain", gen_chain, "comma-separated chain b_1,b_2,...");
    generate->add_option("--nq", gen_nq, "cyclic parameters N/Q");
    generate->add_option("-o,--output", gen_out, "output file (default stdout)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full pipeline report for a graph file");
    std::string analyze_path, analyze_mult;
    bool analyze_json = false;
    analyze->add_option("file", analyze_path, "graph file (DSL or JSON)")->required();
    analyze->add_flag("--json", analyze_json, "machine-readable JSON report");
    analyze->add_option("--multiplicities", analyze_mult,
                        "expert override m_1,m_2,... (no minimality claims)");

    // embed
    auto* embed = app.add_subcommand("embed", "diagonal-lattice embedding search");
    std::string embed_path;
    int embed_max_dim = 0;
    bool embed_count = false, embed_json = false;
    embed->add_option("file", embed_path, "graph file (DSL or JSON)")->required();
    embed->add_option("--max-dim", embed_max_dim, "cap the ambient dimension (expert)");
    embed->add_flag("--count", embed_count, "also count embeddings up to symmetry");
    embed->add_flag("--json", embed_json, "JSON output");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "support-genus classification only");
    std::string classify_path;
    classify_cmd->add_option("file", classify_path, "graph file (DSL or JSON)")->required();

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "re-derive the catalog tables as checks");
    std::string rep_families;
    int rep_bmax = 6;
    bool rep_json = false, rep_serial = false;
    reproduce->add_option("--families", rep_families, "comma-separated family list");
    reproduce->add_option("--bmax", rep_bmax, "largest central weight (default 6)");
    reproduce->add_flag("--json", rep_json, "JSON output");
    reproduce->add_flag("--serial", rep_serial, "disable OpenMP over grid items");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int cli_code = app.exit(e);
        return cli_code == 0 ? 0 : 2;
    }

    if (generate->parsed()) {
        std::string err;
        auto spec = build_spec(gen_family, gen_variant, gen_chain, gen_nq, gen_b, err);
        if (!spec) return emit(2, "", err);
        try {
            std::string text = serialize_graph(generate_family(*spec));
            if (gen_out.empty()) return emit(0, text, "");
            std::ofstream out(gen_out);
            if (!out) return emit(2, "", "cannot write '" + gen_out + "'");
            out << text;
            return 0;
        } catch (const std::invalid_argument& e) {
            return emit(2, "", e.what());
        }
    }
    if (analyze->parsed()) {
        AnalyzeOptions opts;
        if (!analyze_mult.empty()) {
            std::vector<long long> m;
            std::string tok;
            std::istringstream in(analyze_mult);
            while (std::getline(in, tok, ',')) {
                try {
                    m.push_back(std::stoll(tok));
                } catch (const std::exception&) {
                    return emit(2, "", "invalid multiplicity '" + tok + "'");
                }
            }
            opts.multiplicities = std::move(m);
        }
        std::string out, err;
        int code = run_analyze(analyze_path, analyze_json, out, err, opts);
        return emit(code, out, err);
    }
    if (embed->parsed()) {
        std::string out, err;
        int code = run_embed(embed_path, embed_max_dim, embed_count, embed_json, out, err);
        return emit(code, out, err);
    }
    if (classify_cmd->parsed()) {
        std::string out, err;
        int code = run_classify(classify_path, out, err);
        return emit(code, out, err);
    }
    if (reproduce->parsed()) {
        ReproduceOptions opts;
        opts.b_max = rep_bmax;
        opts.json = rep_json;
        opts.parallel = !rep_serial;
        if (!rep_families.empty()) {
            std::string tok;
            std::istringstream in(rep_families);
            while (std::getline(in, tok, ',')) {
                auto f = family_from_name(tok);
                if (!f) return emit(2, "", "unknown family '" + tok + "'");
                opts.families.push_back(*f);
            }
        }
        ReproduceResult result = run_reproduce(opts);
        std::cout << result.rendered;
        return result.failed == 0 ? 0 : 1;
    }
    return 2;
}
