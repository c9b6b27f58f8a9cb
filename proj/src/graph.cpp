#include "plumbook/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace plumbook {

std::vector<int> PlumbingGraph::valencies() const {
    std::vector<int> v(weights.size(), 0);
    for (auto [a, b] : edges) {
        ++v[a];
        ++v[b];
    }
    return v;
}

std::vector<std::vector<int>> PlumbingGraph::adjacency() const {
    std::vector<std::vector<int>> adj(weights.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

bool PlumbingGraph::connected() const {
    if (weights.empty()) return true;
    auto adj = adjacency();
    std::vector<char> seen(weights.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == weights.size();
}

bool PlumbingGraph::is_tree() const {
    return connected() && edges.size() + 1 == weights.size();
}

PlumbingGraph make_graph(std::vector<int> weights, std::vector<std::pair<int, int>> edges) {
    const int q = static_cast<int>(weights.size());
    for (auto& [a, b] : edges) {
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        if (a < 0 || b < 0 || a >= q || b >= q)
            throw std::invalid_argument("edge endpoint out of range");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    return PlumbingGraph{std::move(weights), std::move(edges)};
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Cyclic: return "cyclic";
        case Family::Dihedral: return "dihedral";
        case Family::Tetrahedral: return "tetrahedral";
        case Family::Octahedral: return "octahedral";
        case Family::Icosahedral: return "icosahedral";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::Cyclic, Family::Dihedral, Family::Tetrahedral, Family::Octahedral,
                     Family::Icosahedral})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

int family_variant_count(Family f) {
    switch (f) {
        case Family::Cyclic:
        case Family::Dihedral: return 0;
        case Family::Tetrahedral: return 3;
        case Family::Octahedral: return 4;
        case Family::Icosahedral: return 8;
    }
    return 0;
}

std::string variant_roman(int variant) {
    static const char* roman[] = {"", "i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};
    if (variant < 1 || variant > 8) return "";
    return roman[variant];
}

std::optional<int> variant_from_string(std::string_view s, Family f) {
    const int count = family_variant_count(f);
    for (int v = 1; v <= count; ++v)
        if (s == variant_roman(v)) return v;
    // accept arabic numerals too
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && ptr == s.data() + s.size() && value >= 1 && value <= count)
        return value;
    return std::nullopt;
}

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;
    int line = 0;

    std::optional<std::string_view> next_line() {
        if (pos >= text.size()) return std::nullopt;
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view l = text.substr(pos, end - pos);
        pos = end + 1;
        ++line;
        return l;
    }
};

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
               line[j] != '#')
            ++j;
        out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

PlumbingGraph parse_graph(std::string_view text) {
    Cursor cur{text};
    std::vector<int> weights;
    std::vector<std::pair<int, int>> edges;
    while (auto line = cur.next_line()) {
        auto toks = tokenize(*line);
        if (toks.empty()) continue;
        if (toks[0] == "vertex") {
            if (toks.size() != 3) throw ParseError(cur.line, "vertex takes two arguments");
            long long id = parse_int(toks[1], cur.line);
            long long w = parse_int(toks[2], cur.line);
            if (id != static_cast<long long>(weights.size())) {
                if (id >= 0 && id < static_cast<long long>(weights.size()))
                    throw ParseError(cur.line, "duplicate vertex id " + std::to_string(id));
                throw ParseError(cur.line, "vertex ids must be contiguous from 0; got " +
                                               std::to_string(id));
            }
            weights.push_back(static_cast<int>(w));
        } else if (toks[0] == "edge") {
            if (toks.size() != 3) throw ParseError(cur.line, "edge takes two arguments");
            long long a = parse_int(toks[1], cur.line);
            long long b = parse_int(toks[2], cur.line);
            if (a == b) throw ParseError(cur.line, "self-loop at vertex " + std::to_string(a));
            edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        } else {
            throw ParseError(cur.line, "unknown statement '" + std::string(toks[0]) + "'");
        }
    }
    // second pass so dangling-endpoint errors can name their line
    const int q = static_cast<int>(weights.size());
    Cursor cur2{text};
    size_t edge_idx = 0;
    while (auto line = cur2.next_line()) {
        auto toks = tokenize(*line);
        if (!toks.empty() && toks[0] == "edge") {
            auto [a, b] = edges[edge_idx++];
            if (a < 0 || b < 0 || a >= q || b >= q)
                throw ParseError(cur2.line, "edge endpoint does not name a vertex");
        }
    }
    try {
        return make_graph(std::move(weights), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

std::string serialize_graph(const PlumbingGraph& g) {
    std::ostringstream out;
    for (int i = 0; i < g.size(); ++i) out << "vertex " << i << ' ' << g.weights[i] << '\n';
    for (auto [a, b] : g.edges) out << "edge " << a << ' ' << b << '\n';
    return out.str();
}

PlumbingGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("edges"))
        throw ParseError(0, "graph JSON requires 'vertices' and 'edges'");
    std::vector<int> weights;
    for (const auto& v : j["vertices"]) {
        long long id = v.at("id").get<long long>();
        if (id != static_cast<long long>(weights.size()))
            throw ParseError(0, "vertex ids must be contiguous from 0");
        weights.push_back(v.at("weight").get<int>());
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError(0, "edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return make_graph(std::move(weights), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

std::string graph_to_json(const PlumbingGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (int i = 0; i < g.size(); ++i)
        j["vertices"].push_back({{"id", i}, {"weight", g.weights[i]}});
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
    return j.dump();
}

std::vector<int> continued_fraction_expand(long long n, long long q) {
    if (!(0 < q && q < n)) throw std::invalid_argument("continued fraction requires 0 < q < n");
    if (std::gcd(n, q) != 1) throw std::invalid_argument("continued fraction requires gcd(n,q)=1");
    std::vector<int> out;
    while (q > 0) {
        long long b = (n + q - 1) / q;  // ceil(n/q)
        out.push_back(static_cast<int>(b));
        long long next_q = b * q - n;
        n = q;
        q = next_q;
    }
    return out;
}

namespace detail {

const StarShape& star_shape(Family f, int variant) {
    static const std::vector<StarShape> tetra = {
        {{2, 2}, {2, 2}},
        {{3}, {2, 2}},
        {{3}, {3}},
    };
    static const std::vector<StarShape> octa = {
        {{2, 2, 2}, {2, 2}},
        {{2, 2, 2}, {3}},
        {{4}, {2, 2}},
        {{4}, {3}},
    };
    static const std::vector<StarShape> icosa = {
        {{2, 2, 2, 2}, {2, 2}},
        {{3, 2}, {2, 2}},
        {{2, 2, 2, 2}, {3}},
        {{2, 3}, {2, 2}},
        {{3, 2}, {3}},
        {{5}, {2, 2}},
        {{2, 3}, {3}},
        {{5}, {3}},
    };
    const std::vector<StarShape>* table = nullptr;
    switch (f) {
        case Family::Tetrahedral: table = &tetra; break;
        case Family::Octahedral: table = &octa; break;
        case Family::Icosahedral: table = &icosa; break;
        default: throw std::invalid_argument("family has no star shape");
    }
    if (variant < 1 || variant > static_cast<int>(table->size()))
        throw std::invalid_argument("invalid variant for family");
    return (*table)[variant - 1];
}

}  // namespace detail

PlumbingGraph generate_family(const FamilySpec& spec) {
    const int variants = family_variant_count(spec.family);
    if (variants == 0 && spec.variant != 0)
        throw std::invalid_argument("family has no variants");
    if (variants > 0 && (spec.variant < 1 || spec.variant > variants))
        throw std::invalid_argument("invalid variant for family");

    if (spec.family == Family::Cyclic) {
        std::vector<int> chain = spec.chain;
        if (spec.nq) {
            auto [n, q] = *spec.nq;
            auto expanded = continued_fraction_expand(n, q);
            if (!chain.empty() && chain != expanded)
                throw std::invalid_argument("chain and n/q disagree");
            chain = std::move(expanded);
        }
        if (chain.empty()) throw std::invalid_argument("cyclic family requires a chain or n/q");
        for (int b : chain)
            if (b < 2) throw std::invalid_argument("chain entries must be >= 2");
        std::vector<int> weights;
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < chain.size(); ++i) {
            weights.push_back(-chain[i]);
            if (i + 1 < chain.size()) edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
        }
        return make_graph(std::move(weights), std::move(edges));
    }

    if (spec.b < 2) throw std::invalid_argument("central weight b must be >= 2");

    if (spec.family == Family::Dihedral) {
        if (spec.chain.empty()) throw std::invalid_argument("dihedral family requires a nonempty chain");
        for (int b : spec.chain)
            if (b < 2) throw std::invalid_argument("chain entries must be >= 2");
        const int r = static_cast<int>(spec.chain.size()) + 1;
        std::vector<int> weights;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < r - 1; ++i) {
            weights.push_back(-spec.chain[i]);
            if (i > 0) edges.emplace_back(i - 1, i);
        }
        weights.push_back(-spec.b);  // center, index r-1
        if (r >= 2) edges.emplace_back(r - 2, r - 1);
        weights.push_back(-2);
        weights.push_back(-2);
        edges.emplace_back(r - 1, r);
        edges.emplace_back(r - 1, r + 1);
        return make_graph(std::move(weights), std::move(edges));
    }

    // star families: left arm (leaf..center), center, right arm (center..leaf), bottom leaf
    const auto& shape = detail::star_shape(spec.family, spec.variant);
    std::vector<int> weights;
    std::vector<std::pair<int, int>> edges;
    for (int w : shape.left) weights.push_back(-w);
    const int center = static_cast<int>(weights.size());
    weights.push_back(-spec.b);
    for (auto it = shape.right.rbegin(); it != shape.right.rend(); ++it) weights.push_back(-*it);
    const int bottom = static_cast<int>(weights.size());
    weights.push_back(-2);
    for (int i = 0; i + 1 < bottom; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(center, bottom);
    return make_graph(std::move(weights), std::move(edges));
}

IntersectionMatrix intersection_matrix(const PlumbingGraph& g) {
    IntersectionMatrix m(g.size());
    for (int i = 0; i < g.size(); ++i) m.at(i, i) = g.weights[i];
    for (auto [a, b] : g.edges) {
        m.at(a, b) = 1;
        m.at(b, a) = 1;
    }
    return m;
}

namespace {

__int128 checked_mul(__int128 a, __int128 b) {
    static const __int128 kLimit = (static_cast<__int128>(1) << 126);
    if (a != 0 && (b > kLimit / (a < 0 ? -a : a) || b < -(kLimit / (a < 0 ? -a : a))))
        throw std::overflow_error("determinant overflow in definiteness test");
    return a * b;
}

}  // namespace

bool is_negative_definite(const IntersectionMatrix& m) {
    const int n = m.n;
    if (n == 0) return true;
    // Bareiss fraction-free elimination; work[k][k] after step k holds the
    // k-th leading principal minor.
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    __int128 prev = 1;
    for (int k = 0; k < n; ++k) {
        __int128 minor_k = a[k][k];
        // sign of k-th minor must be (-1)^(k+1)
        if (minor_k == 0) return false;
        if ((k % 2 == 0) != (minor_k < 0)) return false;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (checked_mul(a[i][j], a[k][k]) - checked_mul(a[i][k], a[k][j])) / prev;
        prev = a[k][k];
    }
    return true;
}

}  // namespace plumbook
