#include "mc/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mc/errors.hpp"

namespace mc::io {

namespace {

class TextCursor {
public:
    explicit TextCursor(std::string_view text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    char get()
    {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_blanks()
    {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) {
            get();
        }
    }

    [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, line_, column_); }

    unsigned long number(const char *what)
    {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            fail(std::string("expected ") + what);
        }
        unsigned long value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<unsigned long>(get() - '0');
            if (value > 1'000'000'000UL) {
                fail(std::string(what) + " is too large");
            }
        }
        return value;
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

using Factors = std::vector<std::pair<std::size_t, Degree>>;

Factors parse_monomial(TextCursor &in)
{
    Factors factors;
    in.skip_blanks();
    if (in.peek() == '1') {
        in.get();
        return factors;
    }
    while (true) {
        in.skip_blanks();
        if (in.peek() != 'x') {
            in.fail("expected a variable x<k>");
        }
        in.get();
        const std::size_t line = in.line();
        const std::size_t column = in.column();
        const auto index = in.number("variable index");
        if (index == 0) {
            throw ParseError("variables are 1-based; x0 is not allowed", line, column);
        }
        Degree degree = 1;
        in.skip_blanks();
        if (in.peek() == '^') {
            in.get();
            in.skip_blanks();
            degree = static_cast<Degree>(in.number("exponent"));
            in.skip_blanks();
        }
        factors.emplace_back(index, degree);
        if (in.peek() != '*') {
            return factors;
        }
        in.get();
    }
}

const json &require_field(const json &doc, const char *key, const char *what)
{
    if (!doc.is_object() || !doc.contains(key)) {
        throw ParseError(std::string(what) + " JSON needs a \"" + key + "\" field");
    }
    return doc.at(key);
}

std::size_t as_count(const json &value, const char *what)
{
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw ParseError(std::string(what) + " must be a non-negative integer");
    }
    return value.get<std::size_t>();
}

json parse_json_text(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        // nlohmann reports a byte offset; recover line and column from it.
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(std::string("invalid JSON: ") + e.what(), line, column);
    }
}

VarSet parse_vertex_list(const json &list, std::size_t n, const char *what)
{
    if (!list.is_array()) {
        throw ParseError(std::string(what) + " must be an array of vertex indices");
    }
    VarSet set = 0;
    for (const auto &v : list) {
        const auto k = as_count(v, "vertex index");
        if (k < 1 || k > n) {
            throw ParseError(std::string(what) + ": vertex " + std::to_string(k) + " is outside [1, "
                             + std::to_string(n) + "]");
        }
        set |= var_bit(k);
    }
    return set;
}

} // namespace

MonomialIdeal parse_ideal_text(std::string_view text, std::optional<std::size_t> nvars)
{
    TextCursor in(text);
    in.skip_blanks();
    if (in.done()) {
        return MonomialIdeal::zero(nvars.value_or(0));
    }
    if (in.peek() == '0') {
        in.get();
        in.skip_blanks();
        if (!in.done()) {
            in.fail("unexpected input after the zero ideal");
        }
        return MonomialIdeal::zero(nvars.value_or(0));
    }
    std::vector<Factors> monomials;
    std::size_t max_index = 0;
    while (true) {
        monomials.push_back(parse_monomial(in));
        for (const auto &[index, degree] : monomials.back()) {
            max_index = std::max(max_index, index);
        }
        in.skip_blanks();
        if (in.done()) {
            break;
        }
        if (in.peek() != ',') {
            in.fail("expected ',' between monomials");
        }
        in.get();
    }
    const std::size_t n = nvars.value_or(max_index);
    if (max_index > n) {
        throw ParseError("variable x" + std::to_string(max_index) + " exceeds n = " + std::to_string(n));
    }
    if (n > kMaxVars) {
        throw ParseError("at most " + std::to_string(kMaxVars) + " variables are supported");
    }
    std::vector<Exponent> gens;
    for (const auto &factors : monomials) {
        Exponent e(n);
        for (const auto &[index, degree] : factors) {
            e[index - 1] += degree;
        }
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal parse_ideal_json(const json &doc)
{
    const auto n = as_count(require_field(doc, "n", "ideal"), "n");
    if (n > kMaxVars) {
        throw ParseError("at most " + std::to_string(kMaxVars) + " variables are supported");
    }
    const auto &gens_json = require_field(doc, "gens", "ideal");
    if (!gens_json.is_array()) {
        throw ParseError("ideal \"gens\" must be an array of exponent vectors");
    }
    std::vector<Exponent> gens;
    for (const auto &g : gens_json) {
        if (!g.is_array() || g.size() != n) {
            throw ParseError("every generator must be an array of " + std::to_string(n) + " degrees");
        }
        Exponent e(n);
        for (std::size_t j = 0; j < n; ++j) {
            e[j] = static_cast<Degree>(as_count(g[j], "degree"));
        }
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal parse_ideal(std::string_view input, std::optional<std::size_t> nvars)
{
    auto first = std::find_if(input.begin(), input.end(),
                              [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
    if (first != input.end() && *first == '{') {
        auto ideal = parse_ideal_json(parse_json_text(input));
        if (nvars && *nvars != ideal.nvars()) {
            throw ParseError("ideal JSON has n = " + std::to_string(ideal.nvars())
                             + " but n = " + std::to_string(*nvars) + " was requested");
        }
        return ideal;
    }
    return parse_ideal_text(input, nvars);
}

json exponent_to_json(const Exponent &a)
{
    json out = json::array();
    for (auto c : a.coords()) {
        out.push_back(c);
    }
    return out;
}

json vertex_set_to_json(VarSet set)
{
    json out = json::array();
    for (auto v : members(set)) {
        out.push_back(v);
    }
    return out;
}

json ideal_to_json(const MonomialIdeal &ideal)
{
    json gens = json::array();
    for (const auto &g : ideal.gens()) {
        gens.push_back(exponent_to_json(g));
    }
    return json{{"n", ideal.nvars()}, {"gens", gens}};
}

Exponent parse_exponent(std::string_view text)
{
    std::string cleaned;
    for (char c : text) {
        if (c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c))) {
            cleaned += c;
        }
    }
    std::vector<Degree> coords;
    std::stringstream stream(cleaned);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            })) {
            throw ParseError("exponent entries must be non-negative integers, got '" + item + "'");
        }
        coords.push_back(static_cast<Degree>(std::stoul(item)));
    }
    return Exponent(std::move(coords));
}

WeightedOrientedGraph parse_graph_json(const json &doc, bool normalize_sources)
{
    const auto n = as_count(require_field(doc, "n", "graph"), "n");
    if (n > kMaxVars) {
        throw ParseError("at most " + std::to_string(kMaxVars) + " vertices are supported");
    }
    const auto &edges_json = require_field(doc, "edges", "graph");
    if (!edges_json.is_array()) {
        throw ParseError("graph \"edges\" must be an array of [tail, head] pairs");
    }
    std::vector<Edge> edges;
    for (const auto &e : edges_json) {
        if (!e.is_array() || e.size() != 2) {
            throw ParseError("every edge must be a [tail, head] pair");
        }
        edges.emplace_back(as_count(e[0], "edge tail"), as_count(e[1], "edge head"));
    }
    std::vector<Degree> weights(n, 1);
    if (doc.contains("weights")) {
        const auto &w = doc.at("weights");
        if (!w.is_object()) {
            throw ParseError("graph \"weights\" must be an object {\"vertex\": weight}");
        }
        for (const auto &[key, value] : w.items()) {
            std::size_t v = 0;
            try {
                std::size_t used = 0;
                v = std::stoul(key, &used);
                if (used != key.size()) {
                    throw std::invalid_argument(key);
                }
            } catch (const std::exception &) {
                throw ParseError("weight key '" + key + "' is not a vertex index");
            }
            if (v < 1 || v > n) {
                throw ParseError("weight key " + key + " is outside [1, " + std::to_string(n) + "]");
            }
            weights[v - 1] = static_cast<Degree>(as_count(value, "weight"));
        }
    }
    return WeightedOrientedGraph(n, std::move(edges), std::move(weights), normalize_sources);
}

WeightedOrientedGraph parse_graph(std::string_view text, bool normalize_sources)
{
    return parse_graph_json(parse_json_text(text), normalize_sources);
}

json graph_to_json(const WeightedOrientedGraph &graph)
{
    json edges = json::array();
    for (const auto &[i, j] : graph.edges()) {
        edges.push_back(json::array({i, j}));
    }
    json weights = json::object();
    for (auto v : members(graph.vertices())) {
        if (graph.weight(v) != 1) {
            weights[std::to_string(v)] = graph.weight(v);
        }
    }
    return json{{"n", graph.nvars()}, {"edges", edges}, {"weights", weights}};
}

SimplicialComplex parse_complex_json(const json &doc)
{
    const auto n = as_count(require_field(doc, "n", "complex"), "n");
    if (n > kMaxVars) {
        throw ParseError("at most " + std::to_string(kMaxVars) + " vertices are supported");
    }
    const auto &facets_json = require_field(doc, "facets", "complex");
    if (!facets_json.is_array()) {
        throw ParseError("complex \"facets\" must be an array of vertex lists");
    }
    std::vector<VarSet> facets;
    for (const auto &f : facets_json) {
        facets.push_back(parse_vertex_list(f, n, "facet"));
    }
    return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex parse_complex(std::string_view text) { return parse_complex_json(parse_json_text(text)); }

json complex_to_json(const SimplicialComplex &complex)
{
    json facets = json::array();
    for (auto f : complex.facets()) {
        facets.push_back(vertex_set_to_json(f));
    }
    return json{{"n", complex.nvars()}, {"facets", facets}};
}

json homology_to_json(const HomologyProfile &profile)
{
    json dims = json::object();
    for (const auto &[q, d] : profile.dims) {
        dims[std::to_string(q)] = d;
    }
    return json{{"field", profile.field.name()}, {"dims", dims}, {"acyclic", profile.is_acyclic()}};
}

json certificate_to_json(const RationalCertificate &certificate)
{
    json coefficients = json::array();
    for (const auto &[index, c] : certificate.coefficients) {
        coefficients.push_back(json{{"generator", index}, {"c", c.get_str()}});
    }
    return json{{"coefficients", coefficients}, {"total", certificate.total().get_str()}};
}

json report_to_json(const RegularityReport &report, bool with_witness)
{
    json out{{"reg_ideal", report.reg_ideal},
             {"reg_module", report.reg_module},
             {"field", report.field.name()},
             {"pairs_examined", report.pairs_examined}};
    if (with_witness && report.witness) {
        out["witness"] = json{{"a", exponent_to_json(report.witness->a)},
                              {"i", report.witness->i},
                              {"F", vertex_set_to_json(report.witness->face)}};
    }
    if (with_witness && report.betti_witness) {
        out["betti_witness"] = json{{"b", exponent_to_json(report.betti_witness->multidegree)},
                                    {"i", report.betti_witness->homological_degree}};
    }
    return out;
}

std::string read_file_or_inline(const std::string &source)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) {
        std::ifstream in(source);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    return source;
}

} // namespace mc::io
