#include "mc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

#include "mc/digraph.hpp"
#include "mc/errors.hpp"
#include "mc/io.hpp"
#include "mc/newton.hpp"
#include "mc/regularity.hpp"

namespace mc {

using nlohmann::json;

namespace {

constexpr std::size_t kCapVertices = 8;
constexpr Degree kCapWeight = 6;

using Check = std::function<std::optional<std::string>()>;

std::vector<Field> fields_from_json(const json &instance, std::vector<unsigned> fallback)
{
    std::vector<Field> out;
    if (instance.contains("chars")) {
        for (const auto &c : instance.at("chars")) {
            out.emplace_back(c.get<unsigned>());
        }
    } else {
        for (auto c : fallback) {
            out.emplace_back(c);
        }
    }
    return out;
}

json chars_json(const std::vector<Field> &fields)
{
    json out = json::array();
    for (const auto &f : fields) {
        out.push_back(f.characteristic());
    }
    return out;
}

std::string mismatch(const std::string &what, std::int64_t got, std::int64_t expected)
{
    return what + ": got " + std::to_string(got) + ", expected " + std::to_string(expected);
}

// ---- instance generators -------------------------------------------------

std::mt19937_64 make_rng(std::uint64_t seed)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    return std::mt19937_64(seq);
}

double edge_probability(std::size_t index)
{
    static constexpr double kProbabilities[] = {0.3, 0.5, 0.8};
    return kProbabilities[index % 3];
}

std::size_t uniform_size(std::mt19937_64 &rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

MonomialIdeal random_ideal(std::mt19937_64 &rng, std::size_t nmax, Degree rho_max, std::size_t max_gens,
                           bool squarefree)
{
    const std::size_t n = uniform_size(rng, 1, nmax);
    const std::size_t count = uniform_size(rng, 1, max_gens);
    std::uniform_int_distribution<Degree> degree(0, squarefree ? 1 : rho_max);
    std::vector<Exponent> gens;
    while (gens.size() < count) {
        Exponent e(n);
        for (std::size_t j = 0; j < n; ++j) {
            e[j] = degree(rng);
        }
        if (!e.is_zero()) {
            gens.push_back(std::move(e));
        }
    }
    return MonomialIdeal(n, std::move(gens));
}

VarSet random_nonempty_subset(std::mt19937_64 &rng, VarSet universe)
{
    auto elements = members(universe);
    while (true) {
        VarSet s = 0;
        for (auto v : elements) {
            if (std::bernoulli_distribution(0.5)(rng)) {
                s |= var_bit(v);
            }
        }
        if (s != 0) {
            return s;
        }
    }
}

json vertex_family_json(const std::vector<VarSet> &family)
{
    json out = json::array();
    for (auto w : family) {
        out.push_back(io::vertex_set_to_json(w));
    }
    return out;
}

VarSet vertex_set_from_json(const json &list)
{
    VarSet s = 0;
    for (const auto &v : list) {
        s |= var_bit(v.get<std::size_t>());
    }
    return s;
}

// ---- per-suite checks, built from instance JSON ---------------------------

std::optional<std::string> check_main_inequality(const json &instance)
{
    const auto graph = io::parse_graph_json(instance.at("graph"));
    const auto ideal = edge_ideal(graph);
    const auto closure = integral_closure(ideal);
    for (const auto &field : fields_from_json(instance, {0})) {
        const auto reg_ideal = regularity(ideal, field).reg_ideal;
        const auto reg_closure = regularity(closure, field).reg_ideal;
        if (reg_closure > reg_ideal) {
            return "reg(closure) = " + std::to_string(reg_closure) + " exceeds reg(I) = "
                   + std::to_string(reg_ideal) + " over " + field.name();
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_complete_formulas(const json &instance)
{
    const auto graph = io::parse_graph_json(instance.at("graph"));
    const auto ideal = edge_ideal(graph);
    for (const auto &field : fields_from_json(instance, {0})) {
        const auto reg_ideal = regularity(ideal, field).reg_ideal;
        if (reg_ideal != complete_graph_reg(graph)) {
            return mismatch("reg(I) over " + field.name(), reg_ideal, complete_graph_reg(graph));
        }
        const auto reg_closure = regularity(integral_closure(ideal), field).reg_ideal;
        if (reg_closure != complete_closure_reg(graph)) {
            return mismatch("reg(closure) over " + field.name(), reg_closure, complete_closure_reg(graph));
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_radical_formula(const json &instance)
{
    const auto graph = io::parse_graph_json(instance.at("graph"));
    const auto a = Exponent(instance.at("a").get<std::vector<Degree>>());
    const auto ideal = edge_ideal(graph);
    const bool closure_side = instance.at("kind").get<std::string>() == "closure";
    const auto formula = closure_side ? closure_radical_formula(graph, a) : radical_colon_formula(graph, a);
    const auto direct = radical(colon(closure_side ? integral_closure(ideal) : ideal, a));
    if (formula != direct) {
        return "closed form " + formula.to_string() + " differs from direct " + direct.to_string();
    }
    return std::nullopt;
}

std::optional<std::string> check_acyclicity(const json &instance)
{
    const auto graph = io::parse_graph_json(instance.at("graph"));
    const VarSet sinks = vertex_set_from_json(instance.at("sinks"));
    std::vector<VarSet> family;
    for (const auto &w : instance.at("family")) {
        family.push_back(vertex_set_from_json(w));
    }
    for (const auto &field : fields_from_json(instance, {0})) {
        if (!acyclicity_check(graph, sinks, family, field)) {
            return "complex is not acyclic over " + field.name();
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_oracle(const json &instance)
{
    const auto ideal = io::parse_ideal_json(instance.at("ideal"));
    for (const auto &field : fields_from_json(instance, {0, 2})) {
        const auto engine = regularity(ideal, field).reg_ideal;
        const auto oracle = regularity_oracle_koszul(ideal, field).reg_ideal;
        if (engine != oracle) {
            return mismatch("degree-complex reg over " + field.name() + " vs Koszul oracle", engine, oracle);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_closure(const json &instance)
{
    const auto ideal = io::parse_ideal_json(instance.at("ideal"));
    const auto closure = integral_closure(ideal);
    for (const auto &g : ideal.gens()) {
        if (!closure.contains(g)) {
            return "generator " + g.to_string() + " of I is missing from the closure";
        }
    }
    if (ideal.is_squarefree() && closure != ideal) {
        return "squarefree ideal is not fixed by closure: " + closure.to_string();
    }
    // Certificates for every closure generator, checked exactly.
    for (const auto &g : closure.gens()) {
        const auto m = np_membership(ideal, g);
        if (!m.member || !m.certificate || !m.certificate->certifies(ideal, g)) {
            return "closure generator " + g.to_string() + " lacks a valid certificate";
        }
    }
    const auto twice = integral_closure(closure);
    if (twice != closure) {
        return "closure is not idempotent: " + closure.to_string() + " vs " + twice.to_string();
    }
    return std::nullopt;
}

std::optional<std::string> check_admissible(const json &instance)
{
    const auto n = instance.at("n").get<std::size_t>();
    const auto graph = tournament(n, instance.at("orientation").get<std::uint64_t>());
    const std::size_t j = find_admissible_vertex(graph);
    // Independent confirmation: sources of D \ j are exactly the old sources.
    const auto rest = induced_subgraph_with_weights(graph, graph.vertices() & ~var_bit(j));
    if ((rest.graph.sources() & ~graph.sources()) != 0) {
        return "vertex " + std::to_string(j) + " creates a new source";
    }
    return std::nullopt;
}

struct SuiteSpec {
    std::size_t n;
    Degree wmax;
    std::size_t count;
    std::optional<std::string> (*check)(const json &);
};

const SuiteSpec &suite_spec(const std::string &suite)
{
    static const std::vector<std::pair<std::string, SuiteSpec>> specs = {
        {"main-inequality", {6, 4, 100, check_main_inequality}},
        {"complete-formulas", {3, 4, 50, check_complete_formulas}},
        {"radical-formulas", {6, 4, 100, check_radical_formula}},
        {"acyclicity", {7, 4, 100, check_acyclicity}},
        {"oracle-crosscheck", {4, 4, 200, check_oracle}},
        {"closure-idempotence", {5, 6, 100, check_closure}},
        {"admissible-vertex", {5, 1, 0, check_admissible}},
    };
    for (const auto &[name, spec] : specs) {
        if (name == suite) {
            return spec;
        }
    }
    throw DomainError("unknown suite '" + suite + "'");
}

std::vector<json> instances_for(const std::string &suite, const VerificationParams &params)
{
    const auto &spec = suite_spec(suite);
    const std::size_t n = params.n.value_or(spec.n);
    const Degree wmax = params.wmax.value_or(spec.wmax);
    const std::size_t count = params.count.value_or(spec.count);
    if (!params.allow_large && (n > kCapVertices || wmax > kCapWeight)) {
        throw DomainError("instance size above the caps (n <= 8, weights <= 6); pass --allow-large");
    }
    if (n < 1 || wmax < 1) {
        throw DomainError("n and wmax must be positive");
    }
    std::vector<Field> fields = params.fields;
    auto rng = make_rng(params.seed);
    std::vector<json> out;

    auto with_fields = [&](json instance) {
        if (!fields.empty()) {
            instance["chars"] = chars_json(fields);
        }
        return instance;
    };

    if (suite == "main-inequality" || suite == "complete-formulas") {
        if (n < 2) {
            throw DomainError("graph suites need n >= 2");
        }
        if (suite == "complete-formulas" && params.exhaustive) {
            // Every orientation of K_n and every weight vector, deduplicated
            // after sources are reset to weight 1.
            const std::size_t pairs = n * (n - 1) / 2;
            if (n > 4) {
                throw DomainError("exhaustive complete-formulas supports n <= 4");
            }
            std::vector<json> seen;
            for (std::uint64_t orientation = 0; orientation < (std::uint64_t{1} << pairs); ++orientation) {
                std::vector<Degree> weights(n, 1);
                while (true) {
                    auto graph_json = io::graph_to_json(tournament(n, orientation, weights));
                    if (std::find(seen.begin(), seen.end(), graph_json) == seen.end()) {
                        seen.push_back(graph_json);
                    }
                    std::size_t k = 0;
                    while (k < n && weights[k] == wmax) {
                        weights[k++] = 1;
                    }
                    if (k == n) {
                        break;
                    }
                    ++weights[k];
                }
            }
            for (auto &g : seen) {
                out.push_back(with_fields(json{{"graph", std::move(g)}}));
            }
            return out;
        }
        for (std::size_t i = 0; i < count; ++i) {
            const auto graph = suite == "complete-formulas"
                                   ? random_complete_graph(rng, n, wmax)
                                   : random_weighted_oriented_graph(rng, uniform_size(rng, 2, n),
                                                                    edge_probability(i), wmax);
            out.push_back(with_fields(json{{"graph", io::graph_to_json(graph)}}));
        }
        return out;
    }

    if (suite == "radical-formulas") {
        if (n < 2) {
            throw DomainError("graph suites need n >= 2");
        }
        const std::size_t closure_count = params.closure_count.value_or(count / 2);
        for (std::size_t i = 0; i < count; ++i) {
            const auto graph = random_weighted_oriented_graph(rng, uniform_size(rng, 2, n), edge_probability(i), wmax);
            Exponent a(graph.nvars());
            for (std::size_t j = 1; j <= graph.nvars(); ++j) {
                a[j - 1] = std::uniform_int_distribution<Degree>(0, graph.weight(j) - 1)(rng);
            }
            out.push_back(json{{"kind", "colon"}, {"graph", io::graph_to_json(graph)}, {"a", io::exponent_to_json(a)}});
        }
        for (std::size_t i = 0; i < closure_count; ++i) {
            // Prefer graphs with a sink of weight >= 2 so that supp(a) is nonempty.
            std::optional<WeightedOrientedGraph> graph;
            VarSet eligible = 0;
            for (int attempt = 0; attempt < 100; ++attempt) {
                graph = random_weighted_oriented_graph(rng, uniform_size(rng, 2, n), edge_probability(i), wmax);
                eligible = 0;
                for (auto s : members(graph->sinks())) {
                    if (graph->weight(s) >= 2) {
                        eligible |= var_bit(s);
                    }
                }
                if (eligible != 0) {
                    break;
                }
            }
            Exponent a(graph->nvars());
            for (auto s : members(eligible)) {
                if (std::bernoulli_distribution(0.75)(rng)) {
                    a[s - 1] = std::uniform_int_distribution<Degree>(1, graph->weight(s) - 1)(rng);
                }
            }
            out.push_back(json{{"kind", "closure"}, {"graph", io::graph_to_json(*graph)}, {"a", io::exponent_to_json(a)}});
        }
        return out;
    }

    if (suite == "acyclicity") {
        if (n < 2) {
            throw DomainError("graph suites need n >= 2");
        }
        for (std::size_t i = 0; i < count; ++i) {
            while (true) {
                const auto graph = random_weighted_oriented_graph(rng, uniform_size(rng, 2, n), edge_probability(i), wmax);
                if (graph.sinks() == 0) {
                    continue;
                }
                const VarSet sinks = random_nonempty_subset(rng, graph.sinks());
                std::vector<VarSet> family(uniform_size(rng, 1, 4));
                for (auto &w : family) {
                    w = random_nonempty_subset(rng, sinks);
                }
                out.push_back(with_fields(json{{"graph", io::graph_to_json(graph)},
                                               {"sinks", io::vertex_set_to_json(sinks)},
                                               {"family", vertex_family_json(family)}}));
                break;
            }
        }
        return out;
    }

    if (suite == "oracle-crosscheck" || suite == "closure-idempotence") {
        const std::size_t max_gens = params.max_gens.value_or(6);
        for (std::size_t i = 0; i < count; ++i) {
            // Every fourth closure instance is squarefree so the fixed-point check bites.
            const bool squarefree = suite == "closure-idempotence" && i % 4 == 3;
            auto ideal = random_ideal(rng, n, wmax, max_gens, squarefree);
            out.push_back(with_fields(json{{"ideal", io::ideal_to_json(ideal)}}));
        }
        return out;
    }

    if (suite == "admissible-vertex") {
        // All tournaments on 4..n vertices.
        if (n < 4 || n > 6) {
            throw DomainError("admissible-vertex enumerates tournaments on 4..n vertices, 4 <= n <= 6");
        }
        for (std::size_t k = 4; k <= n; ++k) {
            const std::uint64_t total = std::uint64_t{1} << (k * (k - 1) / 2);
            for (std::uint64_t orientation = 0; orientation < total; ++orientation) {
                out.push_back(json{{"n", k}, {"orientation", orientation}});
            }
        }
        return out;
    }
    throw DomainError("unknown suite '" + suite + "'");
}

template <typename Work>
void parallel_for(std::size_t count, unsigned threads, Work work)
{
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            work(i);
        }
    };
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
}

template <typename CheckAt>
VerificationRun evaluate(const std::string &suite, std::uint64_t seed, const std::vector<json> &instances,
                         unsigned threads, CheckAt check_at)
{
    VerificationRun run;
    run.suite = suite;
    run.seed = seed;
    run.instances = instances.size();
    std::vector<std::optional<std::string>> outcomes(instances.size());
    run.timing_ms.assign(instances.size(), 0.0);
    parallel_for(instances.size(), threads, [&](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        try {
            outcomes[i] = check_at(i);
        } catch (const std::exception &e) {
            outcomes[i] = std::string("exception: ") + e.what();
        }
        run.timing_ms[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    });
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (outcomes[i]) {
            run.failures.push_back({i, instances[i], *outcomes[i]});
        }
    }
    return run;
}

// ---- golden examples ------------------------------------------------------

WeightedOrientedGraph strict_triangle()
{
    // 1 -> 2 -> 3 -> 1 with w = (6, 3, 5).
    return WeightedOrientedGraph(3, {{1, 2}, {2, 3}, {3, 1}}, {6, 3, 5});
}

WeightedOrientedGraph ten_vertex_sinks()
{
    std::vector<Degree> weights(10, 1);
    weights[6] = 4;
    weights[7] = 7;
    weights[8] = 4;
    weights[9] = 6;
    return WeightedOrientedGraph(10,
                                 {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 10}, {3, 7}, {4, 7},
                                  {4, 8}, {5, 8}, {5, 9}, {6, 10}},
                                 weights);
}

Exponent ten_vertex_exponent() { return Exponent{0, 0, 0, 0, 0, 0, 2, 3, 1, 3}; }

MonomialIdeal ten_vertex_expected_radical()
{
    const auto graph = ten_vertex_sinks();
    return sum(radical(edge_ideal(graph)), io::parse_ideal_text("x2, x3*x5, x3*x6, x4*x5, x4*x6, x5*x6", 10));
}

std::optional<std::string> expect_equal(const MonomialIdeal &got, const MonomialIdeal &expected)
{
    if (got == expected) {
        return std::nullopt;
    }
    return "got (" + got.to_string() + "), expected (" + expected.to_string() + ")";
}

std::optional<std::string> expect_value(const std::string &what, std::int64_t got, std::int64_t expected)
{
    if (got == expected) {
        return std::nullopt;
    }
    return mismatch(what, got, expected);
}

const std::vector<std::pair<std::string, Check>> &golden_checks()
{
    static const std::vector<std::pair<std::string, Check>> checks = {
        {"triangle-edge-ideal",
         [] {
             return expect_equal(edge_ideal(strict_triangle()), io::parse_ideal_text("x1*x2^3, x2*x3^5, x3*x1^6"));
         }},
        {"triangle-reg-ideal-12",
         [] { return expect_value("reg(I)", regularity(edge_ideal(strict_triangle())).reg_ideal, 12); }},
        {"triangle-reg-closure-7",
         [] {
             return expect_value("reg(closure)",
                                 regularity(integral_closure(edge_ideal(strict_triangle()))).reg_ideal, 7);
         }},
        {"triangle-koszul-oracle-12",
         [] {
             return expect_value("oracle reg(I)", regularity_oracle_koszul(edge_ideal(strict_triangle())).reg_ideal,
                                 12);
         }},
        {"triangle-complete-formulas",
         [] {
             const auto g = strict_triangle();
             if (auto r = expect_value("complete graph formula", complete_graph_reg(g), 12)) {
                 return r;
             }
             return expect_value("closure formula", complete_closure_reg(g), 7);
         }},
        {"ten-vertex-edge-ideal",
         [] {
             return expect_equal(edge_ideal(ten_vertex_sinks()),
                                 io::parse_ideal_text("x1*x2, x1*x3, x1*x4, x2*x5, x2*x6, x2*x7^4, x2*x10^6, "
                                                      "x3*x7^4, x4*x7^4, x4*x8^7, x5*x8^7, x5*x9^4, x6*x10^6"));
         }},
        {"ten-vertex-in-neighbors",
         []() -> std::optional<std::string> {
             const auto g = ten_vertex_sinks();
             if (g.in_neighbors(7) != set_of({2, 3, 4}) || g.in_neighbors(8) != set_of({4, 5})
                 || g.in_neighbors(9) != set_of({5}) || g.in_neighbors(10) != set_of({2, 6})) {
                 return "in-neighborhoods of the sinks differ";
             }
             return std::nullopt;
         }},
        {"ten-vertex-capacity-family",
         []() -> std::optional<std::string> {
             const auto family = minimal_capacity_sets(ten_vertex_sinks(), ten_vertex_exponent());
             std::vector<VarSet> got;
             for (const auto &w : family) {
                 got.push_back(w.members);
             }
             std::vector<VarSet> expected{set_of({7, 8, 9}), set_of({7, 10}), set_of({8, 9, 10})};
             std::sort(got.begin(), got.end());
             std::sort(expected.begin(), expected.end());
             if (got != expected) {
                 return "minimal capacity family differs";
             }
             if (capacity(ten_vertex_sinks(), ten_vertex_exponent(), set_of({7, 10})) != 1) {
                 return "c({7,10}) != 1";
             }
             return std::nullopt;
         }},
        {"ten-vertex-closed-form",
         [] {
             return expect_equal(closure_radical_formula(ten_vertex_sinks(), ten_vertex_exponent()),
                                 ten_vertex_expected_radical());
         }},
        {"ten-vertex-direct-pipeline",
         [] {
             const auto closure = integral_closure(edge_ideal(ten_vertex_sinks()));
             return expect_equal(radical(colon(closure, ten_vertex_exponent())), ten_vertex_expected_radical());
         }},
        {"ten-vertex-restriction",
         [] {
             return expect_equal(restrict(edge_ideal(ten_vertex_sinks()), set_of({2, 7, 10})),
                                 io::parse_ideal_text("x2*x7^4, x2*x10^6", 10));
         }},
        {"two-vertex-rule",
         []() -> std::optional<std::string> {
             for (Degree w2 : {2U, 3U, 4U}) {
                 const WeightedOrientedGraph g(2, {{1, 2}}, {1, w2});
                 const auto ideal = edge_ideal(g);
                 const std::int64_t total = 1 + w2;
                 if (auto r = expect_value("reg(I), w(2)=" + std::to_string(w2), regularity(ideal).reg_ideal, total)) {
                     return r;
                 }
                 if (auto r = expect_value("reg(closure), w(2)=" + std::to_string(w2),
                                           regularity(integral_closure(ideal)).reg_ideal, total)) {
                     return r;
                 }
             }
             return std::nullopt;
         }},
        {"edge-ideal-rho-equals-weight",
         []() -> std::optional<std::string> {
             for (const auto &g : {strict_triangle(), ten_vertex_sinks()}) {
                 const auto ideal = edge_ideal(g);
                 for (auto j : members(g.vertices() & ~g.sources())) {
                     if (rho(ideal, j) != g.weight(j)) {
                         return "rho_" + std::to_string(j) + " != w(" + std::to_string(j) + ")";
                     }
                 }
             }
             return std::nullopt;
         }},
    };
    return checks;
}

} // namespace

json VerificationRun::to_json(bool with_timing) const
{
    json failure_list = json::array();
    for (const auto &f : failures) {
        failure_list.push_back(json{{"index", f.index}, {"instance", f.instance}, {"detail", f.detail}});
    }
    json out{{"suite", suite}, {"seed", seed}, {"instances", instances}, {"passed", passed()},
             {"failures", failure_list}};
    if (with_timing) {
        out["timing_ms"] = timing_ms;
    }
    return out;
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = {"main-inequality",   "complete-formulas",  "radical-formulas",
                                                   "acyclicity",        "oracle-crosscheck",  "closure-idempotence",
                                                   "admissible-vertex"};
    return names;
}

std::vector<json> generate_instances(const std::string &suite, const VerificationParams &params)
{
    return instances_for(suite, params);
}

VerificationRun run_suite(const std::string &suite, const VerificationParams &params)
{
    const auto &spec = suite_spec(suite);
    const auto instances = instances_for(suite, params);
    return evaluate(suite, params.seed, instances, params.threads,
                    [&](std::size_t i) { return spec.check(instances[i]); });
}

std::optional<std::string> replay_instance(const std::string &suite, const json &instance)
{
    if (suite == "golden") {
        const auto name = instance.at("check").get<std::string>();
        for (const auto &[check_name, check] : golden_checks()) {
            if (check_name == name) {
                return check();
            }
        }
        throw DomainError("unknown golden check '" + name + "'");
    }
    const auto &spec = suite_spec(suite);
    try {
        return spec.check(instance);
    } catch (const std::exception &e) {
        return std::string("exception: ") + e.what();
    }
}

VerificationRun run_golden()
{
    const auto &checks = golden_checks();
    std::vector<json> instances;
    for (const auto &[name, check] : checks) {
        instances.push_back(json{{"check", name}});
    }
    return evaluate("golden", 0, instances, 1, [&](std::size_t i) { return checks[i].second(); });
}

std::uint64_t default_seed(std::uint64_t fallback)
{
    if (const char *env = std::getenv("MC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw DomainError(std::string("MC_SEED is not an unsigned integer: ") + env);
        }
    }
    return fallback;
}

} // namespace mc
