// Command-line front end: regularity, integral closure, Newton polyhedron
// membership, degree complexes, homology, weighted oriented graph edge
// ideals and the verification suites.
//
// Exit codes: 0 success, 1 a verification found a failure, 2 usage, parse or
// domain error. JSON goes to stdout, human-readable summaries to stderr.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mc/digraph.hpp"
#include "mc/errors.hpp"
#include "mc/io.hpp"
#include "mc/newton.hpp"
#include "mc/regularity.hpp"
#include "mc/simplicial.hpp"
#include "mc/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct IdealArgs {
    std::string ideal;
    std::optional<std::size_t> nvars;
};

void add_ideal_options(CLI::App *cmd, IdealArgs &args)
{
    cmd->add_option("--ideal", args.ideal, "ideal file or inline text/JSON")->required();
    cmd->add_option("--nvars", args.nvars, "number of variables (default: largest index)");
}

mc::MonomialIdeal load_ideal(const IdealArgs &args)
{
    return mc::io::parse_ideal(mc::io::read_file_or_inline(args.ideal), args.nvars);
}

void print(const json &doc) { std::cout << doc.dump(2) << '\n'; }

int finish_run(const mc::VerificationRun &run, bool with_timing)
{
    print(run.to_json(with_timing));
    std::cerr << run.suite << ": " << run.instances - run.failures.size() << '/' << run.instances
              << " instances passed" << (run.passed() ? "" : " -- FAILURES FOUND") << '\n';
    for (const auto &f : run.failures) {
        std::cerr << "  #" << f.index << ": " << f.detail << '\n';
    }
    return run.passed() ? 0 : kExitFailure;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Integral closures and regularity of monomial ideals and weighted oriented graph edge ideals"};
    app.require_subcommand(1);

    unsigned characteristic = 0;

    // reg
    IdealArgs reg_args;
    bool reg_oracle = false;
    bool reg_witness = false;
    bool reg_closure = false;
    auto *reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of a monomial ideal");
    add_ideal_options(reg, reg_args);
    reg->add_option("--char", characteristic, "field characteristic (0 = rationals)");
    reg->add_flag("--oracle", reg_oracle, "use the multigraded Betti number oracle");
    reg->add_flag("--witness", reg_witness, "include the extremal witness");
    reg->add_flag("--closure", reg_closure, "compute for the integral closure instead");

    // closure
    IdealArgs closure_args;
    bool closure_json = false;
    auto *closure = app.add_subcommand("closure", "integral closure of a monomial ideal");
    add_ideal_options(closure, closure_args);
    closure->add_flag("--json", closure_json, "print {n, gens} JSON instead of text");

    // member
    IdealArgs member_args;
    std::string member_exp;
    auto *member = app.add_subcommand("member", "Newton polyhedron membership with a rational certificate");
    add_ideal_options(member, member_args);
    member->add_option("--exp", member_exp, "exponent, e.g. 5,1,1")->required();

    // degree-complex
    IdealArgs dc_args;
    std::string dc_exp;
    bool dc_closure = false;
    auto *dc = app.add_subcommand("degree-complex", "Stanley-Reisner complex of sqrt(I : x^a)");
    add_ideal_options(dc, dc_args);
    dc->add_option("--exp", dc_exp, "exponent a")->required();
    dc->add_flag("--closure", dc_closure, "use the integral closure of I");
    dc->add_option("--char", characteristic, "field characteristic for the homology");

    // homology
    std::string complex_source;
    auto *homology = app.add_subcommand("homology", "reduced homology of a simplicial complex");
    homology->add_option("--complex", complex_source, "facets JSON file or inline JSON")->required();
    homology->add_option("--char", characteristic, "field characteristic (0 = rationals)");

    // edge-ideal
    std::string graph_source;
    bool normalize_sources = false;
    bool edge_json = false;
    auto *edge = app.add_subcommand("edge-ideal", "edge ideal I(D,w) of a weighted oriented graph");
    edge->add_option("--graph", graph_source, "graph JSON file or inline JSON")->required();
    edge->add_flag("--normalize-sources", normalize_sources, "reset weighted sources to 1 with a warning");
    edge->add_flag("--json", edge_json, "print {n, gens} JSON instead of text");

    // graph-reg
    bool graph_closure = false;
    bool graph_witness = false;
    auto *graph_reg = app.add_subcommand("graph-reg", "regularity of I(D,w) or its integral closure");
    graph_reg->add_option("--graph", graph_source, "graph JSON file or inline JSON")->required();
    graph_reg->add_flag("--normalize-sources", normalize_sources, "reset weighted sources to 1 with a warning");
    graph_reg->add_flag("--closure", graph_closure, "use the integral closure");
    graph_reg->add_flag("--witness", graph_witness, "include the extremal witness");
    graph_reg->add_option("--char", characteristic, "field characteristic (0 = rationals)");

    // verify
    std::string suite;
    mc::VerificationParams params;
    std::optional<std::uint64_t> seed;
    std::vector<unsigned> chars;
    std::string replay;
    bool no_timing = false;
    auto *verify = app.add_subcommand("verify", "randomized verification suite");
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(mc::suite_names()));
    verify->add_option("--n", params.n, "largest instance size");
    verify->add_option("--wmax", params.wmax, "largest weight (rho bound for ideal suites)");
    verify->add_option("--count", params.count, "number of random instances");
    verify->add_option("--closure-count", params.closure_count, "radical-formulas: closure-side instances");
    verify->add_option("--max-gens", params.max_gens, "ideal suites: generators per ideal");
    verify->add_option("--seed", seed, "RNG seed (default: MC_SEED or 1)");
    verify->add_flag("--exhaustive", params.exhaustive, "enumerate instead of sampling where supported");
    verify->add_flag("--allow-large", params.allow_large, "lift the n <= 8, weight <= 6 caps");
    verify->add_option("--char", chars, "field characteristics to test (repeatable)");
    verify->add_option("--threads", params.threads, "worker threads (0 = all cores)");
    verify->add_option("--replay", replay, "re-run one instance JSON (file or inline) from a failure record");
    verify->add_flag("--no-timing", no_timing, "omit timing from the report");

    auto *golden = app.add_subcommand("golden", "replay the fixed worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const mc::Field field(characteristic);

        if (reg->parsed()) {
            auto ideal = load_ideal(reg_args);
            if (reg_closure) {
                ideal = mc::integral_closure(ideal);
            }
            const auto report = reg_oracle ? mc::regularity_oracle_koszul(ideal, field) : mc::regularity(ideal, field);
            print(mc::io::report_to_json(report, reg_witness));
            std::cerr << "reg(I) = " << report.reg_ideal << " over " << field.name() << '\n';
        } else if (closure->parsed()) {
            const auto result = mc::integral_closure(load_ideal(closure_args));
            if (closure_json) {
                print(mc::io::ideal_to_json(result));
            } else {
                std::cout << result.to_string() << '\n';
            }
        } else if (member->parsed()) {
            const auto ideal = load_ideal(member_args);
            const auto a = mc::io::parse_exponent(member_exp);
            const auto result = mc::np_membership(ideal, a);
            json out{{"member", result.member}, {"in_ideal", ideal.contains(a)}};
            if (result.certificate) {
                out["certificate"] = mc::io::certificate_to_json(*result.certificate);
            }
            print(out);
            std::cerr << a.to_string() << (result.member ? " is" : " is not")
                      << " in the integral closure\n";
        } else if (dc->parsed()) {
            auto ideal = load_ideal(dc_args);
            if (dc_closure) {
                ideal = mc::integral_closure(ideal);
            }
            const auto a = mc::io::parse_exponent(dc_exp);
            const auto complex = mc::degree_complex(ideal, a);
            print(json{{"associated_radical", mc::radical(mc::colon(ideal, a)).to_string()},
                       {"complex", mc::io::complex_to_json(complex)},
                       {"homology", mc::io::homology_to_json(mc::reduced_homology(complex, field))}});
        } else if (homology->parsed()) {
            const auto complex = mc::io::parse_complex(mc::io::read_file_or_inline(complex_source));
            print(mc::io::homology_to_json(mc::reduced_homology(complex, field)));
        } else if (edge->parsed() || graph_reg->parsed()) {
            const auto graph = mc::io::parse_graph(mc::io::read_file_or_inline(graph_source), normalize_sources);
            for (const auto &w : graph.warnings()) {
                std::cerr << "warning: " << w << '\n';
            }
            auto ideal = mc::edge_ideal(graph);
            if (edge->parsed()) {
                if (edge_json) {
                    print(mc::io::ideal_to_json(ideal));
                } else {
                    std::cout << ideal.to_string() << '\n';
                }
            } else {
                if (graph_closure) {
                    ideal = mc::integral_closure(ideal);
                }
                const auto report = mc::regularity(ideal, field);
                auto out = mc::io::report_to_json(report, graph_witness);
                if (graph.is_complete() && graph.vertex_count() >= 2) {
                    out["complete_graph_prediction"] =
                        graph_closure ? mc::complete_closure_reg(graph) : mc::complete_graph_reg(graph);
                }
                print(out);
                std::cerr << (graph_closure ? "reg(closure of I(D,w)) = " : "reg(I(D,w)) = ") << report.reg_ideal
                          << '\n';
            }
        } else if (verify->parsed()) {
            params.seed = seed.value_or(mc::default_seed());
            for (auto c : chars) {
                params.fields.emplace_back(c);
            }
            if (!replay.empty()) {
                const auto instance = json::parse(mc::io::read_file_or_inline(replay));
                const auto outcome = mc::replay_instance(suite, instance.contains("instance") ? instance.at("instance")
                                                                                             : instance);
                print(json{{"suite", suite}, {"passed", !outcome}, {"detail", outcome.value_or("")}});
                return outcome ? kExitFailure : 0;
            }
            return finish_run(mc::run_suite(suite, params), !no_timing);
        } else if (golden->parsed()) {
            return finish_run(mc::run_golden(), true);
        }
    } catch (const mc::ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
