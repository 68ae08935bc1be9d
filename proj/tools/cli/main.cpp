#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <iterator>

using namespace orbistack::cli;

int main(int argc, char **argv) {
    CLI::App app{"Weighted projective stacks, monomial immersions and diagonal torus GIT"};
    app.require_subcommand(1);
    JobSpec job;
    std::string weights, chi;

    const auto add_weights = [&](CLI::App *sub) {
        sub->add_option("--weights", weights, "weights a0,...,an (positive)")->required();
    };
    const auto add_action = [&](CLI::App *sub) {
        sub->add_option("--matrix", job.matrix, "weight matrix, rows separated by ';'")->required();
        sub->add_option("--chi", chi, "character, comma separated")->required();
    };
    const auto add_bound = [&](CLI::App *sub) {
        sub->add_option("--degree-bound", job.degree_bound,
                        "certification degree bound (overrides ORBISTACK_DEGREE_BOUND)");
    };

    auto *sections = app.add_subcommand("sections", "monomial basis of H^0(O(d))");
    add_weights(sections);
    sections->add_option("--degree", job.degree)->required();
    sections->add_flag("--pretty", job.pretty, "print monomials instead of JSON");

    auto *series = app.add_subcommand("hilbert-series", "dim H^0(O(d)) for d = 0..D");
    add_weights(series);
    series->add_option("--max-degree", job.max_degree)->required();

    auto *ample = app.add_subcommand("ample-check", "faithfulness and ampleness of O(d)");
    add_weights(ample);
    ample->add_option("--degree", job.degree)->required();

    auto *embed = app.add_subcommand("embed", "embedding data (m0, N, V1, V2) for O(d')");
    add_weights(embed);
    embed->add_option("--degree", job.degree, "d'")->required();
    embed->add_option("--max-n", job.max_n, "largest N tried")->capture_default_str();
    embed->add_flag("--pretty", job.pretty, "print the coordinate map");

    auto *verify = app.add_subcommand("verify", "check that embedding data gives an immersion");
    verify->add_option("--data", job.data, "embed output or data object; '-' for stdin")->required();
    add_bound(verify);

    auto *recover = app.add_subcommand("recover", "recover (d', N, m0, V1, V2) from the map");
    recover->add_option("--data", job.data, "embed output or data object; '-' for stdin")->required();

    auto *locus = app.add_subcommand("stable-locus", "minimal chi-stable supports (1-based)");
    add_action(locus);
    locus->add_option("--support", job.support, "certificate for one support, e.g. 1,2");

    auto *proj = app.add_subcommand("proj", "generators of the semi-invariant ring");
    add_action(proj);
    add_bound(proj);
    proj->add_flag("--pretty", job.pretty, "print generators");

    auto *morph = app.add_subcommand("morphism-check", "morphism defined by sections of O(d')");
    add_weights(morph);
    morph->add_option("--degree", job.degree, "d'")->required();
    morph->add_option("--sections", job.sections, "e.g. \"1,0:1;0,1:3\"")->required();

    auto *self = app.add_subcommand("selftest", "reproduce P(1,3) and run the oracle suites");
    self->add_flag("--pretty", job.pretty, "one line per check");

    try {
        app.parse(argc, argv);
        job.command = app.get_subcommands().front()->get_name();
        if (!weights.empty())
            job.weights = parse_int_list(weights, "--weights");
        if (locus->parsed() || proj->parsed()) {
            job.chi = parse_int_list(chi, "--chi");
            job.chi_given = true;
        }
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        const orbistack::InvalidArgument err(e.what());
        Json out{{"schema", schema_version}, {"command", nullptr}, {"error", error_json(err)}};
        std::cout << dump(out);
        return 2;
    } catch (const orbistack::Error &e) {
        Json out{{"schema", schema_version}, {"command", app.get_subcommands().empty()
                                                             ? Json(nullptr)
                                                             : Json(app.get_subcommands().front()->get_name())},
                 {"error", error_json(e)}};
        std::cout << dump(out);
        return 2;
    }

    if (const char *env = std::getenv("ORBISTACK_DEGREE_BOUND"))
        job.env_degree_bound = env;
    if (job.data && *job.data == "-")
        job.stdin_text.assign(std::istreambuf_iterator<char>(std::cin), {});

    const auto res = run(job);
    std::cout << res.output;
    return res.exit_code;
}
