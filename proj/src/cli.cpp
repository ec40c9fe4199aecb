#include "bnet/cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "bnet/codec.hpp"
#include "bnet/report.hpp"
#include "bnet/scenario.hpp"

namespace bnet {

namespace {

struct RunOptions
{
    std::string scenario;
    std::string out;
    std::string json;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    int threads = 1;
    std::vector<std::string> overrides;
};

int do_run(RunOptions const& o, std::ostream& out, std::ostream& err)
{
    Scenario s;
    try {
        s = make_scenario(o.scenario);
        for (auto const& kv : o.overrides)
            apply_override(s.base, kv);
        if (o.seed)
            s.seed = *o.seed;
        if (o.trials)
            s.trials = *o.trials;
        s.validate();
    } catch (UsageError const& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (ConfigError const& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }

    try {
        auto const rows = run_scenario(s, o.threads);
        report::write_csv(rows, o.out);
        if (!o.json.empty())
            report::write_json(rows, o.json);
        out << "wrote " << rows.size() << " rows to " << o.out << '\n';
    } catch (std::exception const& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::runtime_error;
    }
    return exit_code::ok;
}

}  // namespace

int cli_main(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Single-link bacterial nanonetwork simulator", "bnet"};
    app.require_subcommand(1);

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "run a scenario sweep and write CSV");
    run_cmd->add_option("--scenario", run.scenario, "scenario name (see list-scenarios)")->required();
    run_cmd->add_option("--out", run.out, "CSV output path")->required();
    run_cmd->add_option("--json", run.json, "also write a JSON mirror here");
    run_cmd->add_option("--seed", run.seed, "master seed");
    run_cmd->add_option("--trials", run.trials, "trials per arm and sweep point")
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--threads", run.threads, "worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
    run_cmd->add_option("--set", run.overrides, "override a model parameter, key=value")
        ->allow_extra_args();

    std::string bits;
    std::string policy = "canonical";
    auto* enc = app.add_subcommand("encode", "encode a bit string into bases");
    enc->add_option("bits", bits, "string of 0/1")->required();
    enc->add_option("--policy", policy, "canonical|complement|alternating|seeded:<n>");

    std::string bases;
    auto* dec = app.add_subcommand("decode", "decode a base string into bits");
    dec->add_option("bases", bases, "string over A, C, G, T")->required();

    auto* list = app.add_subcommand("list-scenarios", "print scenario names");
    auto* params = app.add_subcommand("list-params", "print parameters and defaults");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return exit_code::ok;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::ok;
    } catch (CLI::ParseError const& e) {
        err << "error: " << e.what() << '\n';
        for (auto* sub : app.get_subcommands()) {
            err << sub->help();
            return exit_code::usage;
        }
        err << app.help();
        return exit_code::usage;
    }

    if (*list) {
        for (auto const name : scenario_names())
            out << name << '\n';
        return exit_code::ok;
    }
    if (*params) {
        SimParams const defaults;
        for (auto const& f : param_fields())
            out << f.name << " = " << defaults.*f.member << "  # " << f.help << '\n';
        return exit_code::ok;
    }
    if (*enc) {
        try {
            auto const encoded
                = codec::encode(codec::BitString::parse(bits), codec::BasePolicy::by_name(policy));
            out << encoded.str() << '\n';
        } catch (std::invalid_argument const& e) {
            err << "error: " << e.what() << '\n';
            return exit_code::usage;
        }
        return exit_code::ok;
    }
    if (*dec) {
        try {
            out << codec::decode(bases).str() << '\n';
        } catch (codec::DecodeError const& e) {
            err << "error: " << e.what() << '\n';
            return exit_code::usage;
        }
        return exit_code::ok;
    }
    return do_run(run, out, err);
}

}  // namespace bnet
