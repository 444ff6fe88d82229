#include <CLI11.hpp>

#include <iostream>

#include "app/commands.hpp"
#include "app/report.hpp"
#include "esymlab/builtins.hpp"
#include "esymlab/sequences.hpp"

using namespace esymlab::app;

int main(int argc, char** argv) {
    CLI::App app{"esymlab: elementary symmetric functions of partitions, exact and modular"};
    app.require_subcommand(1);

    std::optional<std::string> cache_dir;
    unsigned jobs = 1;
    app.add_option("--cache-dir", cache_dir, "Sequence cache directory (overrides ESYMLAB_CACHE)");
    app.add_option("--jobs", jobs, "Worker threads for per-n fan-out")->check(CLI::Range(1u, 256u));

    std::string names;
    for (const auto& n : esymlab::registered_sequences()) names += (names.empty() ? "" : ", ") + n;

    SeqOptions seq;
    auto* seq_cmd = app.add_subcommand("seq", "Print a registered sequence");
    seq_cmd->add_option("--name", seq.name, "One of: " + names)->required();
    seq_cmd->add_option("--from", seq.from, "First index (default: first defined index)");
    seq_cmd->add_option("--to", seq.to, "Last index")->required();
    seq_cmd->add_option("--format", seq.format, "csv or json");
    seq_cmd->add_option("--mod", seq.mod, "Print residues modulo m");
    seq_cmd->add_option("--j", seq.j, "Exponent j (sigma only)");
    seq_cmd->add_option("--src", seq.src, "Part source: all, odd, binary, finite:a,b,... (sigma only)");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", verify.suite, "Suite name, or all")->required();
    verify_cmd->add_option("--n-max", verify.suite_options.n_max, "Override the suite's index bound");
    verify_cmd->add_option("--order", verify.suite_options.order, "Series truncation order (gf-identities)");
    verify_cmd->add_option("--format", verify.format, "text (report then JSON summary) or json");

    PeriodOptions period;
    auto* period_cmd = app.add_subcommand("period", "Detect the eventual period of a sequence modulo m");
    period_cmd->add_option("--name", period.name, "Sequence name")->required();
    period_cmd->add_option("--mod", period.mod, "Modulus")->required();
    period_cmd->add_option("--window", period.window, "Number of residues examined");
    period_cmd->add_flag("--extend", period.extend, "Continue past the exact prefix by the order-22 recurrence");
    period_cmd->add_option("--burn-in-max", period.burn_in_max, "Largest burn-in considered");
    period_cmd->add_option("--format", period.format, "text or json");

    GfOptions gf;
    std::string builtins;
    for (const auto& n : esymlab::builtin_examples()) builtins += " #" + n;
    auto* gf_cmd = app.add_subcommand("gf", "Compare two series to a truncation order");
    gf_cmd->footer("Builtins include:" + builtins);
    gf_cmd->add_option("--lhs", gf.lhs, "Expression")->required();
    gf_cmd->add_option("--rhs", gf.rhs, "Expression or builtin name")->required();
    gf_cmd->add_option("--order", gf.order, "Truncation order");
    gf_cmd->add_option("--mod", gf.mod, "Compare modulo m");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        SequenceStore store = SequenceStore::from_settings(cache_dir);
        verify.suite_options.jobs = jobs;
        if (*seq_cmd) return cmd_seq(seq, store, std::cout, std::cerr);
        if (*verify_cmd) return cmd_verify(verify, store, std::cout, std::cerr);
        if (*period_cmd) return cmd_period(period, store, std::cout, std::cerr);
        if (*gf_cmd) return cmd_gf(gf, store, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
