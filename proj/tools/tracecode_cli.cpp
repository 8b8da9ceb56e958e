// Command-line front end: reproduce the construction tables, report
// generalized Hamming weight ladders with witnesses, and run the invariant
// suite for one field.
//
// Exit codes: 0 all checks pass, 1 cross-check failure, 2 usage error,
// 3 cost-guard refusal.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tracecode/report.hpp"

namespace {

using tracecode::report::Options;

struct CommonArgs {
    std::string modulus;
    std::string format = "text";
    std::uint64_t max_ops = std::uint64_t{1} << 28;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--modulus", args.modulus, "irreducible modulus as a hex bitmask (default: built-in)");
    cmd->add_option("--format", args.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--max-ops", args.max_ops, "cost guard for exhaustive enumerations");
    cmd->add_option("--jobs", args.jobs, "worker threads for enumeration sweeps")
        ->check(CLI::Range(1, 64));
}

Options to_options(const CommonArgs& args) {
    Options opt;
    if (!args.modulus.empty())
        opt.modulus = static_cast<std::uint32_t>(tracecode::parse_hex_mask(args.modulus));
    opt.max_ops = args.max_ops;
    opt.jobs = args.jobs;
    return opt;
}

template <typename Report>
int emit(const Report& rep, const std::string& format) {
    if (format == "json")
        std::cout << tracecode::report::to_json(rep).dump(2) << "\n";
    else
        std::cout << tracecode::report::to_text(rep);
    return rep.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace codes, quadratic forms and curve counts over F_{2^m}"};
    app.set_help_flag("--help", "print help"); // frees -h/--h for the code parameter
    app.require_subcommand(1);

    CommonArgs targs, gargs, vargs;
    int t_m = 0, t_h = 0, g_m = 0, g_h = 0, v_m = 0;
    std::string t_case, t_preset, g_preset;
    int t_rmax = 0;
    bool g_exhaustive = false, v_deep = false;

    CLI::App* table = app.add_subcommand("table", "curve table (r, genus, points, bound) for one construction case");
    table->set_help_flag("--help", "print help");
    table->add_option("--m", t_m, "extension degree")->required();
    table->add_option("--h", t_h, "code parameter h")->required();
    table->add_option("--case", t_case, "expected case label (I, II, III)")
        ->check(CLI::IsMember({"I", "II", "III"}));
    table->add_option("--preset", t_preset, "a-tuple preset: generic, subfield-F8, f4-element");
    table->add_option("--rmax", t_rmax, "number of rows (default: min(max r, 4))");
    add_common(table, targs);

    CLI::App* ghw = app.add_subcommand("ghw", "generalized Hamming weight ladder with witness subcodes");
    ghw->set_help_flag("--help", "print help");
    ghw->add_option("--m", g_m, "extension degree")->required();
    ghw->add_option("--h", g_h, "code parameter h")->required();
    ghw->add_flag("--exhaustive", g_exhaustive, "also run the exhaustive subspace oracles where feasible");
    ghw->add_option("--preset", g_preset, "a-tuple preset");
    add_common(ghw, gargs);

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite for one field");
    verify->set_help_flag("--help", "print help");
    verify->add_option("--m", v_m, "extension degree (<= 12)")->required();
    verify->add_flag("--deep", v_deep, "extended checks (m <= 9)");
    add_common(verify, vargs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto started = std::chrono::steady_clock::now();
    int rc = 2;
    try {
        if (table->parsed()) {
            Options opt = to_options(targs);
            if (!t_case.empty()) opt.case_override = t_case;
            if (!t_preset.empty()) opt.preset = t_preset;
            if (t_rmax > 0) opt.rmax = t_rmax;
            auto rep = tracecode::report::run_table(t_m, t_h, opt);
            if (targs.format == "csv") {
                std::cout << tracecode::report::to_csv(rep);
                rc = rep.all_pass ? 0 : 1;
            } else {
                rc = emit(rep, targs.format);
            }
        } else if (ghw->parsed()) {
            Options opt = to_options(gargs);
            opt.exhaustive = g_exhaustive;
            if (!g_preset.empty()) opt.preset = g_preset;
            rc = emit(tracecode::report::run_ghw(g_m, g_h, opt), gargs.format);
        } else if (verify->parsed()) {
            Options opt = to_options(vargs);
            opt.deep = v_deep;
            rc = emit(tracecode::report::run_verify(v_m, opt), vargs.format);
        }
    } catch (const tracecode::CostGuardExceeded& e) {
        std::cerr << "cost guard: " << e.what() << "\n";
        return 3;
    } catch (const tracecode::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "wall time: " << elapsed.count() << " ms\n";
    return rc;
}
