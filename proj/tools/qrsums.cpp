// qrsums: quadratic-residue tangent/cotangent sums, class numbers and the
// identities linking them, computed exactly and cross-checked.

#include "qrsums/app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

namespace {

using namespace qrs;

int run(int argc, char** argv) {
    CLI::App cli{"Exact quadratic-residue trigonometric sums and class numbers"};
    cli.require_subcommand(1);

    std::uint64_t report_p = 0;
    bool report_float = false, report_json = false;
    auto* report_cmd = cli.add_subcommand("report", "All quantities for one prime");
    report_cmd->add_option("p", report_p, "Prime")->required();
    report_cmd->add_flag("--float", report_float, "Include floating-point checks");
    report_cmd->add_flag("--json", report_json, "Emit JSON");

    app::ScanOptions scan_opts;
    std::string format = "csv", out_path;
    auto* scan_cmd = cli.add_subcommand("scan", "Table of exact values for p = 3 (mod 4)");
    scan_cmd->add_option("--from", scan_opts.lo, "Lower bound")->required();
    scan_cmd->add_option("--to", scan_opts.hi, "Upper bound")->required();
    scan_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    scan_cmd->add_option("--out", out_path, "Output path (default: standard output)");
    scan_cmd->add_option("--jobs", scan_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);

    app::VerifyOptions verify_opts;
    auto* verify_cmd = cli.add_subcommand("verify", "Run the invariant suite over a range");
    verify_cmd->add_option("--from", verify_opts.lo, "Lower bound")->required();
    verify_cmd->add_option("--to", verify_opts.hi, "Upper bound")->required();
    verify_cmd->add_flag("--float", verify_opts.with_float, "Include floating-point checks");
    verify_cmd->add_option("--float-cap", verify_opts.float_cap, "Largest p for float checks");

    std::uint64_t gauss_p = 0;
    auto* gauss_cmd = cli.add_subcommand("gauss", "Gauss sums S(k, p) for k = 1..p-1");
    gauss_cmd->add_option("--p", gauss_p, "Prime = 3 (mod 4)")->required();

    try {
        cli.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return cli.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return cli.exit(e);
    } catch (const CLI::ParseError& e) {
        cli.exit(e);
        return app::kExitUsage;
    }

    if (*report_cmd) {
        app::report(report_p, report_float, report_json, std::cout);
        return app::kExitOk;
    }
    if (*scan_cmd) {
        scan_opts.format = format == "json" ? app::Format::Json : app::Format::Csv;
        app::check_scan_range(scan_opts.lo, scan_opts.hi);
        if (out_path.empty()) {
            app::scan(scan_opts, std::cout);
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file)
                throw app::IoError("cannot open " + out_path + " for writing");
            app::scan(scan_opts, file);
        }
        return app::kExitOk;
    }
    if (*verify_cmd) {
        const auto rep = app::verify(verify_opts);
        app::print_verify_report(rep, std::cout);
        return rep.ok() ? app::kExitOk : app::kExitVerifyFailed;
    }
    if (*gauss_cmd)
        return app::gauss_table(gauss_p, std::cout) ? app::kExitOk : app::kExitVerifyFailed;
    return app::kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qrs::app::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return qrs::app::kExitUsage;
    } catch (const qrs::DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return qrs::app::kExitUsage;
    } catch (const qrs::app::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return qrs::app::kExitIo;
    } catch (const qrs::InvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << '\n';
        return qrs::app::kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return qrs::app::kExitInternal;
    }
}
