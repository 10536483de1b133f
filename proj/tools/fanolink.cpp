#include <fanolink/runner.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::string default_out_dir() {
    const char* env = std::getenv("FANOLINK_OUT");
    return env && *env ? env : ".";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the two-line blowup links of prime Fano threefolds"};
    app.require_subcommand(1);

    fanolink::RunConfig cfg;
    cfg.out_dir = default_out_dir();

    auto* verify = app.add_subcommand("verify", "run verification suites and write report.json");
    verify->add_option("--genus", cfg.genera, "genus selection (9, 10, 12); repeatable");
    verify->add_option("--suite", cfg.suite_globs, "suite id glob, e.g. 'cone.*'; repeatable");
    verify->add_option("--format", cfg.format, "report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", cfg.out_dir, "output directory");
    verify->add_flag("--figures", cfg.figures, "also write the chamber-slice figures");

    auto* plot = app.add_subcommand("plot", "write the chamber-slice SVG figures");
    plot->add_option("--genus", cfg.genera, "genus selection (9, 10, 12); repeatable");
    plot->add_option("--out", cfg.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!fanolink::valid_config(cfg)) {
        std::cerr << "fanolink: unsupported genus; valid values are 9, 10, 12\n";
        return 2;
    }

    try {
        if (app.got_subcommand("verify")) return fanolink::run(cfg);
        return fanolink::plot(cfg);
    } catch (const std::exception& e) {
        std::cerr << "fanolink: " << e.what() << "\n";
        return 1;
    }
}
