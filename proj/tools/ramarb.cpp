// ramarb: command-line front end for the RAM arbiter simulator.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ramarb/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Cycle-accurate RAM arbiter simulator"};
    app.require_subcommand(1);

    ramarb::RunConfig run_cfg;
    bool reg_on = false, reg_off = false;
    auto* run = app.add_subcommand("run", "Run one scenario and check its assertions");
    auto* src = run->add_option_group("source");
    src->add_option("--builtin", run_cfg.builtin, "Builtin scenario name or tag (e.g. tc07)");
    src->add_option("--file", run_cfg.file, "Scenario file");
    src->require_option(1);
    run->add_option("--vcd", run_cfg.vcd_path, "Write a VCD waveform ('-' for stdout)");
    run->add_option("--table", run_cfg.table_path, "Write a tab-separated table ('-' for stdout)");
    run->add_option("--report", run_cfg.report_path, "Write per-assertion results as TSV");
    auto* on = run->add_flag("--registered", reg_on, "Force the registered client1 read output");
    run->add_flag("--unregistered", reg_off, "Force the unregistered client1 read output")->excludes(on);

    ramarb::VerifyConfig verify_cfg;
    auto* verify = app.add_subcommand("verify", "Run the builtin corpus in both output modes");
    verify->add_option("--filter", verify_cfg.filter, "Glob over scenario names (e.g. 'tc2*')");
    verify->add_option("--report", verify_cfg.report_path, "Write the per-case summary as TSV");

    ramarb::FuzzConfig fuzz_cfg;
    std::string fuzz_report;
    auto* fuzz = app.add_subcommand("fuzz", "Random legal stimulus with per-edge invariant checks");
    fuzz->add_option("--seed", fuzz_cfg.seed, "64-bit seed")->required();
    fuzz->add_option("--cycles", fuzz_cfg.cycles, "Number of clock edges")->required();
    fuzz->add_option("--addr-width", fuzz_cfg.params.addr_width, "Address width in bits");
    fuzz->add_option("--data-width", fuzz_cfg.params.data_width, "Data width in bits");
    fuzz->add_flag("--registered", fuzz_cfg.params.registered_output, "Registered client1 read output");
    fuzz->add_flag("--reset-storm", fuzz_cfg.reset_storm, "Randomly reassert reset during the run");
    fuzz->add_option("--report", fuzz_report, "Write the summary as TSV");

    auto* list = app.add_subcommand("list", "List builtin scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : int(ramarb::ExitCode::usage);
    }

    if (run->parsed()) {
        if (reg_on) run_cfg.registered = true;
        if (reg_off) run_cfg.registered = false;
        return ramarb::cmd_run(run_cfg, std::cout, std::cerr);
    }
    if (verify->parsed()) return ramarb::cmd_verify(verify_cfg, std::cout, std::cerr);
    if (fuzz->parsed()) return ramarb::cmd_fuzz(fuzz_cfg, fuzz_report, std::cout, std::cerr);
    if (list->parsed()) return ramarb::cmd_list(std::cout);
    return int(ramarb::ExitCode::usage);
}
