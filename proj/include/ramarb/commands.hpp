// Implementations of the `run`, `verify`, `fuzz` and `list` subcommands.
// They write human output to `out`, diagnostics to `err` and return the
// process exit status; argument parsing lives in tools/ramarb.cpp.

#pragma once

#include <fnmatch.h>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ramarb/corpus.hpp"
#include "ramarb/fuzz.hpp"
#include "ramarb/trace.hpp"
#include "ramarb/vcd.hpp"

namespace ramarb {

enum class ExitCode : int { ok = 0, failed = 1, usage = 2 };

namespace detail {

// "-" means the standard output stream.
template <class Fn>
bool write_output(const std::string& path, std::ostream& out, std::ostream& err, Fn&& fn) {
    if (path == "-") {
        fn(out);
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << path << " for writing\n";
        return false;
    }
    fn(f);
    f.flush();
    if (!f) {
        err << "error: failed writing " << path << "\n";
        return false;
    }
    return true;
}

inline std::string describe(const Assertion& a) {
    if (a.kind == AssertionKind::pulses)
        return "pulses " + a.pin + " in " + std::to_string(a.time) + ".." + std::to_string(a.end);
    return "@" + std::to_string(a.time) + " " + a.pin + " = " + a.expected;
}

}  // namespace detail

struct RunConfig {
    std::string builtin;
    std::string file;
    std::string vcd_path;
    std::string table_path;
    std::string report_path;
    std::optional<bool> registered;
};

inline int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.builtin.empty() == cfg.file.empty()) {
        err << "error: give exactly one of --builtin or --file\n";
        return int(ExitCode::usage);
    }
    Scenario sc;
    if (!cfg.builtin.empty()) {
        const Scenario* found = find_builtin(cfg.builtin);
        if (!found) {
            err << "error: unknown scenario '" << cfg.builtin << "'\n";
            return int(ExitCode::usage);
        }
        sc = *found;
    } else {
        std::ifstream f(cfg.file, std::ios::binary);
        if (!f) {
            err << "error: cannot read " << cfg.file << "\n";
            return int(ExitCode::usage);
        }
        std::ostringstream text;
        text << f.rdbuf();
        try {
            sc = parse_scenario(text.str());
        } catch (const ScenarioParseError& e) {
            err << cfg.file << ": " << e.what() << "\n";
            return int(ExitCode::usage);
        }
    }
    if (cfg.registered) sc.params.registered_output = *cfg.registered;

    Trace t;
    try {
        t = run_scenario(sc);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return int(ExitCode::failed);
    }
    const AssertionReport rep = check_assertions(t, sc);

    // Waveforms on stdout must not be interleaved with the report.
    const bool report_to_err = cfg.vcd_path == "-" || cfg.table_path == "-";
    std::ostream& rout = report_to_err ? err : out;
    std::size_t failed = 0;
    for (const auto& r : rep.results) {
        if (!r.passed) {
            ++failed;
            rout << "FAIL " << detail::describe(r.assertion) << " (observed " << (r.observed.empty() ? "-" : r.observed)
                 << ", " << r.reason << ")\n";
        }
    }
    rout << sc.name << ": " << rep.results.size() - failed << "/" << rep.results.size() << " assertions passed"
         << (sc.params.registered_output ? " [registered]" : "") << "\n";

    bool io_ok = true;
    if (!cfg.vcd_path.empty())
        io_ok &= detail::write_output(cfg.vcd_path, out, err, [&](std::ostream& os) { write_vcd(t, os); });
    if (!cfg.table_path.empty())
        io_ok &= detail::write_output(cfg.table_path, out, err, [&](std::ostream& os) { write_table(t, os); });
    if (!cfg.report_path.empty()) {
        io_ok &= detail::write_output(cfg.report_path, out, err, [&](std::ostream& os) {
            os << "assertion\tobserved\tresult\n";
            for (const auto& r : rep.results)
                os << detail::describe(r.assertion) << '\t' << r.observed << '\t' << (r.passed ? "pass" : "fail")
                   << '\n';
        });
    }
    if (!io_ok) return int(ExitCode::failed);
    return rep.passed ? int(ExitCode::ok) : int(ExitCode::failed);
}

struct VerifyConfig {
    std::string filter;
    std::string report_path;
};

struct VerifyRow {
    std::string name;
    bool registered = false;
    std::size_t assertions = 0;
    std::size_t failed = 0;
    std::string first_failure;
};

/// Runs every scenario of `corpus` matching the filter; system scenarios run
/// in both output modes, bare-RAM scenarios once.
inline std::vector<VerifyRow> verify_corpus(const std::vector<Scenario>& corpus, const std::string& filter) {
    std::vector<VerifyRow> rows;
    for (const auto& base : corpus) {
        if (!filter.empty() && fnmatch(filter.c_str(), base.name.c_str(), 0) != 0) continue;
        std::vector<bool> modes{false};
        if (base.target == Target::system) modes.push_back(true);
        for (bool reg : modes) {
            Scenario sc = base;
            sc.params.registered_output = reg;
            const AssertionReport rep = check_assertions(run_scenario(sc), sc);
            VerifyRow row{sc.name, reg, rep.results.size(), 0, ""};
            for (const auto& r : rep.results) {
                if (r.passed) continue;
                if (row.failed++ == 0) row.first_failure = detail::describe(r.assertion);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline void write_verify_report(const std::vector<VerifyRow>& rows, std::ostream& os) {
    os << "scenario\tmode\tassertions\tfailed\tresult\tfirst_failure\n";
    for (const auto& r : rows)
        os << r.name << '\t' << (r.registered ? "registered" : "unregistered") << '\t' << r.assertions << '\t'
           << r.failed << '\t' << (r.failed == 0 ? "pass" : "fail") << '\t' << r.first_failure << '\n';
}

inline int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err,
                      const std::vector<Scenario>& corpus = builtin_scenarios()) {
    const auto rows = verify_corpus(corpus, cfg.filter);
    if (rows.empty()) {
        err << "error: no scenario matches '" << cfg.filter << "'\n";
        return int(ExitCode::usage);
    }

    std::size_t cases = 0, cases_ok = 0;
    std::string last;
    bool case_ok = true;
    auto close_case = [&] {
        if (last.empty()) return;
        ++cases;
        cases_ok += case_ok;
    };
    for (const auto& r : rows) {
        if (r.name != last) {
            close_case();
            last = r.name;
            case_ok = true;
        }
        case_ok = case_ok && r.failed == 0;
        out << (r.failed == 0 ? "PASS" : "FAIL") << "  " << r.name << (r.registered ? " [registered]" : "") << "  "
            << r.assertions - r.failed << "/" << r.assertions;
        if (r.failed) out << "  first failure: " << r.first_failure;
        out << '\n';
    }
    close_case();
    out << cases_ok << "/" << cases << " scenarios passed\n";

    if (!cfg.report_path.empty() &&
        !detail::write_output(cfg.report_path, out, err, [&](std::ostream& os) { write_verify_report(rows, os); }))
        return int(ExitCode::failed);
    return cases_ok == cases ? int(ExitCode::ok) : int(ExitCode::failed);
}

inline void write_fuzz_summary(const FuzzConfig& cfg, const FuzzResult& r, std::ostream& os) {
    os << "seed\t" << cfg.seed << '\n'
       << "cycles\t" << r.cycles_run << '\n'
       << "client1_read_cycles\t" << r.client1_read_grants << '\n'
       << "client2_read_cycles\t" << r.client2_read_grants << '\n'
       << "client1_write_cycles\t" << r.client1_write_grants << '\n'
       << "client2_write_cycles\t" << r.client2_write_grants << '\n'
       << "clash_cycles\t" << r.clash_cycles << '\n'
       << "ack_cycles\t" << r.ack_cycles << '\n'
       << "violations\t" << (r.violation ? r.violation->what.size() : 0) << '\n';
}

inline int cmd_fuzz(const FuzzConfig& cfg, const std::string& report_path, std::ostream& out, std::ostream& err) {
    if (cfg.cycles < 1) {
        err << "error: --cycles must be at least 1\n";
        return int(ExitCode::usage);
    }
    try {
        cfg.params.validate();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return int(ExitCode::usage);
    }
    const FuzzResult r = run_fuzz(cfg);
    write_fuzz_summary(cfg, r, out);
    if (r.violation) {
        err << "violation at seed " << cfg.seed << ", reproducing prefix " << r.violation->prefix_length
            << " cycles:\n";
        for (const auto& w : r.violation->what) err << "  " << w << '\n';
    }
    if (!report_path.empty() &&
        !detail::write_output(report_path, out, err, [&](std::ostream& os) { write_fuzz_summary(cfg, r, os); }))
        return int(ExitCode::failed);
    return r.violation ? int(ExitCode::failed) : int(ExitCode::ok);
}

inline int cmd_list(std::ostream& out) {
    for (const auto& s : builtin_scenarios())
        out << s.name << '\t' << (s.target == Target::ram ? "ram" : "system") << '\t' << s.assertions.size()
            << " assertions\n";
    return int(ExitCode::ok);
}

}  // namespace ramarb
