// Timed stimulus scripts in a small line-oriented text format modelled on
// VHDL testbench stimulus processes.
//
//   # comment
//   scenario tc02-c1-read
//   params addr=4 data=8 registered=0
//   clock 50
//   @100 RST_N = 1
//   @600 WR_EN_C1 = 1
//   expect @3500 RDDATA_C1 = 10100011
//   expect @3500 ACK_C2 = low
//   expect pulses ACK_C2 in 2000..3000
//   run 4000
//
// Only `run` is mandatory. Events must be listed in nondecreasing time
// order; events at equal times apply in file order. A scenario drives either
// the full arbiter system (client pins) or the bare RAM (RAM port pins); the
// target is inferred from the input pins used and mixing the two is an
// error.

#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramarb/arbiter.hpp"
#include "ramarb/ram.hpp"
#include "ramarb/signal.hpp"

namespace ramarb {

enum class Target : std::uint8_t { system, ram };

enum class PinWidth : std::uint8_t { bit, addr, data, state };

enum class PinRole : std::uint8_t { input, observable };

struct PinSpec {
    std::string_view name;
    PinWidth width;
    PinRole role;
    bool system;  // present on the arbiter system
    bool ram;     // present on the bare RAM
};

/// Width of the channel-state buses in traces.
inline constexpr unsigned state_bus_width = 3;

// Observable signals appear in traces and may be asserted on. RD_EN, WR_EN,
// RD_ADDR, WR_ADDR and WR_DATA are RAM inputs on the bare RAM and the
// arbiter's drive registers on the system.
inline constexpr std::array<PinSpec, 24> pin_table{{
    {"RST_N", PinWidth::bit, PinRole::input, true, true},
    {"RD_EN_C1", PinWidth::bit, PinRole::input, true, false},
    {"WR_EN_C1", PinWidth::bit, PinRole::input, true, false},
    {"RDADDR_C1", PinWidth::addr, PinRole::input, true, false},
    {"WRADDR_C1", PinWidth::addr, PinRole::input, true, false},
    {"WRDATA_C1", PinWidth::data, PinRole::input, true, false},
    {"REQUEST_C2", PinWidth::bit, PinRole::input, true, false},
    {"RD_NOT_WRITE_C2", PinWidth::bit, PinRole::input, true, false},
    {"ADDR_C2", PinWidth::addr, PinRole::input, true, false},
    {"DATAIN_C2", PinWidth::data, PinRole::input, true, false},
    {"RD_EN", PinWidth::bit, PinRole::input, false, true},
    {"WR_EN", PinWidth::bit, PinRole::input, false, true},
    {"RD_ADDR", PinWidth::addr, PinRole::input, false, true},
    {"WR_ADDR", PinWidth::addr, PinRole::input, false, true},
    {"WR_DATA", PinWidth::data, PinRole::input, false, true},
    {"RDDATA_C1", PinWidth::data, PinRole::observable, true, false},
    {"DATAOUT_C2", PinWidth::data, PinRole::observable, true, false},
    {"ACK_C2", PinWidth::bit, PinRole::observable, true, false},
    {"RST_DONE", PinWidth::bit, PinRole::observable, true, false},
    {"RD_DATA", PinWidth::data, PinRole::observable, true, true},
    {"READ_STATE", PinWidth::state, PinRole::observable, true, false},
    {"WRITE_STATE", PinWidth::state, PinRole::observable, true, false},
    {"ADDR_CLASH", PinWidth::bit, PinRole::observable, true, false},
    {"RAM_SWEEP", PinWidth::bit, PinRole::observable, true, true},
}};

/// Port-list spellings accepted as aliases of the canonical names.
inline std::string_view canonical_pin(std::string_view name) {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 5> aliases{{
        {"RD_ADDR_C1", "RDADDR_C1"},
        {"WR_ADDR_C1", "WRADDR_C1"},
        {"WR_DATA_C1", "WRDATA_C1"},
        {"RD_DATA_C1", "RDDATA_C1"},
        {"DATA_OUT_C2", "DATAOUT_C2"},
    }};
    for (const auto& [alias, canon] : aliases)
        if (name == alias) return canon;
    return name;
}

inline const PinSpec* find_input_pin(std::string_view name) {
    for (const auto& p : pin_table)
        if (p.role == PinRole::input && p.name == name) return &p;
    return nullptr;
}

/// The drive-register names double as observables on the system target.
inline bool is_drive_signal(std::string_view name) {
    return name == "RD_EN" || name == "WR_EN" || name == "RD_ADDR" || name == "WR_ADDR" || name == "WR_DATA";
}

inline std::optional<PinWidth> observable_width(std::string_view name, Target target) {
    if (target == Target::system && is_drive_signal(name)) return find_input_pin(name)->width;
    for (const auto& p : pin_table) {
        if (p.role != PinRole::observable || p.name != name) continue;
        if ((target == Target::system && p.system) || (target == Target::ram && p.ram)) return p.width;
    }
    return std::nullopt;
}

inline unsigned width_bits(PinWidth w, const Params& p) {
    switch (w) {
        case PinWidth::bit: return 1;
        case PinWidth::addr: return p.addr_width;
        case PinWidth::data: return p.data_width;
        case PinWidth::state: return state_bus_width;
    }
    return 1;
}

struct Event {
    std::uint64_t time = 0;
    std::string pin;
    std::string value;

    friend bool operator==(const Event&, const Event&) = default;
};

enum class AssertionKind : std::uint8_t { value, pulses };

struct Assertion {
    AssertionKind kind = AssertionKind::value;
    /// Sample time for value checks; window start for pulse checks.
    std::uint64_t time = 0;
    /// Window end for pulse checks (inclusive).
    std::uint64_t end = 0;
    std::string pin;
    /// Binary literal, "high" or "low". Empty for pulse checks.
    std::string expected;

    /// Expected value as a binary string of the signal width.
    std::string expected_bits() const {
        if (expected == "high") return "1";
        if (expected == "low") return "0";
        return expected;
    }

    friend bool operator==(const Assertion&, const Assertion&) = default;
};

struct Scenario {
    std::string name;
    Params params;
    std::uint64_t clock_period = 100;
    Target target = Target::system;
    std::vector<Event> events;
    std::vector<Assertion> assertions;
    std::uint64_t duration = 0;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

class ScenarioParseError : public std::runtime_error {
public:
    ScenarioParseError(std::size_t line, const std::string& msg)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream is{std::string(s)};
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline std::uint64_t parse_ns(std::string_view tok, std::size_t line, std::string_view what) {
    if (tok.empty()) throw ScenarioParseError(line, "missing " + std::string(what));
    if (tok.front() == '-') throw ScenarioParseError(line, "negative " + std::string(what) + " '" + std::string(tok) + "'");
    std::uint64_t v = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ScenarioParseError(line, "bad " + std::string(what) + " '" + std::string(tok) + "'");
        if (v > (UINT64_MAX - 9) / 10) throw ScenarioParseError(line, std::string(what) + " out of range");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

inline std::string_view strip_comment(std::string_view s) {
    if (auto pos = s.find('#'); pos != std::string_view::npos) s = s.substr(0, pos);
    return s;
}

struct RawEvent {
    Event ev;
    std::size_t line;
};

struct RawAssertion {
    Assertion a;
    std::size_t line;
};

inline std::string_view key_value(std::string_view tok, std::string_view key, std::size_t line) {
    if (tok.size() <= key.size() + 1 || tok.substr(0, key.size()) != key || tok[key.size()] != '=')
        throw ScenarioParseError(line, "expected " + std::string(key) + "=<value>, got '" + std::string(tok) + "'");
    return tok.substr(key.size() + 1);
}

inline void check_literal(const std::string& value, unsigned width, std::size_t line, std::string_view pin) {
    try {
        (void)parse_word(value, width);
    } catch (const WordParseError& e) {
        throw ScenarioParseError(line, "bad value for " + std::string(pin) + ": " + e.what());
    }
}

}  // namespace detail

/// Parses and validates a scenario. Throws ScenarioParseError with the
/// offending line number.
inline Scenario parse_scenario(std::string_view text) {
    using namespace detail;
    Scenario sc;
    std::vector<RawEvent> events;
    std::vector<RawAssertion> asserts;
    std::optional<std::uint64_t> run;
    bool saw_params = false, saw_clock = false, saw_name = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const auto toks = split_ws(strip_comment(raw));
        if (toks.empty()) continue;
        const std::string& kw = toks[0];

        if (kw == "scenario") {
            if (toks.size() != 2) throw ScenarioParseError(line_no, "usage: scenario <name>");
            if (saw_name) throw ScenarioParseError(line_no, "duplicate scenario line");
            sc.name = toks[1];
            saw_name = true;
        } else if (kw == "params") {
            if (toks.size() < 2) throw ScenarioParseError(line_no, "usage: params [addr=<w>] [data=<w>] [registered=<0|1>]");
            if (saw_params) throw ScenarioParseError(line_no, "duplicate params line");
            Params p;
            std::uint64_t aw = p.addr_width, dw = p.data_width;
            bool seen[3] = {false, false, false};
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const auto eq = toks[i].find('=');
                const std::string key = toks[i].substr(0, eq);
                const int slot = key == "addr" ? 0 : key == "data" ? 1 : key == "registered" ? 2 : -1;
                if (slot < 0 || eq == std::string::npos)
                    throw ScenarioParseError(line_no, "unknown params key '" + toks[i] + "'");
                if (seen[slot]) throw ScenarioParseError(line_no, "duplicate params key '" + key + "'");
                seen[slot] = true;
                const auto val = key_value(toks[i], key, line_no);
                if (slot == 0) {
                    aw = parse_ns(val, line_no, "address width");
                } else if (slot == 1) {
                    dw = parse_ns(val, line_no, "data width");
                } else {
                    if (val != "0" && val != "1") throw ScenarioParseError(line_no, "registered must be 0 or 1");
                    p.registered_output = val == "1";
                }
            }
            if (aw < 1 || aw > Params::max_addr_width || dw < 1 || dw > Word::max_width)
                throw ScenarioParseError(line_no, "widths out of range");
            p.addr_width = static_cast<unsigned>(aw);
            p.data_width = static_cast<unsigned>(dw);
            sc.params = p;
            saw_params = true;
        } else if (kw == "clock") {
            if (toks.size() != 2) throw ScenarioParseError(line_no, "usage: clock <ns>");
            if (saw_clock) throw ScenarioParseError(line_no, "duplicate clock line");
            sc.clock_period = parse_ns(toks[1], line_no, "clock period");
            if (sc.clock_period < 2 || sc.clock_period % 2 != 0)
                throw ScenarioParseError(line_no, "clock period must be a positive even number of ns");
            saw_clock = true;
        } else if (kw.front() == '@') {
            if (toks.size() != 4 || toks[2] != "=") throw ScenarioParseError(line_no, "usage: @<ns> <PIN> = <value>");
            Event ev{parse_ns(std::string_view(kw).substr(1), line_no, "time"), std::string(canonical_pin(toks[1])),
                     toks[3]};
            events.push_back({std::move(ev), line_no});
        } else if (kw == "expect") {
            if (toks.size() == 5 && toks[1] == "pulses" && toks[3] == "in") {
                const std::string& win = toks[4];
                const auto dots = win.find("..");
                if (dots == std::string::npos) throw ScenarioParseError(line_no, "window must be <ns>..<ns>");
                Assertion a;
                a.kind = AssertionKind::pulses;
                a.pin = std::string(canonical_pin(toks[2]));
                a.time = parse_ns(std::string_view(win).substr(0, dots), line_no, "window start");
                a.end = parse_ns(std::string_view(win).substr(dots + 2), line_no, "window end");
                if (a.end < a.time) throw ScenarioParseError(line_no, "window end precedes start");
                asserts.push_back({std::move(a), line_no});
            } else if (toks.size() == 5 && toks[1].size() > 1 && toks[1][0] == '@' && toks[3] == "=") {
                Assertion a;
                a.kind = AssertionKind::value;
                a.time = parse_ns(std::string_view(toks[1]).substr(1), line_no, "time");
                a.pin = std::string(canonical_pin(toks[2]));
                a.expected = toks[4];
                asserts.push_back({std::move(a), line_no});
            } else {
                throw ScenarioParseError(line_no,
                                         "usage: expect @<ns> <PIN> = <value> | expect pulses <PIN> in <ns>..<ns>");
            }
        } else if (kw == "run") {
            if (toks.size() != 2) throw ScenarioParseError(line_no, "usage: run <ns>");
            if (run) throw ScenarioParseError(line_no, "duplicate run line");
            run = parse_ns(toks[1], line_no, "duration");
        } else {
            throw ScenarioParseError(line_no, "unknown directive '" + kw + "'");
        }
    }

    if (!run) throw ScenarioParseError(0, "missing 'run <ns>' line");
    sc.duration = *run;

    // Target inference from the input pins.
    bool uses_system = false, uses_ram = false;
    for (const auto& [ev, line] : events) {
        const PinSpec* p = find_input_pin(ev.pin);
        if (!p) throw ScenarioParseError(line, "unknown input pin '" + ev.pin + "'");
        uses_system |= p->system && !p->ram;
        uses_ram |= p->ram && !p->system;
        if (uses_system && uses_ram) throw ScenarioParseError(line, "scenario mixes client pins and bare RAM pins");
    }
    sc.target = uses_ram ? Target::ram : Target::system;

    std::uint64_t last = 0;
    for (auto& [ev, line] : events) {
        if (ev.time < last) throw ScenarioParseError(line, "event times must be nondecreasing");
        if (ev.time > sc.duration)
            throw ScenarioParseError(line, "event at " + std::to_string(ev.time) + " ns is after the run end");
        last = ev.time;
        check_literal(ev.value, width_bits(find_input_pin(ev.pin)->width, sc.params), line, ev.pin);
        sc.events.push_back(std::move(ev));
    }

    for (auto& [a, line] : asserts) {
        const auto w = observable_width(a.pin, sc.target);
        if (!w) throw ScenarioParseError(line, "unknown observable pin '" + a.pin + "'");
        const unsigned bits = width_bits(*w, sc.params);
        if (a.kind == AssertionKind::pulses) {
            if (bits != 1) throw ScenarioParseError(line, "pulse checks need a single-bit pin");
        } else if (a.expected == "high" || a.expected == "low") {
            if (bits != 1) throw ScenarioParseError(line, "high/low only applies to single-bit pins");
        } else {
            check_literal(a.expected, bits, line, a.pin);
        }
        sc.assertions.push_back(std::move(a));
    }
    return sc;
}

/// Canonical text form; parse_scenario(render_scenario(s)) == s.
inline std::string render_scenario(const Scenario& sc) {
    std::ostringstream os;
    if (!sc.name.empty()) os << "scenario " << sc.name << '\n';
    os << "params addr=" << sc.params.addr_width << " data=" << sc.params.data_width
       << " registered=" << (sc.params.registered_output ? 1 : 0) << '\n';
    os << "clock " << sc.clock_period << '\n';
    for (const auto& e : sc.events) os << '@' << e.time << ' ' << e.pin << " = " << e.value << '\n';
    for (const auto& a : sc.assertions) {
        if (a.kind == AssertionKind::pulses)
            os << "expect pulses " << a.pin << " in " << a.time << ".." << a.end << '\n';
        else
            os << "expect @" << a.time << ' ' << a.pin << " = " << a.expected << '\n';
    }
    os << "run " << sc.duration << '\n';
    return os.str();
}

/// Applies one event value to the input bundle of the matching target.
inline void apply_event(const Event& ev, const Params& p, ClientInputs& client, RamInputs& ram) {
    const PinSpec* spec = find_input_pin(ev.pin);
    if (!spec) throw std::invalid_argument("unknown input pin " + ev.pin);
    const Word w = parse_word(ev.value, width_bits(spec->width, p));
    const Level l = w.bit(0);
    const std::string_view n = ev.pin;
    if (n == "RST_N") client.rst_n = ram.rst_n = l;
    else if (n == "RD_EN_C1") client.rd_en_c1 = l;
    else if (n == "WR_EN_C1") client.wr_en_c1 = l;
    else if (n == "RDADDR_C1") client.rdaddr_c1 = w;
    else if (n == "WRADDR_C1") client.wraddr_c1 = w;
    else if (n == "WRDATA_C1") client.wrdata_c1 = w;
    else if (n == "REQUEST_C2") client.request_c2 = l;
    else if (n == "RD_NOT_WRITE_C2") client.rd_not_write_c2 = l;
    else if (n == "ADDR_C2") client.addr_c2 = w;
    else if (n == "DATAIN_C2") client.datain_c2 = w;
    else if (n == "RD_EN") ram.rd_en = l;
    else if (n == "WR_EN") ram.wr_en = l;
    else if (n == "RD_ADDR") ram.rd_addr = w;
    else if (n == "WR_ADDR") ram.wr_addr = w;
    else if (n == "WR_DATA") ram.wr_data = w;
}

}  // namespace ramarb
