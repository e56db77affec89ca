// Per-cycle recording of a scenario run, assertion checking and tabular
// export.

#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "ramarb/arbiter.hpp"
#include "ramarb/ram.hpp"
#include "ramarb/scenario.hpp"
#include "ramarb/system.hpp"

namespace ramarb {

/// Everything visible at one rising edge: the inputs sampled by the edge
/// and the register/output values right after it.
struct TraceRow {
    std::uint64_t cycle = 0;
    std::uint64_t time = 0;
    ClientInputs inputs;
    ClientOutputs outputs;
    /// Arbiter drive registers, or the RAM port inputs for a bare-RAM run.
    RamDrive drive;
    Word ram_rd_data;
    ChannelState read_state = ChannelState::reset;
    ChannelState write_state = ChannelState::reset;
    Level addr_clash = Level::low;
    Level ram_sweep = Level::low;

    friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct Trace {
    Params params;
    std::uint64_t clock_period = 100;
    Target target = Target::system;
    /// Values before the first edge (power-on state with idle inputs).
    TraceRow initial;
    std::vector<TraceRow> rows;
};

inline std::string bit_string(Level l) { return std::string(1, level_char(l)); }

inline std::string state_bits(ChannelState s) {
    return Word(state_bus_width, static_cast<std::uint64_t>(s)).to_string();
}

struct SignalDef {
    std::string name;
    unsigned width;
    std::function<std::string(const TraceRow&)> value;
};

/// Recorded signals of a target, in trace/VCD/table column order.
inline std::vector<SignalDef> trace_signals(Target target, const Params& p) {
    using R = const TraceRow&;
    std::vector<SignalDef> s;
    const unsigned aw = p.addr_width, dw = p.data_width;
    s.push_back({"RST_N", 1, [](R r) { return bit_string(r.inputs.rst_n); }});
    if (target == Target::system) {
        s.push_back({"RD_EN_C1", 1, [](R r) { return bit_string(r.inputs.rd_en_c1); }});
        s.push_back({"WR_EN_C1", 1, [](R r) { return bit_string(r.inputs.wr_en_c1); }});
        s.push_back({"RDADDR_C1", aw, [](R r) { return r.inputs.rdaddr_c1.to_string(); }});
        s.push_back({"WRADDR_C1", aw, [](R r) { return r.inputs.wraddr_c1.to_string(); }});
        s.push_back({"WRDATA_C1", dw, [](R r) { return r.inputs.wrdata_c1.to_string(); }});
        s.push_back({"REQUEST_C2", 1, [](R r) { return bit_string(r.inputs.request_c2); }});
        s.push_back({"RD_NOT_WRITE_C2", 1, [](R r) { return bit_string(r.inputs.rd_not_write_c2); }});
        s.push_back({"ADDR_C2", aw, [](R r) { return r.inputs.addr_c2.to_string(); }});
        s.push_back({"DATAIN_C2", dw, [](R r) { return r.inputs.datain_c2.to_string(); }});
        s.push_back({"RDDATA_C1", dw, [](R r) { return r.outputs.rddata_c1.to_string(); }});
        s.push_back({"DATAOUT_C2", dw, [](R r) { return r.outputs.dataout_c2.to_string(); }});
        s.push_back({"ACK_C2", 1, [](R r) { return bit_string(r.outputs.ack_c2); }});
        s.push_back({"RST_DONE", 1, [](R r) { return bit_string(r.outputs.rst_done); }});
    }
    s.push_back({"RD_EN", 1, [](R r) { return bit_string(r.drive.rd_en); }});
    s.push_back({"WR_EN", 1, [](R r) { return bit_string(r.drive.wr_en); }});
    s.push_back({"RD_ADDR", aw, [](R r) { return r.drive.rd_addr.to_string(); }});
    s.push_back({"WR_ADDR", aw, [](R r) { return r.drive.wr_addr.to_string(); }});
    s.push_back({"WR_DATA", dw, [](R r) { return r.drive.wr_data.to_string(); }});
    s.push_back({"RD_DATA", dw, [](R r) { return r.ram_rd_data.to_string(); }});
    if (target == Target::system) {
        s.push_back({"READ_STATE", state_bus_width, [](R r) { return state_bits(r.read_state); }});
        s.push_back({"WRITE_STATE", state_bus_width, [](R r) { return state_bits(r.write_state); }});
        s.push_back({"ADDR_CLASH", 1, [](R r) { return bit_string(r.addr_clash); }});
    }
    s.push_back({"RAM_SWEEP", 1, [](R r) { return bit_string(r.ram_sweep); }});
    return s;
}

namespace detail {

inline TraceRow system_row(const SystemState& s, const ClientInputs& in, std::uint64_t time) {
    TraceRow r;
    r.cycle = s.cycle;
    r.time = time;
    r.inputs = in;
    r.outputs = current_outputs(s);
    r.drive = drive_of(s.arbiter);
    r.ram_rd_data = s.ram.rd_data;
    r.read_state = s.arbiter.pr_read;
    r.write_state = s.arbiter.pr_write;
    r.addr_clash = s.arbiter.addr_clash;
    r.ram_sweep = to_level(s.ram.sweeping);
    return r;
}

inline TraceRow ram_row(const RamState& s, const RamInputs& in, std::uint64_t cycle, std::uint64_t time) {
    TraceRow r;
    r.cycle = cycle;
    r.time = time;
    r.inputs = ClientInputs::zero(s.params);
    r.inputs.rst_n = in.rst_n;
    r.outputs = ClientOutputs{s.params.zero_data(), s.params.zero_data(), Level::low, Level::low};
    r.drive = RamDrive{in.rd_en, in.wr_en, in.rd_addr, in.wr_addr, in.wr_data};
    r.ram_rd_data = s.rd_data;
    r.ram_sweep = to_level(s.sweeping);
    return r;
}

}  // namespace detail

/// Replays the scenario's events on a fresh design and records one row per
/// rising edge. An event at time t is first seen by the edge at or after t.
inline Trace run_scenario(const Scenario& sc) {
    sc.params.validate();
    const ClockTiming clk{sc.clock_period};
    Trace t;
    t.params = sc.params;
    t.clock_period = sc.clock_period;
    t.target = sc.target;

    ClientInputs client = ClientInputs::zero(sc.params);
    RamInputs ram_in{Level::low, Level::low, Level::low, sc.params.zero_addr(), sc.params.zero_addr(),
                     sc.params.zero_data()};
    SystemState sys = system_new(sc.params);
    RamState ram = ram_reset(sc.params);

    t.initial = sc.target == Target::system ? detail::system_row(sys, client, 0) : detail::ram_row(ram, ram_in, 0, 0);

    const std::uint64_t edges = clk.edges_for(sc.duration);
    t.rows.reserve(edges);
    std::size_t next = 0;
    for (std::uint64_t k = 0; k < edges; ++k) {
        while (next < sc.events.size() && clk.first_edge_at_or_after(sc.events[next].time) <= k)
            apply_event(sc.events[next++], sc.params, client, ram_in);
        if (sc.target == Target::system) {
            system_step_inplace(sys, client);
            auto row = detail::system_row(sys, client, clk.edge_time(k));
            row.cycle = k;
            t.rows.push_back(std::move(row));
        } else {
            ram_step_inplace(ram, ram_in);
            t.rows.push_back(detail::ram_row(ram, ram_in, k, clk.edge_time(k)));
        }
    }
    return t;
}

struct AssertionResult {
    Assertion assertion;
    std::string observed;
    bool passed = false;
    std::string reason;
};

struct AssertionReport {
    std::vector<AssertionResult> results;
    bool passed = true;
};

/// Values of one named signal, one per row.
inline std::vector<std::string> signal_timeline(const Trace& t, std::string_view name) {
    for (const auto& def : trace_signals(t.target, t.params)) {
        if (def.name != name) continue;
        std::vector<std::string> v;
        v.reserve(t.rows.size());
        for (const auto& r : t.rows) v.push_back(def.value(r));
        return v;
    }
    throw std::invalid_argument("signal not recorded: " + std::string(name));
}

inline AssertionReport check_assertions(const Trace& t, const Scenario& sc) {
    const ClockTiming clk{t.clock_period};
    AssertionReport rep;
    for (const auto& a : sc.assertions) {
        AssertionResult res{a, "", false, ""};
        const auto tl = signal_timeline(t, a.pin);
        if (a.kind == AssertionKind::value) {
            const auto k = clk.first_edge_at_or_after(a.time);
            if (k >= tl.size()) {
                res.reason = "out of range";
            } else {
                res.observed = tl[k];
                res.passed = res.observed == a.expected_bits();
                if (!res.passed) res.reason = "expected " + a.expected_bits();
            }
        } else {
            const auto first = clk.first_edge_at_or_after(a.time);
            // Last edge at or before the window end.
            const auto last_excl = clk.first_edge_at_or_after(a.end + 1);
            if (last_excl > tl.size()) {
                res.reason = "out of range";
            } else {
                std::size_t rises = 0;
                for (auto k = first; k < last_excl; ++k) {
                    const std::string& prev = k == 0 ? std::string("0") : tl[k - 1];
                    if (tl[k] == "1" && prev == "0") ++rises;
                }
                res.observed = std::to_string(rises) + " rising";
                res.passed = rises > 0;
                if (!res.passed) res.reason = "no pulse in window";
            }
        }
        rep.passed = rep.passed && res.passed;
        rep.results.push_back(std::move(res));
    }
    return rep;
}

/// Tab-separated table: header of signal names, then one row per cycle.
inline void write_table(const Trace& t, std::ostream& os) {
    const auto sigs = trace_signals(t.target, t.params);
    os << "cycle\ttime";
    for (const auto& s : sigs) os << '\t' << s.name;
    os << '\n';
    for (const auto& r : t.rows) {
        os << r.cycle << '\t' << r.time;
        for (const auto& s : sigs) os << '\t' << s.value(r);
        os << '\n';
    }
}

}  // namespace ramarb
