// The arbiter and the RAM wired together and clocked on a common edge.

#pragma once

#include <cstdint>

#include "ramarb/arbiter.hpp"
#include "ramarb/ram.hpp"

namespace ramarb {

struct SystemState {
    Params params;
    ArbiterState arbiter;
    RamState ram;
    /// Rising edges applied since construction.
    std::uint64_t cycle = 0;

    friend bool operator==(const SystemState&, const SystemState&) = default;
};

inline SystemState system_new(const Params& params) {
    params.validate();
    return {params, arbiter_reset(params), ram_reset(params), 0};
}

inline ClientOutputs current_outputs(const SystemState& s) {
    return resolve_outputs(s.arbiter, s.ram.rd_data, s.params);
}

inline RamInputs ram_inputs(Level rst_n, const RamDrive& d) {
    return {rst_n, d.rd_en, d.wr_en, d.rd_addr, d.wr_addr, d.wr_data};
}

/// Advances the whole design by one rising edge.
///
/// Both halves sample the other's registers as they stood before the edge:
/// the arbiter sees the RAM's registered read data, and the RAM is driven by
/// the arbiter's drive registers from the previous edge. Neither path is
/// combinational, so the order of the two updates does not matter.
inline ClientOutputs system_step_inplace(SystemState& s, const ClientInputs& in) {
    const Word ram_rd = s.ram.rd_data;
    const RamDrive drive = drive_of(s.arbiter);
    arbiter_step_inplace(s.arbiter, in, ram_rd, s.params);
    ram_step_inplace(s.ram, ram_inputs(in.rst_n, drive));
    ++s.cycle;
    return current_outputs(s);
}

struct SystemStepResult {
    SystemState state;
    ClientOutputs out;
};

inline SystemStepResult system_step(SystemState state, const ClientInputs& in) {
    check_widths(state.params, in);
    ClientOutputs out = system_step_inplace(state, in);
    return {std::move(state), std::move(out)};
}

/// Clock timing shared by scenarios and traces. The clock starts low, so
/// rising edge k happens at k * period + period / 2.
struct ClockTiming {
    std::uint64_t period_ns = 100;

    std::uint64_t edge_time(std::uint64_t edge) const noexcept { return edge * period_ns + period_ns / 2; }

    /// Index of the first rising edge at or after `t`.
    std::uint64_t first_edge_at_or_after(std::uint64_t t) const noexcept {
        const std::uint64_t half = period_ns / 2;
        if (t <= half) return 0;
        return (t - half + period_ns - 1) / period_ns;
    }

    /// Number of rising edges simulated for a run of `duration` ns.
    std::uint64_t edges_for(std::uint64_t duration) const noexcept {
        return (duration + period_ns - 1) / period_ns;
    }
};

}  // namespace ramarb
