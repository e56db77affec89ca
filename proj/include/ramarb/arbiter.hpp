// Dual-channel fixed-priority arbiter.
//
// The read channel and the write channel each run their own grant state.
// Client1 (separate read/write enables) always wins the channel it asks
// for; client2 (one request pin plus a read-not-write selector) is admitted
// to a channel only when client1 leaves it free. All RAM traffic goes through
// temp registers, which also provide the address-clash bypass: when the
// granted read and write hit the same address, the in-flight write data is
// forwarded to the reader instead of the stale RAM word.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "ramarb/signal.hpp"

namespace ramarb {

enum class ChannelState : std::uint8_t {
    reset = 0,
    idle = 1,
    client1_read = 2,
    client2_read = 3,
    client1_write = 4,
    client2_write = 5,
};

constexpr std::string_view to_string(ChannelState s) noexcept {
    switch (s) {
        case ChannelState::reset: return "reset";
        case ChannelState::idle: return "idle";
        case ChannelState::client1_read: return "client1_read";
        case ChannelState::client2_read: return "client2_read";
        case ChannelState::client1_write: return "client1_write";
        case ChannelState::client2_write: return "client2_write";
    }
    return "?";
}

constexpr bool valid_read_state(ChannelState s) noexcept {
    return s == ChannelState::reset || s == ChannelState::idle || s == ChannelState::client1_read ||
           s == ChannelState::client2_read;
}

constexpr bool valid_write_state(ChannelState s) noexcept {
    return s == ChannelState::reset || s == ChannelState::idle || s == ChannelState::client1_write ||
           s == ChannelState::client2_write;
}

/// Top-level input pins, sampled at a rising edge.
struct ClientInputs {
    Level rst_n = Level::low;
    Level rd_en_c1 = Level::low;
    Level wr_en_c1 = Level::low;
    Word rdaddr_c1;
    Word wraddr_c1;
    Word wrdata_c1;
    Level request_c2 = Level::low;
    Level rd_not_write_c2 = Level::low;
    Word addr_c2;
    Word datain_c2;

    /// All pins low, buses zero. This is the testbench power-on value.
    static ClientInputs zero(const Params& p) {
        ClientInputs in;
        in.rdaddr_c1 = in.wraddr_c1 = in.addr_c2 = p.zero_addr();
        in.wrdata_c1 = in.datain_c2 = p.zero_data();
        return in;
    }

    friend bool operator==(const ClientInputs&, const ClientInputs&) = default;
};

inline void check_widths(const Params& p, const ClientInputs& in) {
    if (in.rdaddr_c1.width() != p.addr_width || in.wraddr_c1.width() != p.addr_width ||
        in.addr_c2.width() != p.addr_width || in.wrdata_c1.width() != p.data_width ||
        in.datain_c2.width() != p.data_width)
        throw std::invalid_argument("client input widths do not match params");
}

/// Register bundle presented to the RAM.
struct RamDrive {
    Level rd_en = Level::low;
    Level wr_en = Level::low;
    Word rd_addr;
    Word wr_addr;
    Word wr_data;

    friend bool operator==(const RamDrive&, const RamDrive&) = default;
};

struct ClientOutputs {
    Word rddata_c1;
    Word dataout_c2;
    Level ack_c2 = Level::low;
    Level rst_done = Level::low;

    friend bool operator==(const ClientOutputs&, const ClientOutputs&) = default;
};

struct ArbiterState {
    ChannelState pr_read = ChannelState::reset;
    ChannelState pr_write = ChannelState::reset;

    Level temp_rd_en = Level::low;
    Level temp_wr_en = Level::low;
    Word temp_rd_addr;
    Word temp_wr_addr;
    Word temp_wr_data;

    Word temp_rd_data;   // clash bypass capture
    Word temp_rd_data1;  // temp_rd_data delayed one edge
    Word temp_rd_data2;  // RAM read data delayed one edge

    Level temp_ack = Level::low;
    Level temp_ack1 = Level::low;
    Level temp_wr = Level::low;

    Level addr_clash = Level::low;
    Level addr_clash_d = Level::low;

    std::uint64_t reset_count = 0;
    Level reset_done = Level::low;

    friend bool operator==(const ArbiterState&, const ArbiterState&) = default;
};

/// Power-on state: both channels in reset, every register zero.
inline ArbiterState arbiter_reset(const Params& p) {
    ArbiterState s;
    s.temp_rd_addr = s.temp_wr_addr = p.zero_addr();
    s.temp_wr_data = s.temp_rd_data = s.temp_rd_data1 = s.temp_rd_data2 = p.zero_data();
    return s;
}

inline RamDrive drive_of(const ArbiterState& s) {
    return {s.temp_rd_en, s.temp_wr_en, s.temp_rd_addr, s.temp_wr_addr, s.temp_wr_data};
}

struct FsmNext {
    ChannelState read;
    ChannelState write;
    std::uint64_t reset_count;
    Level reset_done;

    friend bool operator==(const FsmNext&, const FsmNext&) = default;
};

namespace detail {

inline ChannelState next_read(const ClientInputs& in) {
    if (is_high(in.rd_en_c1)) return ChannelState::client1_read;
    if (is_high(in.request_c2) && is_high(in.rd_not_write_c2)) return ChannelState::client2_read;
    return ChannelState::idle;
}

inline ChannelState next_write(const ClientInputs& in) {
    if (is_high(in.wr_en_c1)) return ChannelState::client1_write;
    if (is_high(in.request_c2) && !is_high(in.rd_not_write_c2)) return ChannelState::client2_write;
    return ChannelState::idle;
}

}  // namespace detail

/// Grant transition relation for both channels.
///
/// From any non-reset state a channel goes to client1 if client1 enables it,
/// else to client2 if client2 requests that direction, else to idle. This
/// covers every idle/client1/client2 transition of the arbiter's state
/// diagram; the previous grant never affects the next one.
///
/// rst_n low forces both channels to reset and clears the counter. In reset
/// with rst_n high the counter runs for ram_depth edges, and the following
/// edge moves both channels to idle and raises reset_done. Inputs are
/// ignored while in reset.
inline FsmNext fsm_next(ChannelState pr_read, ChannelState pr_write, const ClientInputs& in,
                        std::uint64_t reset_count, const Params& p) {
    if (!valid_read_state(pr_read) || !valid_write_state(pr_write))
        throw std::invalid_argument("channel state polarity violated");
    if (!is_high(in.rst_n)) return {ChannelState::reset, ChannelState::reset, 0, Level::low};
    if (pr_read == ChannelState::reset || pr_write == ChannelState::reset) {
        if (reset_count < p.ram_depth())
            return {ChannelState::reset, ChannelState::reset, reset_count + 1, Level::low};
        return {ChannelState::idle, ChannelState::idle, 0, Level::high};
    }
    return {detail::next_read(in), detail::next_write(in), 0, Level::high};
}

inline Level detect_clash(Level rd_en, Level wr_en, const Word& rd_addr, const Word& wr_addr) {
    if (rd_addr.width() != wr_addr.width()) throw std::invalid_argument("address widths differ");
    return to_level(is_high(rd_en) && is_high(wr_en) && rd_addr == wr_addr);
}

struct ArbiterStepResult {
    ArbiterState state;
    RamDrive drive;
};

/// One rising edge of the arbiter, in place. `ram_rd_data` is the RAM's
/// registered read data as seen before the edge.
inline void arbiter_step_inplace(ArbiterState& s, const ClientInputs& in, const Word& ram_rd_data,
                                 const Params& p) {
    if (!is_high(in.rst_n)) {
        s = arbiter_reset(p);
        return;
    }
    const ArbiterState pre = s;
    const FsmNext nx = fsm_next(pre.pr_read, pre.pr_write, in, pre.reset_count, p);
    s.pr_read = nx.read;
    s.pr_write = nx.write;
    s.reset_count = nx.reset_count;
    s.reset_done = nx.reset_done;

    switch (nx.read) {
        case ChannelState::client1_read:
            s.temp_rd_en = in.rd_en_c1;
            s.temp_rd_addr = in.rdaddr_c1;
            break;
        case ChannelState::client2_read:
            if (!is_high(pre.temp_ack)) {
                s.temp_rd_en = Level::high;
                s.temp_rd_addr = in.addr_c2;
                s.temp_ack = Level::high;
            }
            break;
        default:
            s.temp_rd_en = Level::low;
            s.temp_rd_addr = p.zero_addr();
            break;
    }

    switch (nx.write) {
        case ChannelState::client1_write:
            s.temp_wr_en = in.wr_en_c1;
            s.temp_wr_addr = in.wraddr_c1;
            s.temp_wr_data = in.wrdata_c1;
            break;
        case ChannelState::client2_write:
            if (!is_high(pre.temp_wr)) {
                s.temp_wr_en = Level::high;
                s.temp_wr_addr = in.addr_c2;
                s.temp_wr_data = in.datain_c2;
                s.temp_wr = Level::high;
            }
            break;
        default:
            s.temp_wr_en = Level::low;
            s.temp_wr_addr = p.zero_addr();
            s.temp_wr_data = p.zero_data();
            break;
    }

    // Clash is judged on the registers just loaded, so the bypass word is
    // valid in the same cycle the RAM is first driven.
    s.addr_clash = detect_clash(s.temp_rd_en, s.temp_wr_en, s.temp_rd_addr, s.temp_wr_addr);
    if (is_high(s.addr_clash)) s.temp_rd_data = s.temp_wr_data;

    // Write ack: one-cycle pulse, re-armed every other edge.
    if (is_high(pre.temp_wr)) s.temp_wr = Level::low;
    // Read ack: temp_ack -> temp_ack1 -> both cleared, a three-edge cycle.
    s.temp_ack1 = pre.temp_ack;
    if (is_high(pre.temp_ack1)) {
        s.temp_ack1 = Level::low;
        s.temp_ack = Level::low;
    }

    s.addr_clash_d = pre.addr_clash;
    s.temp_rd_data1 = pre.temp_rd_data;
    s.temp_rd_data2 = ram_rd_data;
}

inline ArbiterStepResult arbiter_step(ArbiterState state, const ClientInputs& in, const Word& ram_rd_data,
                                      const Params& p) {
    check_widths(p, in);
    if (ram_rd_data.width() != p.data_width) throw std::invalid_argument("RAM read data width mismatch");
    arbiter_step_inplace(state, in, ram_rd_data, p);
    RamDrive d = drive_of(state);
    return {std::move(state), std::move(d)};
}

/// Combinational output mux.
inline ClientOutputs resolve_outputs(const ArbiterState& s, const Word& ram_rd_data, const Params& p) {
    ClientOutputs out;
    out.ack_c2 = to_level(is_high(s.temp_ack1) || is_high(s.temp_wr));
    out.dataout_c2 = is_high(s.addr_clash) ? s.temp_rd_data : ram_rd_data;
    if (p.registered_output)
        out.rddata_c1 = is_high(s.addr_clash_d) ? s.temp_rd_data1 : s.temp_rd_data2;
    else
        out.rddata_c1 = is_high(s.addr_clash) ? s.temp_rd_data : ram_rd_data;
    out.rst_done = s.reset_done;
    return out;
}

}  // namespace ramarb
