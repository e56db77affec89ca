// Clocked behavioral model of the synchronous RAM: independent read and
// write ports, registered read data and a post-reset zeroing sweep.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ramarb/signal.hpp"

namespace ramarb {

struct RamInputs {
    Level rst_n = Level::low;
    Level rd_en = Level::low;
    Level wr_en = Level::low;
    Word rd_addr;
    Word wr_addr;
    Word wr_data;
};

struct RamState {
    Params params;
    std::vector<Word> memory;
    /// Next word to zero during the sweep, in [0, ram_depth].
    std::uint64_t count = 0;
    /// True while a zeroing sweep is pending or in progress. Client accesses
    /// are ignored while set.
    bool sweeping = false;
    Word rd_data;

    friend bool operator==(const RamState&, const RamState&) = default;
};

/// Power-on state: zeroed memory, no sweep pending.
inline RamState ram_reset(const Params& params) {
    params.validate();
    RamState s;
    s.params = params;
    s.memory.assign(params.ram_depth(), params.zero_data());
    s.rd_data = params.zero_data();
    return s;
}

inline void check_widths(const Params& p, const RamInputs& in) {
    if (in.rd_addr.width() != p.addr_width || in.wr_addr.width() != p.addr_width ||
        in.wr_data.width() != p.data_width)
        throw std::invalid_argument("RAM input widths do not match params");
}

/// Applies one rising clock edge in place.
///
/// A low rst_n arms the sweep and blocks all access for that edge. While the
/// sweep is armed each edge zeroes one word; the edge after the last word
/// disarms it. Otherwise the write port and read port operate independently;
/// a read of the address being written in the same edge returns the word
/// held before the edge.
inline void ram_step_inplace(RamState& s, const RamInputs& in) {
    if (!is_high(in.rst_n)) {
        s.sweeping = true;
        s.count = 0;
        return;
    }
    if (s.sweeping) {
        if (s.count < s.params.ram_depth()) {
            s.memory[s.count] = s.params.zero_data();
            ++s.count;
        } else {
            s.count = 0;
            s.sweeping = false;
        }
        return;
    }
    const Word old = is_high(in.rd_en) ? s.memory[word_to_index(in.rd_addr)] : s.rd_data;
    if (is_high(in.wr_en)) s.memory[word_to_index(in.wr_addr)] = in.wr_data;
    s.rd_data = old;
}

struct RamStepResult {
    RamState state;
    Word rd_data;
};

inline RamStepResult ram_step(RamState state, const RamInputs& in) {
    check_widths(state.params, in);
    ram_step_inplace(state, in);
    Word rd = state.rd_data;
    return {std::move(state), rd};
}

}  // namespace ramarb
