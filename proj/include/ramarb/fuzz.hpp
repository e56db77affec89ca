// Randomized stimulus and per-edge invariant checks for the arbiter system.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ramarb/system.hpp"

namespace ramarb {

/// Pseudo-random legal client stimulus. Only raw mt19937_64 output is used,
/// so a seed reproduces the same sequence on every platform.
class StimulusGenerator {
public:
    StimulusGenerator(std::uint64_t seed, const Params& params, bool reset_storm = false)
        : rng_(seed), params_(params), reset_storm_(reset_storm), in_(ClientInputs::zero(params)) {}

    /// Inputs for the next edge. rst_n is low for the first edge only,
    /// except in reset-storm mode where it drops at random for 1-4 edges.
    const ClientInputs& next() {
        if (edge_++ == 0) {
            in_.rst_n = Level::low;
            return in_;
        }
        in_.rst_n = Level::high;
        if (reset_storm_) {
            if (reset_left_ > 0) {
                --reset_left_;
                in_.rst_n = Level::low;
            } else if (draw(256) == 0) {
                reset_left_ = draw(4);
                in_.rst_n = Level::low;
            }
        }
        // Each pin keeps its value with probability 3/4 so grants last
        // long enough to exercise the ack cadence.
        if (draw(4) == 0) in_.rd_en_c1 = to_level(draw(2));
        if (draw(4) == 0) in_.wr_en_c1 = to_level(draw(2));
        if (draw(4) == 0) in_.rdaddr_c1 = addr();
        if (draw(4) == 0) in_.wraddr_c1 = addr();
        if (draw(4) == 0) in_.wrdata_c1 = data();
        if (draw(4) == 0) in_.request_c2 = to_level(draw(2));
        if (draw(4) == 0) in_.rd_not_write_c2 = to_level(draw(2));
        if (draw(4) == 0) in_.addr_c2 = addr();
        if (draw(4) == 0) in_.datain_c2 = data();
        return in_;
    }

private:
    std::uint64_t draw(std::uint64_t n) { return rng_() % n; }

    // Half of the addresses come from a three-word pool so that read/write
    // address clashes are frequent.
    Word addr() {
        const std::uint64_t v = draw(2) == 0 ? draw(3) : rng_();
        return Word(params_.addr_width, v);
    }
    Word data() { return Word(params_.data_width, rng_()); }

    std::mt19937_64 rng_;
    Params params_;
    bool reset_storm_;
    ClientInputs in_;
    std::uint64_t edge_ = 0;
    std::uint64_t reset_left_ = 0;
};

/// Invariants that must hold across one edge `pre --in--> post`. Returns a
/// description of every violated property.
inline std::vector<std::string> check_edge(const SystemState& pre, const ClientInputs& in, const SystemState& post,
                                           const ClientOutputs& out) {
    std::vector<std::string> v;
    const ArbiterState& a = post.arbiter;
    const ChannelState rd = a.pr_read, wr = a.pr_write;

    if (!valid_read_state(rd)) v.push_back("read channel holds a write state");
    if (!valid_write_state(wr)) v.push_back("write channel holds a read state");
    if ((rd == ChannelState::reset) != (wr == ChannelState::reset)) v.push_back("channels disagree on reset");
    if (rd == ChannelState::client2_read && wr == ChannelState::client2_write)
        v.push_back("client2 granted both channels");

    const bool was_running = pre.arbiter.pr_read != ChannelState::reset && is_high(in.rst_n);
    if (was_running) {
        if (is_high(in.rd_en_c1) && rd != ChannelState::client1_read) v.push_back("client1 read not preempting");
        if (is_high(in.wr_en_c1) && wr != ChannelState::client1_write) v.push_back("client1 write not preempting");
    }

    // Client2 only gets a channel client1 leaves free, in the direction it
    // selected.
    if (rd == ChannelState::client2_read &&
        (is_high(in.rd_en_c1) || !is_high(in.request_c2) || !is_high(in.rd_not_write_c2)))
        v.push_back("client2 read granted against access rules");
    if (wr == ChannelState::client2_write &&
        (is_high(in.wr_en_c1) || !is_high(in.request_c2) || is_high(in.rd_not_write_c2)))
        v.push_back("client2 write granted against access rules");

    const Level clash = detect_clash(a.temp_rd_en, a.temp_wr_en, a.temp_rd_addr, a.temp_wr_addr);
    if (clash != a.addr_clash) v.push_back("clash flag does not match drive registers");
    if (is_high(a.addr_clash)) {
        if (a.temp_rd_data != a.temp_wr_data) v.push_back("bypass register differs from write data");
        if (out.dataout_c2 != a.temp_wr_data) v.push_back("client2 sees stale data during clash");
        if (!post.params.registered_output && out.rddata_c1 != a.temp_wr_data)
            v.push_back("client1 sees stale data during clash");
    }

    if (rd == ChannelState::reset && (is_high(a.temp_rd_en) || is_high(a.temp_wr_en)))
        v.push_back("RAM enabled during reset");
    if (rd == ChannelState::client1_read && (!is_high(a.temp_rd_en) || a.temp_rd_addr != in.rdaddr_c1))
        v.push_back("client1 read grant not driven to RAM");
    if (wr == ChannelState::client1_write &&
        (!is_high(a.temp_wr_en) || a.temp_wr_addr != in.wraddr_c1 || a.temp_wr_data != in.wrdata_c1))
        v.push_back("client1 write grant not driven to RAM");
    return v;
}

struct FuzzConfig {
    std::uint64_t seed = 1;
    std::uint64_t cycles = 10000;
    Params params;
    bool reset_storm = false;
};

struct FuzzViolation {
    /// Number of edges (from power-on) needed to reproduce the violation.
    std::uint64_t prefix_length = 0;
    std::vector<std::string> what;
};

struct FuzzResult {
    std::uint64_t cycles_run = 0;
    std::optional<FuzzViolation> violation;
    std::uint64_t client1_read_grants = 0;
    std::uint64_t client2_read_grants = 0;
    std::uint64_t client1_write_grants = 0;
    std::uint64_t client2_write_grants = 0;
    std::uint64_t clash_cycles = 0;
    std::uint64_t ack_cycles = 0;
};

/// Drives `cycles` random edges and stops at the first violated invariant.
/// The first violation found is also the shortest reproducing prefix, since
/// the run is deterministic from the seed.
inline FuzzResult run_fuzz(const FuzzConfig& cfg) {
    SystemState s = system_new(cfg.params);
    StimulusGenerator gen(cfg.seed, cfg.params, cfg.reset_storm);
    FuzzResult res;
    for (std::uint64_t k = 0; k < cfg.cycles; ++k) {
        const ClientInputs& in = gen.next();
        const SystemState pre = s;
        const ClientOutputs out = system_step_inplace(s, in);
        ++res.cycles_run;
        auto bad = check_edge(pre, in, s, out);
        if (!bad.empty()) {
            res.violation = FuzzViolation{k + 1, std::move(bad)};
            return res;
        }
        const ArbiterState& a = s.arbiter;
        res.client1_read_grants += a.pr_read == ChannelState::client1_read;
        res.client2_read_grants += a.pr_read == ChannelState::client2_read;
        res.client1_write_grants += a.pr_write == ChannelState::client1_write;
        res.client2_write_grants += a.pr_write == ChannelState::client2_write;
        res.clash_cycles += is_high(a.addr_clash);
        res.ack_cycles += is_high(out.ack_c2);
    }
    return res;
}

}  // namespace ramarb
