#include <gtest/gtest.h>

#include "ramarb/fuzz.hpp"
#include "ramarb/system.hpp"

using namespace ramarb;

namespace {

ClientInputs running(const Params& p) {
    auto in = ClientInputs::zero(p);
    in.rst_n = Level::high;
    return in;
}

// One reset edge followed by edges until RST_DONE is high.
SystemState ready(const Params& p) {
    SystemState s = system_new(p);
    system_step_inplace(s, ClientInputs::zero(p));
    const auto in = running(p);
    while (!is_high(current_outputs(s).rst_done)) system_step_inplace(s, in);
    return s;
}

}  // namespace

TEST(Clock, EdgeTimes) {
    const ClockTiming c{50};
    EXPECT_EQ(c.edge_time(0), 25u);
    EXPECT_EQ(c.edge_time(18), 925u);
    EXPECT_EQ(c.first_edge_at_or_after(0), 0u);
    EXPECT_EQ(c.first_edge_at_or_after(25), 0u);
    EXPECT_EQ(c.first_edge_at_or_after(26), 1u);
    EXPECT_EQ(c.first_edge_at_or_after(100), 2u);
    EXPECT_EQ(c.first_edge_at_or_after(75), 1u);
    EXPECT_EQ(c.edges_for(4000), 80u);
    EXPECT_EQ(c.edges_for(4001), 81u);
    EXPECT_EQ(c.edges_for(0), 0u);
}

// RST_DONE rises on the (2^W + 1)-th edge that samples RST_N high: 2^W
// counting edges plus the edge that leaves reset. The RAM sweep finishes
// on the same edge.
TEST(System, ResetReleaseLatency) {
    for (unsigned w : {1u, 2u, 3u, 4u, 6u}) {
        const Params p{w, 8, false};
        SystemState s = system_new(p);
        system_step_inplace(s, ClientInputs::zero(p));
        const auto in = running(p);
        std::uint64_t high_edges = 0;
        do {
            system_step_inplace(s, in);
            ++high_edges;
        } while (!is_high(current_outputs(s).rst_done));
        EXPECT_EQ(high_edges, p.ram_depth() + 1) << "addr_width " << w;
        EXPECT_FALSE(s.ram.sweeping);
    }
}

// Client1 read issued on edge N: unregistered data is valid after edge N+1
// (drive register, then RAM register), registered data after edge N+2.
TEST(System, ReadLatency) {
    for (bool reg : {false, true}) {
        const Params p{4, 8, reg};
        SystemState s = ready(p);
        s.ram.memory[6] = Word(8, 0xC3);
        auto in = running(p);
        in.rd_en_c1 = Level::high;
        in.rdaddr_c1 = Word(4, 6);
        std::uint64_t edges = 0;
        do {
            system_step_inplace(s, in);
            ++edges;
        } while (current_outputs(s).rddata_c1.value() != 0xC3 && edges < 10);
        EXPECT_EQ(edges, reg ? 3u : 2u) << (reg ? "registered" : "unregistered");
    }
}

TEST(System, WriteByClient1ReadByClient2) {
    const Params p;
    SystemState s = ready(p);
    auto in = running(p);
    in.wr_en_c1 = Level::high;
    in.wraddr_c1 = Word(4, 12);
    in.wrdata_c1 = Word(8, 0x5E);
    system_step_inplace(s, in);
    system_step_inplace(s, in);
    in = running(p);
    in.request_c2 = in.rd_not_write_c2 = Level::high;
    in.addr_c2 = Word(4, 12);
    for (int i = 0; i < 3; ++i) system_step_inplace(s, in);
    EXPECT_EQ(current_outputs(s).dataout_c2.value(), 0x5Eu);
    EXPECT_EQ(s.ram.memory[12].value(), 0x5Eu);
}

TEST(System, WriteByClient2LandsInRam) {
    const Params p;
    SystemState s = ready(p);
    auto in = running(p);
    in.request_c2 = Level::high;
    in.addr_c2 = Word(4, 3);
    in.datain_c2 = Word(8, 0x81);
    system_step_inplace(s, in);
    EXPECT_TRUE(s.ram.memory[3].is_zero());  // drive registered, RAM not yet written
    system_step_inplace(s, in);
    EXPECT_EQ(s.ram.memory[3].value(), 0x81u);
}

// The two halves only exchange registered values, so updating the RAM
// before the arbiter gives the same state as the library's order.
TEST(System, UpdateOrderIsIrrelevant) {
    const Params p{3, 6, false};
    SystemState a = system_new(p), b = a;
    StimulusGenerator gen(99, p, true);
    for (int i = 0; i < 5000; ++i) {
        const ClientInputs& in = gen.next();
        system_step_inplace(a, in);

        const Word rd = b.ram.rd_data;
        const RamDrive drive = drive_of(b.arbiter);
        ram_step_inplace(b.ram, ram_inputs(in.rst_n, drive));
        arbiter_step_inplace(b.arbiter, in, rd, p);
        ++b.cycle;
        ASSERT_EQ(a, b) << "edge " << i;
    }
}

TEST(System, RegisteredOutputIsOneEdgeLater) {
    SystemState u = system_new(Params{4, 8, false});
    SystemState r = system_new(Params{4, 8, true});
    StimulusGenerator gen(5, u.params);
    Word prev = u.params.zero_data();
    for (int i = 0; i < 3000; ++i) {
        const ClientInputs& in = gen.next();
        const auto ou = system_step_inplace(u, in);
        const auto orr = system_step_inplace(r, in);
        ASSERT_EQ(orr.rddata_c1, prev) << "edge " << i;
        prev = ou.rddata_c1;
    }
}

TEST(System, PureStepMatchesInPlace) {
    const Params p;
    SystemState s = ready(p);
    auto in = running(p);
    in.wr_en_c1 = Level::high;
    const auto r = system_step(s, in);
    system_step_inplace(s, in);
    EXPECT_EQ(r.state, s);
    EXPECT_EQ(r.out, current_outputs(s));
}

TEST(System, RejectsMismatchedWidths) {
    auto in = running(Params{});
    in.wrdata_c1 = Word(9);
    EXPECT_THROW(system_step(system_new(Params{}), in), std::invalid_argument);
}

TEST(System, CycleCounter) {
    SystemState s = system_new(Params{});
    for (int i = 0; i < 7; ++i) system_step_inplace(s, running(Params{}));
    EXPECT_EQ(s.cycle, 7u);
}
