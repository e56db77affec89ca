#include <gtest/gtest.h>

#include <random>

#include "ramarb/ram.hpp"
#include "support/ram_oracle.hpp"

using namespace ramarb;

namespace {

RamInputs idle(const Params& p, Level rst_n = Level::high) {
    return {rst_n, Level::low, Level::low, p.zero_addr(), p.zero_addr(), p.zero_data()};
}

RamInputs write(const Params& p, std::uint64_t addr, std::uint64_t data) {
    auto in = idle(p);
    in.wr_en = Level::high;
    in.wr_addr = Word(p.addr_width, addr);
    in.wr_data = Word(p.data_width, data);
    return in;
}

RamInputs read(const Params& p, std::uint64_t addr) {
    auto in = idle(p);
    in.rd_en = Level::high;
    in.rd_addr = Word(p.addr_width, addr);
    return in;
}

// Power-on, one reset edge, then enough edges to finish the sweep.
RamState swept(const Params& p) {
    RamState s = ram_reset(p);
    ram_step_inplace(s, idle(p, Level::low));
    for (std::uint64_t i = 0; i <= p.ram_depth(); ++i) ram_step_inplace(s, idle(p));
    return s;
}

}  // namespace

// Hand trace for a 4-word RAM: the reset edge arms the sweep, edges 1-4 zero
// words 0-3 in order, edge 5 disarms it, edge 6 is the first one that
// accepts an access.
TEST(Ram, SweepHandTraceTwoBitAddress) {
    const Params p{2, 8, false};
    RamState s = ram_reset(p);
    for (std::uint64_t a = 0; a < 4; ++a) s.memory[a] = Word(8, 0xA0 + a);

    ram_step_inplace(s, idle(p, Level::low));
    EXPECT_TRUE(s.sweeping);
    EXPECT_EQ(s.count, 0u);
    for (std::uint64_t e = 1; e <= 4; ++e) {
        ram_step_inplace(s, write(p, 3, 0xFF));  // ignored during the sweep
        EXPECT_TRUE(s.sweeping) << "edge " << e;
        for (std::uint64_t a = 0; a < 4; ++a)
            EXPECT_EQ(s.memory[a].value(), a < e ? 0u : 0xA0 + a) << "edge " << e << " word " << a;
    }
    ram_step_inplace(s, write(p, 3, 0xFF));
    EXPECT_FALSE(s.sweeping);
    EXPECT_TRUE(s.memory[3].is_zero());
    ram_step_inplace(s, write(p, 3, 0xFF));
    EXPECT_EQ(s.memory[3].value(), 0xFFu);
}

TEST(Ram, PowerOnIsNotSweeping) {
    const RamState s = ram_reset(Params{});
    EXPECT_FALSE(s.sweeping);
    EXPECT_EQ(s.memory.size(), 16u);
}

TEST(Ram, WriteThenReadBack) {
    const Params p;
    RamState s = swept(p);
    ram_step_inplace(s, write(p, 0b1101, 0b11100111));
    ram_step_inplace(s, read(p, 0b1101));
    EXPECT_EQ(s.rd_data.to_string(), "11100111");
}

TEST(Ram, SameEdgeReadReturnsOldWord) {
    const Params p;
    RamState s = swept(p);
    ram_step_inplace(s, write(p, 5, 0x11));
    auto in = write(p, 5, 0x22);
    in.rd_en = Level::high;
    in.rd_addr = Word(4, 5);
    ram_step_inplace(s, in);
    EXPECT_EQ(s.rd_data.value(), 0x11u);
    ram_step_inplace(s, read(p, 5));
    EXPECT_EQ(s.rd_data.value(), 0x22u);
}

TEST(Ram, ReadDataHoldsWithoutReadEnable) {
    const Params p;
    RamState s = swept(p);
    ram_step_inplace(s, write(p, 1, 0x5A));
    ram_step_inplace(s, read(p, 1));
    ram_step_inplace(s, write(p, 1, 0x00));
    ram_step_inplace(s, idle(p));
    EXPECT_EQ(s.rd_data.value(), 0x5Au);
}

TEST(Ram, ResetDuringSweepRestartsIt) {
    const Params p{3, 8, false};
    RamState s = ram_reset(p);
    for (auto& w : s.memory) w = Word(8, 0xFF);
    ram_step_inplace(s, idle(p, Level::low));
    for (int i = 0; i < 5; ++i) ram_step_inplace(s, idle(p));
    // Words 0-4 are clear; dirty word 2 again, then reset mid-sweep.
    s.memory[2] = Word(8, 0x77);
    ram_step_inplace(s, idle(p, Level::low));
    EXPECT_EQ(s.count, 0u);
    for (std::uint64_t i = 0; i <= p.ram_depth(); ++i) ram_step_inplace(s, idle(p));
    EXPECT_FALSE(s.sweeping);
    for (const auto& w : s.memory) EXPECT_TRUE(w.is_zero());
}

TEST(Ram, FullWidthAddressesAndData) {
    const Params p{10, 64, false};
    RamState s = swept(p);
    ram_step_inplace(s, write(p, 1023, ~0ull));
    ram_step_inplace(s, read(p, 1023));
    EXPECT_EQ(s.rd_data.value(), ~0ull);
}

TEST(Ram, RejectsMismatchedWidths) {
    const Params p;
    auto in = idle(p);
    in.wr_data = Word(7);
    EXPECT_THROW(ram_step(ram_reset(p), in), std::invalid_argument);
}

TEST(Ram, PureStepMatchesInPlace) {
    const Params p;
    const RamState s = swept(p);
    RamState t = s;
    ram_step_inplace(t, write(p, 2, 9));
    const auto r = ram_step(s, write(p, 2, 9));
    EXPECT_EQ(r.state, t);
    EXPECT_EQ(r.rd_data, t.rd_data);
}

TEST(Ram, AgreesWithMapOracle) {
    const Params p{5, 12, false};
    RamState s = swept(p);
    ramtest::RamOracle oracle;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        const bool re = rng() & 1, we = rng() & 1;
        const std::uint64_t ra = rng() % 32, wa = rng() % 32, wd = rng() % 4096;
        RamInputs in{Level::high, to_level(re), to_level(we), Word(5, ra), Word(5, wa), Word(12, wd)};
        ram_step_inplace(s, in);
        ASSERT_EQ(s.rd_data.value(), oracle.step(re, we, ra, wa, wd)) << "step " << i;
    }
    for (std::uint64_t a = 0; a < 32; ++a) EXPECT_EQ(s.memory[a].value(), oracle.peek(a));
}
