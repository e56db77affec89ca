#include <gtest/gtest.h>

#include <string>

#include "ramarb/corpus.hpp"
#include "ramarb/scenario.hpp"

using namespace ramarb;

namespace {

std::size_t error_line(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const ScenarioParseError& e) {
        return e.line();
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return 0;
}

}  // namespace

TEST(Parse, FullExample) {
    const auto sc = parse_scenario(
        "# header comment\n"
        "scenario demo\n"
        "params addr=4 data=8 registered=1\n"
        "clock 50\n"
        "@100 RST_N = 1   # trailing comment\n"
        "@600 WR_EN_C1 = 1\n"
        "@600 WRADDR_C1 = 1010\n"
        "expect @3500 RDDATA_C1 = 10100011\n"
        "expect @3500 ACK_C2 = low\n"
        "expect pulses ACK_C2 in 2000..3000\n"
        "run 4000\n");
    EXPECT_EQ(sc.name, "demo");
    EXPECT_EQ(sc.params, (Params{4, 8, true}));
    EXPECT_EQ(sc.clock_period, 50u);
    EXPECT_EQ(sc.target, Target::system);
    ASSERT_EQ(sc.events.size(), 3u);
    EXPECT_EQ(sc.events[2].pin, "WRADDR_C1");
    ASSERT_EQ(sc.assertions.size(), 3u);
    EXPECT_EQ(sc.assertions[1].expected_bits(), "0");
    EXPECT_EQ(sc.assertions[2].kind, AssertionKind::pulses);
    EXPECT_EQ(sc.assertions[2].end, 3000u);
    EXPECT_EQ(sc.duration, 4000u);
}

TEST(Parse, Defaults) {
    const auto sc = parse_scenario("run 10\n");
    EXPECT_EQ(sc.params, Params{});
    EXPECT_EQ(sc.clock_period, 100u);
    EXPECT_TRUE(sc.events.empty());
}

TEST(Parse, PartialParams) {
    const auto sc = parse_scenario("params data=16\nrun 10\n");
    EXPECT_EQ(sc.params.addr_width, 4u);
    EXPECT_EQ(sc.params.data_width, 16u);
}

TEST(Parse, InfersRamTarget) {
    const auto sc = parse_scenario("@100 RST_N = 1\n@200 WR_EN = 1\nexpect @300 RD_DATA = 00000000\nrun 400\n");
    EXPECT_EQ(sc.target, Target::ram);
}

TEST(Parse, PortListAliases) {
    const auto sc = parse_scenario("@0 RD_ADDR_C1 = 0001\n@0 WR_DATA_C1 = 00000001\nexpect @50 DATA_OUT_C2 = 00000000\nrun 100\n");
    EXPECT_EQ(sc.events[0].pin, "RDADDR_C1");
    EXPECT_EQ(sc.events[1].pin, "WRDATA_C1");
    EXPECT_EQ(sc.assertions[0].pin, "DATAOUT_C2");
}

TEST(Parse, SameTimeEventsKeepFileOrder) {
    const auto sc = parse_scenario("@5 ADDR_C2 = 0001\n@5 ADDR_C2 = 0010\nrun 10\n");
    auto in = ClientInputs::zero(sc.params);
    RamInputs ram{};
    for (const auto& e : sc.events) apply_event(e, sc.params, in, ram);
    EXPECT_EQ(in.addr_c2.value(), 2u);
}

TEST(ParseErrors, ReportLineNumbers) {
    EXPECT_EQ(error_line("run 10\nfrobnicate\n"), 2u);
    EXPECT_EQ(error_line("@10 WR_EN_C1 = 1\n@5 WR_EN_C1 = 0\nrun 20\n"), 2u);
    EXPECT_EQ(error_line("@10 WRADDR_C1 = 101\nrun 20\n"), 1u);
    EXPECT_EQ(error_line("@10 WRADDR_C1 = 10x1\nrun 20\n"), 1u);
    EXPECT_EQ(error_line("@10 NOPE = 1\nrun 20\n"), 1u);
    EXPECT_EQ(error_line("@30 WR_EN_C1 = 1\nrun 20\n"), 1u);
    EXPECT_EQ(error_line("clock 25\nrun 20\n"), 1u);
    EXPECT_EQ(error_line("clock 0\nrun 20\n"), 1u);
    EXPECT_EQ(error_line("run 20\nrun 30\n"), 2u);
    EXPECT_EQ(error_line("run -5\n"), 1u);
    EXPECT_EQ(error_line("params addr=21\nrun 5\n"), 1u);
    EXPECT_EQ(error_line("params addr=4294967300\nrun 5\n"), 1u);
    EXPECT_EQ(error_line("params data=8 data=8\nrun 5\n"), 1u);
    EXPECT_EQ(error_line("params registered=2\nrun 5\n"), 1u);
    EXPECT_EQ(error_line("params width=2\nrun 5\n"), 1u);
    EXPECT_EQ(error_line("run 5\nexpect @1 RDDATA_C1 = high\n"), 2u);
    EXPECT_EQ(error_line("run 5\nexpect pulses RDDATA_C1 in 1..2\n"), 2u);
    EXPECT_EQ(error_line("run 5\nexpect pulses ACK_C2 in 3..2\n"), 2u);
    EXPECT_EQ(error_line("run 5\nexpect @1 MYSTERY = 1\n"), 2u);
    EXPECT_EQ(error_line("run 5\nexpect @1 ACK_C2 is 1\n"), 2u);
}

TEST(ParseErrors, MixedTargets) {
    EXPECT_EQ(error_line("@1 WR_EN_C1 = 1\n@2 WR_EN = 1\nrun 5\n"), 2u);
}

TEST(ParseErrors, ClientObservablesNotOnRam) {
    EXPECT_EQ(error_line("@1 WR_EN = 1\nexpect @2 ACK_C2 = low\nrun 5\n"), 2u);
}

TEST(ParseErrors, MissingRun) {
    try {
        parse_scenario("@1 RST_N = 1\n");
        FAIL();
    } catch (const ScenarioParseError& e) {
        EXPECT_EQ(e.line(), 0u);
        EXPECT_NE(std::string(e.what()).find("run"), std::string::npos);
    }
}

TEST(Render, RoundTripsEveryBuiltin) {
    for (const auto& sc : builtin_scenarios()) EXPECT_EQ(parse_scenario(render_scenario(sc)), sc) << sc.name;
}

TEST(Corpus, HasThirtySevenUniquelyNamedCases) {
    const auto& all = builtin_scenarios();
    ASSERT_EQ(all.size(), 37u);
    std::size_t ram = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        ram += all[i].target == Target::ram;
        EXPECT_FALSE(all[i].assertions.empty()) << all[i].name;
        for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_NE(all[i].name, all[j].name);
    }
    EXPECT_EQ(ram, 3u);
}

TEST(Corpus, LookupByTag) {
    ASSERT_NE(find_builtin("tc07"), nullptr);
    EXPECT_EQ(find_builtin("tc07")->name, "tc07-c1-rw-same-same-time");
    ASSERT_NE(find_builtin("ram2"), nullptr);
    EXPECT_EQ(find_builtin("ram2-read")->target, Target::ram);
    EXPECT_EQ(find_builtin("tc99"), nullptr);
    EXPECT_EQ(find_builtin("tc"), nullptr);
}
