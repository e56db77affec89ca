// Builtin scenario corpus: the three bare-RAM testbench cases and the 34
// RAM-arbiter testbench cases.
//
// Each arbiter case starts from power-on with RST_N low, releases reset at
// 100 ns and then applies its own stimulus block with the original times,
// addresses and data literals. The arbiter testbench clock is 50 ns and the
// RAM testbench clock is 100 ns. Assertions sample well inside the windows
// where the described behavior is settled, so they hold in both output
// modes.
//
// Channel states in READ_STATE/WRITE_STATE assertions use the trace
// encoding: 000 reset, 001 idle, 010 client1_read, 011 client2_read,
// 100 client1_write, 101 client2_write.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ramarb/scenario.hpp"

namespace ramarb {

namespace corpus_detail {

/// `expect @t PIN = low` at every `step` ns in [from, to].
inline std::string low_throughout(std::string_view pin, unsigned from, unsigned to, unsigned step = 50) {
    std::string s;
    for (unsigned t = from; t <= to; t += step)
        s += "expect @" + std::to_string(t) + " " + std::string(pin) + " = low\n";
    return s;
}

/// `expect @t PIN = value` at every `step` ns in [from, to].
inline std::string value_throughout(std::string_view pin, std::string_view value, unsigned from, unsigned to,
                                    unsigned step = 50) {
    std::string s;
    for (unsigned t = from; t <= to; t += step)
        s += "expect @" + std::to_string(t) + " " + std::string(pin) + " = " + std::string(value) + "\n";
    return s;
}

inline std::string arbiter_case(std::string_view name, std::string_view body, unsigned run = 4000) {
    std::string s = "scenario " + std::string(name) + "\n";
    s += "params addr=4 data=8 registered=0\nclock 50\n@100 RST_N = 1\n";
    s += body;
    s += "run " + std::to_string(run) + "\n";
    return s;
}

// Client1 writes 10100011 @ 1010 during the first sweep window (TC1 block).
inline constexpr std::string_view c1_first_write =
    "@600 WR_EN_C1 = 1\n@600 WRADDR_C1 = 1010\n@600 WRDATA_C1 = 10100011\n";

// Client2 writes 11100011 @ <addr> from reset release.
inline std::string c2_first_write(std::string_view addr) {
    return "@100 WR_EN_C1 = 0\n@100 REQUEST_C2 = 1\n@100 RD_NOT_WRITE_C2 = 0\n@100 ADDR_C2 = " + std::string(addr) +
           "\n@100 DATAIN_C2 = 11100011\n";
}

// Client1 writes 10101111 @ <addr> from reset release.
inline std::string c1_write_10101111(std::string_view addr) {
    return "@100 WR_EN_C1 = 1\n@100 RD_EN_C1 = 0\n@100 WRADDR_C1 = " + std::string(addr) +
           "\n@100 WRDATA_C1 = 10101111\n";
}

inline std::vector<std::string> ram_sources() {
    const std::string head = "params addr=4 data=8 registered=0\nclock 100\n@100 RST_N = 1\n";
    const std::string tc1 =
        "@200 WR_EN = 1\n@200 RD_EN = 0\n@200 WR_ADDR = 1101\n@200 WR_DATA = 11100111\n";
    const std::string tc2 = "@1900 WR_EN = 0\n@1900 RD_EN = 1\n@1900 RD_ADDR = 1101\n";
    const std::string tc3 =
        "@3600 WR_EN = 1\n@3600 RD_EN = 1\n@3600 RD_ADDR = 1101\n@3600 WR_ADDR = 1011\n@3600 WR_DATA = 10111001\n"
        "@5300 RD_ADDR = 1011\n@5300 WR_ADDR = 1000\n@5300 WR_DATA = 10011111\n";
    return {
        // Write only: the sweep finishes, the write lands, nothing is read.
        "scenario ram1-write\n" + head + tc1 +
            "expect @1000 RAM_SWEEP = high\n"
            "expect @1800 RAM_SWEEP = low\n"
            "expect @1800 RD_DATA = 00000000\n"
            "run 1900\n",
        // Read back of the word written by the first case.
        "scenario ram2-read\n" + head + tc1 + tc2 +
            "expect @1800 RD_DATA = 00000000\n"
            "expect @2500 RD_DATA = 11100111\n"
            "expect @3500 RD_DATA = 11100111\n"
            "run 3600\n",
        // Simultaneous read and write on different addresses. The second
        // phase reads 1011, written during the first phase, while writing
        // 1000.
        "scenario ram3-read-write\n" + head + tc1 + tc2 + tc3 +
            "expect @4500 RD_DATA = 11100111\n"
            "expect @5200 RD_DATA = 11100111\n"
            "expect @5400 RD_DATA = 10111001\n"
            "expect @6500 RD_DATA = 10111001\n"
            "run 7000\n",
    };
}

inline std::vector<std::string> arbiter_sources() {
    std::vector<std::string> v;
    const std::string c1w = std::string(c1_first_write);

    v.push_back(arbiter_case("tc01-c1-write", c1w +
        "expect @500 RST_DONE = low\n"
        "expect @1500 RST_DONE = high\n"
        "expect @1500 WRITE_STATE = 100\n"
        "expect @1500 WR_EN = high\n"
        "expect @1500 WR_ADDR = 1010\n"
        "expect @1500 WR_DATA = 10100011\n"
        "expect @1500 RD_EN = low\n"
        "expect @1500 ACK_C2 = low\n",
        2300));

    v.push_back(arbiter_case("tc02-c1-read", c1w +
        "@2300 WR_EN_C1 = 0\n@2300 RD_EN_C1 = 1\n@2300 RDADDR_C1 = 1010\n"
        "expect @2000 WR_DATA = 10100011\n"
        "expect @2500 READ_STATE = 010\n"
        "expect @2500 WR_EN = low\n"
        "expect @2500 RDDATA_C1 = 10100011\n"
        "expect @3500 RDDATA_C1 = 10100011\n"
        "expect @3900 RDDATA_C1 = 10100011\n"));

    v.push_back(arbiter_case("tc03-c2-write", c2_first_write("1110") +
        "expect @800 ACK_C2 = low\n"
        "expect pulses ACK_C2 in 1000..2000\n"
        "expect @1500 WRITE_STATE = 101\n"
        "expect @1500 WR_EN = high\n"
        "expect @1500 WR_ADDR = 1110\n"
        "expect @1500 WR_DATA = 11100011\n",
        2300));

    v.push_back(arbiter_case("tc04-c2-read", c2_first_write("1110") +
        "@1800 WR_EN_C1 = 0\n@1800 RD_NOT_WRITE_C2 = 1\n@1800 ADDR_C2 = 1110\n"
        "expect pulses ACK_C2 in 1000..1800\n"
        "expect @2500 READ_STATE = 011\n"
        "expect @2500 WRITE_STATE = 001\n"
        "expect @2500 RD_ADDR = 1110\n"
        "expect @2500 DATAOUT_C2 = 11100011\n"
        "expect @3000 DATAOUT_C2 = 11100011\n"
        "expect @3000 RDDATA_C1 = 11100011\n"
        "expect pulses ACK_C2 in 2000..3000\n"));

    v.push_back(arbiter_case("tc05-c1-rw-diff-same-time", c1w +
        "@2300 RD_EN_C1 = 1\n@2300 RDADDR_C1 = 1010\n@2300 WRADDR_C1 = 1110\n@2300 WRDATA_C1 = 10111011\n"
        "expect @3000 READ_STATE = 010\n"
        "expect @3000 WRITE_STATE = 100\n"
        "expect @3000 RDDATA_C1 = 10100011\n"
        "expect @3000 WR_ADDR = 1110\n"
        "expect @3000 WR_DATA = 10111011\n"
        "expect @3000 ADDR_CLASH = low\n"
        "expect @3900 RDDATA_C1 = 10100011\n"));

    v.push_back(arbiter_case("tc06-c1-rw-diff-diff-time", c1w +
        "@2300 RD_EN_C1 = 1\n@2300 RDADDR_C1 = 1010\n"
        "@2800 WRADDR_C1 = 1110\n@2800 WRDATA_C1 = 10111011\n"
        "expect @2600 RDDATA_C1 = 10100011\n"
        "expect @2600 WR_ADDR = 1010\n"
        "expect @3500 RDDATA_C1 = 10100011\n"
        "expect @3500 WR_ADDR = 1110\n"
        "expect @3500 WR_DATA = 10111011\n"
        "expect @3500 ADDR_CLASH = low\n"));

    v.push_back(arbiter_case("tc07-c1-rw-same-same-time", c1w +
        "@2300 RD_EN_C1 = 1\n@2300 RDADDR_C1 = 1010\n@2300 WRADDR_C1 = 1010\n@2300 WRDATA_C1 = 10111011\n"
        "expect @2500 ADDR_CLASH = high\n"
        "expect @3500 ADDR_CLASH = high\n" +
        value_throughout("RDDATA_C1", "10111011", 2400, 3950, 50) +
        "expect @3000 RD_ADDR = 1010\n"
        "expect @3000 WR_ADDR = 1010\n"));

    v.push_back(arbiter_case("tc08-c1-rw-same-diff-time", c1w +
        "@2300 RD_EN_C1 = 1\n@2300 RDADDR_C1 = 1010\n"
        "@2800 WRADDR_C1 = 1010\n@2800 WRDATA_C1 = 10111011\n"
        "expect @2600 ADDR_CLASH = high\n"
        "expect @2600 RDDATA_C1 = 10100011\n" +
        value_throughout("RDDATA_C1", "10111011", 2900, 3950, 50) +
        "expect @3500 ADDR_CLASH = high\n"));

    // The write and the read are issued in the same delta; the read wins
    // because RD_NOT_WRITE_C2 ends high, so the write of 00100011 @ 1001
    // never happens.
    v.push_back(arbiter_case("tc09-c2-rw-diff-same-time", c2_first_write("1010") +
        "@1800 RD_NOT_WRITE_C2 = 0\n@1800 ADDR_C2 = 1001\n@1800 DATAIN_C2 = 00100011\n"
        "@1800 RD_NOT_WRITE_C2 = 1\n@1800 ADDR_C2 = 1010\n"
        "expect pulses ACK_C2 in 1000..1800\n"
        "expect @3000 READ_STATE = 011\n"
        "expect @3000 WRITE_STATE = 001\n"
        "expect @3000 DATAOUT_C2 = 11100011\n"
        "expect @3000 ADDR_CLASH = low\n" +
        low_throughout("WR_EN", 1900, 3900, 50) +
        "expect pulses ACK_C2 in 2000..3000\n"));

    v.push_back(arbiter_case("tc10-c2-rw-diff-diff-time", c2_first_write("1010") +
        "@1800 RD_NOT_WRITE_C2 = 0\n@1800 ADDR_C2 = 1001\n@1800 DATAIN_C2 = 00100011\n"
        "@2300 RD_NOT_WRITE_C2 = 1\n@2300 ADDR_C2 = 1010\n"
        "expect @2100 WRITE_STATE = 101\n"
        "expect @2100 WR_ADDR = 1001\n"
        "expect @2100 WR_DATA = 00100011\n"
        "expect pulses ACK_C2 in 1900..2300\n"
        "expect @3000 READ_STATE = 011\n"
        "expect @3000 DATAOUT_C2 = 11100011\n"
        "expect pulses ACK_C2 in 2400..3500\n"));

    // Same-time read and write: the later write assignment wins, the read is
    // omitted.
    v.push_back(arbiter_case("tc11-c2-rw-same-same-time", c2_first_write("1010") +
        "@1800 RD_NOT_WRITE_C2 = 1\n@1800 ADDR_C2 = 1010\n"
        "@1800 RD_NOT_WRITE_C2 = 0\n@1800 ADDR_C2 = 1010\n@1800 DATAIN_C2 = 00100011\n"
        "expect @3000 WRITE_STATE = 101\n"
        "expect @3000 READ_STATE = 001\n"
        "expect @3000 WR_ADDR = 1010\n"
        "expect @3000 WR_DATA = 00100011\n" +
        low_throughout("RD_EN", 1900, 3900, 50) +
        "expect pulses ACK_C2 in 2000..3000\n"));

    v.push_back(arbiter_case("tc12-c2-rw-same-diff-time", c2_first_write("1010") +
        "@1800 RD_NOT_WRITE_C2 = 1\n@1800 ADDR_C2 = 1010\n"
        "@2300 RD_NOT_WRITE_C2 = 0\n@2300 ADDR_C2 = 1010\n@2300 DATAIN_C2 = 00100011\n"
        "expect @2100 READ_STATE = 011\n"
        "expect @2100 DATAOUT_C2 = 11100011\n"
        "expect pulses ACK_C2 in 1900..2300\n"
        "expect @3000 WRITE_STATE = 101\n"
        "expect @3000 WR_ADDR = 1010\n"
        "expect @3000 WR_DATA = 00100011\n"
        "expect pulses ACK_C2 in 2400..3500\n"));

    v.push_back(arbiter_case("tc13-c1w-c2r-diff-same-time", c2_first_write("1110") +
        "@1800 WR_EN_C1 = 1\n@1800 RD_EN_C1 = 0\n@1800 WRADDR_C1 = 1001\n@1800 WRDATA_C1 = 10111011\n"
        "@1800 REQUEST_C2 = 1\n@1800 RD_NOT_WRITE_C2 = 1\n@1800 ADDR_C2 = 1110\n"
        "expect pulses ACK_C2 in 1000..1800\n"
        "expect @3000 READ_STATE = 011\n"
        "expect @3000 WRITE_STATE = 100\n"
        "expect @3000 WR_ADDR = 1001\n"
        "expect @3000 WR_DATA = 10111011\n"
        "expect @3000 DATAOUT_C2 = 11100011\n"
        "expect pulses ACK_C2 in 2000..3000\n"));

    v.push_back(arbiter_case("tc14-c1w-c2r-diff-diff-time", c2_first_write("1110") +
        "@1800 WR_EN_C1 = 1\n@1800 RD_EN_C1 = 0\n@1800 WRADDR_C1 = 1001\n@1800 WRDATA_C1 = 10111011\n"
        "@2300 REQUEST_C2 = 1\n@2300 RD_NOT_WRITE_C2 = 1\n@2300 ADDR_C2 = 1110\n"
        "expect @2100 WRITE_STATE = 100\n"
        "expect @2100 READ_STATE = 001\n"
        "expect @2100 WR_ADDR = 1001\n"
        "expect @3000 READ_STATE = 011\n"
        "expect @3000 DATAOUT_C2 = 11100011\n"
        "expect @3000 WR_ADDR = 1001\n"
        "expect pulses ACK_C2 in 2400..3500\n"));

    // Client1 writes the word client2 reads: both outputs show the bypass.
    v.push_back(arbiter_case("tc15-c1w-c2r-same-same-time", c2_first_write("1110") +
        "@1800 WR_EN_C1 = 1\n@1800 RD_EN_C1 = 0\n@1800 WRADDR_C1 = 1110\n@1800 WRDATA_C1 = 10111011\n"
        "@1800 REQUEST_C2 = 1\n@1800 RD_NOT_WRITE_C2 = 1\n@1800 ADDR_C2 = 1110\n"
        "expect @3000 READ_STATE = 011\n"
        "expect @3000 WRITE_STATE = 100\n"
        "expect @3000 ADDR_CLASH = high\n"
        "expect @3000 DATAOUT_C2 = 10111011\n"
        "expect @3000 RDDATA_C1 = 10111011\n"
        "expect pulses ACK_C2 in 2000..3000\n"));

    v.push_back(arbiter_case("tc16-c1w-c2r-same-diff-time", c2_first_write("1110") +
        "@1800 WR_EN_C1 = 1\n@1800 RD_EN_C1 = 0\n@1800 WRADDR_C1 = 1110\n@1800 WRDATA_C1 = 10111011\n"
        "@2300 REQUEST_C2 = 1\n@2300 RD_NOT_WRITE_C2 = 1\n@2300 ADDR_C2 = 1110\n"
        "expect @2100 ADDR_CLASH = low\n"
        "expect @3500 READ_STATE = 011\n"
        "expect @3500 ADDR_CLASH = high\n"
        "expect @3500 DATAOUT_C2 = 10111011\n"
        "expect @3500 RDDATA_C1 = 10111011\n"
        "expect pulses ACK_C2 in 2400..3500\n"));

    v.push_back(arbiter_case("tc17-c1r-c2w-same-same-time", c1_write_10101111("1010") +
        "@1800 RD_EN_C1 = 1\n@1800 WR_EN_C1 = 0\n@1800 RDADDR_C1 = 1010\n"
        "@1800 REQUEST_C2 = 1\n@1800 RD_NOT_WRITE_C2 = 0\n@1800 ADDR_C2 = 1010\n@1800 DATAIN_C2 = 10111011\n"
        "expect @3000 READ_STATE = 010\n"
        "expect @3000 WRITE_STATE = 101\n"
        "expect @3000 ADDR_CLASH = high\n"
        "expect @3000 RDDATA_C1 = 10111011\n"
        "expect pulses ACK_C2 in 2000..3000\n"));

    v.push_back(arbiter_case("tc18-c1r-c2w-same-diff-time", c1_write_10101111("1010") +
        "@1800 RD_EN_C1 = 1\n@1800 WR_EN_C1 = 0\n@1800 RDADDR_C1 = 1010\n"
        "@2300 REQUEST_C2 = 1\n@2300 RD_NOT_WRITE_C2 = 0\n@2300 ADDR_C2 = 1010\n@2300 DATAIN_C2 = 10111011\n"
        "expect @2100 RDDATA_C1 = 10101111\n"
        "expect @2100 ACK_C2 = low\n"
        "expect @3500 WRITE_STATE = 101\n"
        "expect @3500 ADDR_CLASH = high\n"
        "expect @3500 RDDATA_C1 = 10111011\n"
        "expect pulses ACK_C2 in 2400..3500\n"));

    v.push_back(arbiter_case("tc19-c1r-c2w-diff-same-time", c1_write_10101111("1000") +
        "@1800 RD_EN_C1 = 1\n@1800 WR_EN_C1 = 0\n@1800 RDADDR_C1 = 1000\n"
        "@1800 REQUEST_C2 = 1\n@1800 RD_NOT_WRITE_C2 = 0\n@1800 ADDR_C2 = 1010\n@1800 DATAIN_C2 = 10100011\n"
        "expect @3000 READ_STATE = 010\n"
        "expect @3000 WRITE_STATE = 101\n"
        "expect @3000 RDDATA_C1 = 10101111\n"
        "expect @3000 WR_ADDR = 1010\n"
        "expect @3000 WR_DATA = 10100011\n"
        "expect @3000 ADDR_CLASH = low\n"
        "expect pulses ACK_C2 in 2000..3000\n"));

    v.push_back(arbiter_case("tc20-c1r-c2w-diff-diff-time", c1_write_10101111("1000") +
        "@1800 RD_EN_C1 = 1\n@1800 WR_EN_C1 = 0\n@1800 RDADDR_C1 = 1000\n"
        "@2300 REQUEST_C2 = 1\n@2300 RD_NOT_WRITE_C2 = 0\n@2300 ADDR_C2 = 1010\n@2300 DATAIN_C2 = 10100011\n"
        "expect @2100 RDDATA_C1 = 10101111\n"
        "expect @2100 WRITE_STATE = 001\n"
        "expect @3500 RDDATA_C1 = 10101111\n"
        "expect @3500 WRITE_STATE = 101\n"
        "expect @3500 WR_ADDR = 1010\n"
        "expect pulses ACK_C2 in 2400..3500\n"));

    // Client2 waits while client1 holds the read channel, then gets it once
    // RD_EN_C1 drops.
    v.push_back(arbiter_case("tc21-both-read-same-diff-time", c1_write_10101111("1010") +
        "@1800 RD_EN_C1 = 1\n@1800 WR_EN_C1 = 0\n@1800 RDADDR_C1 = 1010\n"
        "@2100 REQUEST_C2 = 1\n@2100 RD_NOT_WRITE_C2 = 1\n@2100 ADDR_C2 = 1010\n"
        "@2300 RD_EN_C1 = 0\n"
        "expect @2200 READ_STATE = 010\n"
        "expect @2200 RDDATA_C1 = 10101111\n" +
        low_throughout("ACK_C2", 1900, 2250, 50) +
        "expect @3000 READ_STATE = 011\n"
        "expect @3000 DATAOUT_C2 = 10101111\n"
        "expect pulses ACK_C2 in 2400..3500\n"));

    v.push_back(arbiter_case("tc22-both-read-same", c1_write_10101111("1010") +
        "@1800 RD_EN_C1 = 1\n@1800 WR_EN_C1 = 0\n@1800 RDADDR_C1 = 1010\n"
        "@1800 REQUEST_C2 = 1\n@1800 RD_NOT_WRITE_C2 = 1\n@1800 ADDR_C2 = 1010\n"
        "expect @3000 READ_STATE = 010\n"
        "expect @3000 WRITE_STATE = 001\n"
        "expect @3000 RDDATA_C1 = 10101111\n" +
        low_throughout("ACK_C2", 1850, 3950, 50)));

    v.push_back(arbiter_case("tc23-both-read-diff-diff-time", c1_write_10101111("1001") +
        "@1800 RD_EN_C1 = 1\n@1800 WR_EN_C1 = 0\n@1800 RDADDR_C1 = 1001\n"
        "@2100 REQUEST_C2 = 1\n@2100 RD_NOT_WRITE_C2 = 1\n@2100 ADDR_C2 = 1010\n"
        "@2300 RD_EN_C1 = 0\n"
        "expect @2200 READ_STATE = 010\n"
        "expect @2200 RDDATA_C1 = 10101111\n" +
        low_throughout("ACK_C2", 1900, 2250, 50) +
        "expect @3000 READ_STATE = 011\n"
        "expect @3000 RD_ADDR = 1010\n"
        "expect @3000 DATAOUT_C2 = 00000000\n"
        "expect pulses ACK_C2 in 2400..3500\n"));

    v.push_back(arbiter_case("tc24-both-read-diff-same-time", c1_write_10101111("1001") +
        "@1800 RD_EN_C1 = 1\n@1800 WR_EN_C1 = 0\n@1800 RDADDR_C1 = 1001\n"
        "@1800 REQUEST_C2 = 1\n@1800 RD_NOT_WRITE_C2 = 1\n@1800 ADDR_C2 = 1010\n"
        "expect @3000 READ_STATE = 010\n"
        "expect @3000 RDDATA_C1 = 10101111\n"
        "expect @3000 RD_ADDR = 1001\n" +
        low_throughout("ACK_C2", 1850, 3950, 50)));

    v.push_back(arbiter_case("tc25-c1rw-c2r-diff-time", c1_write_10101111("1001") +
        "@1800 RD_EN_C1 = 1\n@1800 RDADDR_C1 = 1001\n@1800 WRADDR_C1 = 1001\n@1800 WRDATA_C1 = 10100011\n"
        "@2100 REQUEST_C2 = 1\n@2100 RD_NOT_WRITE_C2 = 1\n@2100 ADDR_C2 = 1001\n"
        "@2300 RD_EN_C1 = 0\n"
        "expect @2000 ADDR_CLASH = high\n"
        "expect @2000 RDDATA_C1 = 10100011\n"
        "expect @2200 RDDATA_C1 = 10100011\n" +
        low_throughout("ACK_C2", 1900, 2250, 50) +
        "expect @3000 READ_STATE = 011\n"
        "expect @3000 WRITE_STATE = 100\n"
        "expect @3000 DATAOUT_C2 = 10100011\n"
        "expect pulses ACK_C2 in 2400..3500\n"));

    v.push_back(arbiter_case("tc26-c1rw-c2r-same-time", c1_write_10101111("1001") +
        "@1800 RD_EN_C1 = 1\n@1800 RDADDR_C1 = 1001\n@1800 WRADDR_C1 = 1001\n@1800 WRDATA_C1 = 10100011\n"
        "@1800 REQUEST_C2 = 1\n@1800 RD_NOT_WRITE_C2 = 1\n@1800 ADDR_C2 = 1001\n"
        "expect @3000 ADDR_CLASH = high\n"
        "expect @3000 READ_STATE = 010\n"
        "expect @3000 RDDATA_C1 = 10100011\n" +
        low_throughout("ACK_C2", 1850, 3950, 50)));

    // Once client1 releases the write channel client2's write takes it and
    // client1's ongoing read follows the new data through the bypass.
    v.push_back(arbiter_case("tc27-c1rw-c2w-diff-time", c1_write_10101111("1001") +
        "@1800 RD_EN_C1 = 1\n@1800 RDADDR_C1 = 1001\n@1800 WRADDR_C1 = 1001\n@1800 WRDATA_C1 = 10100011\n"
        "@2100 REQUEST_C2 = 1\n@2100 RD_NOT_WRITE_C2 = 0\n@2100 ADDR_C2 = 1001\n@2100 DATAIN_C2 = 11100011\n"
        "@2300 WR_EN_C1 = 0\n"
        "expect @2200 RDDATA_C1 = 10100011\n"
        "expect @2200 WRITE_STATE = 100\n" +
        low_throughout("ACK_C2", 1900, 2250, 50) +
        "expect @3000 WRITE_STATE = 101\n"
        "expect @3000 ADDR_CLASH = high\n"
        "expect @3000 RDDATA_C1 = 11100011\n"
        "expect pulses ACK_C2 in 2400..3500\n"));

    v.push_back(arbiter_case("tc28-c1rw-c2w-same-time", c1_write_10101111("1001") +
        "@1800 RD_EN_C1 = 1\n@1800 RDADDR_C1 = 1001\n@1800 WRADDR_C1 = 1001\n@1800 WRDATA_C1 = 10100011\n"
        "@1800 REQUEST_C2 = 1\n@1800 RD_NOT_WRITE_C2 = 0\n@1800 ADDR_C2 = 1001\n@1800 DATAIN_C2 = 11100011\n"
        "expect @3000 WRITE_STATE = 100\n"
        "expect @3000 READ_STATE = 010\n"
        "expect @3000 RDDATA_C1 = 10100011\n"
        "expect @3000 WR_DATA = 10100011\n" +
        low_throughout("ACK_C2", 1850, 3950, 50)));

    v.push_back(arbiter_case("tc29-c2rw-c1w-diff-time", c2_first_write("1001") +
        "@1800 RD_NOT_WRITE_C2 = 1\n@1800 ADDR_C2 = 1001\n"
        "@2100 WRADDR_C1 = 1001\n@2100 WRDATA_C1 = 10101111\n"
        "@2300 WR_EN_C1 = 1\n"
        "expect @2200 READ_STATE = 011\n"
        "expect @2200 DATAOUT_C2 = 11100011\n"
        "expect @2200 ADDR_CLASH = low\n"
        "expect @3000 WRITE_STATE = 100\n"
        "expect @3000 ADDR_CLASH = high\n"
        "expect @3000 DATAOUT_C2 = 10101111\n"
        "expect @3000 RDDATA_C1 = 10101111\n"
        "expect pulses ACK_C2 in 2400..3500\n"));

    // Client2's write is dropped; it keeps the read channel while client1
    // writes the same word, and both outputs see client1's data.
    v.push_back(arbiter_case("tc30-c2rw-c1w-same-time", c2_first_write("1001") +
        "@1800 WR_EN_C1 = 1\n@1800 RD_NOT_WRITE_C2 = 1\n@1800 ADDR_C2 = 1001\n"
        "@1800 WRADDR_C1 = 1001\n@1800 WRDATA_C1 = 10101111\n"
        "expect @3000 READ_STATE = 011\n"
        "expect @3000 WRITE_STATE = 100\n"
        "expect @3000 ADDR_CLASH = high\n"
        "expect @3000 DATAOUT_C2 = 10101111\n"
        "expect @3000 RDDATA_C1 = 10101111\n"
        "expect pulses ACK_C2 in 2000..3000\n"));

    v.push_back(arbiter_case("tc31-c2rw-c1r-same-time", c2_first_write("1001") +
        "@1800 RD_EN_C1 = 1\n@1800 RD_NOT_WRITE_C2 = 1\n@1800 ADDR_C2 = 1001\n@1800 RDADDR_C1 = 1001\n"
        "expect pulses ACK_C2 in 1000..1800\n"
        "expect @3000 READ_STATE = 010\n"
        "expect @3000 WRITE_STATE = 001\n"
        "expect @3000 RDDATA_C1 = 11100011\n" +
        low_throughout("ACK_C2", 1900, 3950, 50)));

    v.push_back(arbiter_case("tc32-c2rw-c1r-diff-time", c2_first_write("1001") +
        "@1800 RD_NOT_WRITE_C2 = 1\n@1800 ADDR_C2 = 1001\n"
        "@2100 RD_EN_C1 = 1\n@2100 RDADDR_C1 = 1001\n"
        "expect @2000 READ_STATE = 011\n"
        "expect @2000 DATAOUT_C2 = 11100011\n"
        "expect pulses ACK_C2 in 1850..2100\n"
        "expect @3000 READ_STATE = 010\n"
        "expect @3000 RDDATA_C1 = 11100011\n" +
        low_throughout("ACK_C2", 2300, 3950, 50)));

    // Mid-run reset. The stimulus after 3900 ns is an added probe that reads
    // back the pre-reset write location and then the post-reset write
    // location through the RAM itself.
    v.push_back(arbiter_case("tc33-reset-midrun", c1_write_10101111("1010") +
        "@1800 RST_N = 0\n@1800 RD_EN_C1 = 1\n@1800 WR_EN_C1 = 0\n@1800 RDADDR_C1 = 1010\n"
        "@1800 REQUEST_C2 = 1\n@1800 RD_NOT_WRITE_C2 = 0\n@1800 ADDR_C2 = 0110\n@1800 DATAIN_C2 = 10111011\n"
        "@2300 RST_N = 1\n@2300 RDADDR_C1 = 1010\n"
        "@2600 RDADDR_C1 = 0110\n"
        "@4000 REQUEST_C2 = 0\n@4000 RDADDR_C1 = 1010\n"
        "@5000 RDADDR_C1 = 0110\n"
        "expect @1500 WR_DATA = 10101111\n"
        "expect @2000 RST_DONE = low\n"
        "expect @2000 WR_EN = low\n"
        "expect @3000 RST_DONE = low\n"
        "expect @3000 RD_EN = low\n"
        "expect @3000 WR_EN = low\n"
        "expect @3500 RST_DONE = high\n"
        "expect @3500 ADDR_CLASH = high\n"
        "expect @3500 RDDATA_C1 = 10111011\n"
        "expect @3500 DATAOUT_C2 = 10111011\n"
        "expect @4500 RDDATA_C1 = 00000000\n"
        "expect @5500 RDDATA_C1 = 10111011\n",
        6000));

    // Inputs applied while the design is held in reset (and during the
    // following sweep) have no effect.
    v.push_back(arbiter_case("tc34-inputs-during-reset",
        "@300 WR_EN_C1 = 1\n@300 RD_EN_C1 = 0\n@300 WRADDR_C1 = 1010\n@300 WRDATA_C1 = 10101111\n@300 RST_N = 0\n"
        "@2000 RD_EN_C1 = 1\n@2000 WR_EN_C1 = 0\n@2000 RDADDR_C1 = 1010\n"
        "@2000 REQUEST_C2 = 1\n@2000 RD_NOT_WRITE_C2 = 0\n@2000 ADDR_C2 = 0110\n@2000 DATAIN_C2 = 10111011\n"
        "@2800 RST_N = 1\n@2800 RDADDR_C1 = 1010\n" +
        low_throughout("RST_DONE", 400, 3500, 100) +
        low_throughout("WR_EN", 400, 3500, 100) +
        low_throughout("RD_EN", 400, 3500, 100) +
        low_throughout("ACK_C2", 400, 3500, 100) +
        "expect @4000 RST_DONE = high\n"
        "expect @4500 RDDATA_C1 = 00000000\n"
        "expect @4500 WRITE_STATE = 101\n"
        "expect @4500 WR_ADDR = 0110\n",
        5000));

    return v;
}

}  // namespace corpus_detail

/// All builtin scenarios: three bare-RAM cases followed by the 34 arbiter
/// cases in test-case order.
inline const std::vector<Scenario>& builtin_scenarios() {
    static const std::vector<Scenario> all = [] {
        std::vector<Scenario> v;
        for (const auto& src : corpus_detail::ram_sources()) v.push_back(parse_scenario(src));
        for (const auto& src : corpus_detail::arbiter_sources()) v.push_back(parse_scenario(src));
        return v;
    }();
    return all;
}

/// Looks up a builtin by full name or by its leading tag ("tc07",
/// "ram2").
inline const Scenario* find_builtin(std::string_view name) {
    for (const auto& s : builtin_scenarios()) {
        if (s.name == name) return &s;
        const auto dash = s.name.find('-');
        if (dash != std::string::npos && std::string_view(s.name).substr(0, dash) == name) return &s;
    }
    return nullptr;
}

}  // namespace ramarb
