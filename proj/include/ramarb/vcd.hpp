// Value Change Dump export of a trace.
//
// Every recorded signal becomes a `wire` under one module scope. Buses are
// written as full-width `b<bits> <id>` records, scalars as `<bit><id>`.
// Channel states are 3-bit buses: 000 reset, 001 idle, 010 client1_read,
// 011 client2_read, 100 client1_write, 101 client2_write.

#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramarb/trace.hpp"

namespace ramarb {

/// Short printable identifier for the n-th variable ('!' .. '~', then
/// multi-character).
inline std::string vcd_identifier(std::size_t n) {
    constexpr std::size_t base = 94;
    std::string id;
    do {
        id.push_back(static_cast<char>('!' + n % base));
        n /= base;
    } while (n-- > 0);
    return id;
}

inline void write_vcd(const Trace& t, std::ostream& os, const std::string& scope = "ram_arbiter") {
    const auto sigs = trace_signals(t.target, t.params);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < sigs.size(); ++i) ids.push_back(vcd_identifier(i));

    auto record = [&](std::size_t i, const std::string& v) {
        if (sigs[i].width == 1)
            os << v << ids[i] << '\n';
        else
            os << 'b' << v << ' ' << ids[i] << '\n';
    };

    os << "$version ramarb $end\n";
    os << "$timescale 1ns $end\n";
    os << "$scope module " << scope << " $end\n";
    for (std::size_t i = 0; i < sigs.size(); ++i) {
        os << "$var wire " << sigs[i].width << ' ' << ids[i] << ' ' << sigs[i].name;
        if (sigs[i].width > 1) os << " [" << sigs[i].width - 1 << ":0]";
        os << " $end\n";
    }
    os << "$upscope $end\n";
    os << "$enddefinitions $end\n";

    std::vector<std::string> last;
    os << "#0\n$dumpvars\n";
    for (std::size_t i = 0; i < sigs.size(); ++i) {
        last.push_back(sigs[i].value(t.initial));
        record(i, last.back());
    }
    os << "$end\n";

    for (const auto& r : t.rows) {
        bool stamped = false;
        for (std::size_t i = 0; i < sigs.size(); ++i) {
            std::string v = sigs[i].value(r);
            if (v == last[i]) continue;
            if (!stamped) {
                os << '#' << r.time << '\n';
                stamped = true;
            }
            record(i, v);
            last[i] = std::move(v);
        }
    }
    if (!os) throw std::runtime_error("failed writing VCD output");
}

}  // namespace ramarb
