// Minimal VCD reader used to check exported waveforms. It deliberately
// shares no code with the writer: it tokenizes the file, maps identifier
// codes to names, and replays value changes into per-signal histories.

#pragma once

#include <cstdint>
#include <istream>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vcdtest {

struct Var {
    std::string name;
    unsigned width = 0;
};

struct Dump {
    std::string timescale;
    std::vector<Var> vars;  // declaration order
    // name -> list of (time, value) changes, first entry from $dumpvars
    std::map<std::string, std::vector<std::pair<std::uint64_t, std::string>>> changes;

    /// Value in effect at `time` (the last change at or before it).
    std::string value_at(const std::string& name, std::uint64_t time) const {
        const auto& h = changes.at(name);
        std::string v;
        for (const auto& [t, val] : h) {
            if (t > time) break;
            v = val;
        }
        if (v.empty()) throw std::runtime_error("no value for " + name);
        return v;
    }
};

inline Dump read_vcd(std::istream& is) {
    std::vector<std::string> tok{std::istream_iterator<std::string>(is), std::istream_iterator<std::string>()};
    Dump d;
    std::map<std::string, std::string> id_to_name;
    std::size_t i = 0;
    auto until_end = [&] {
        std::vector<std::string> body;
        while (i < tok.size() && tok[i] != "$end") body.push_back(tok[i++]);
        if (i == tok.size()) throw std::runtime_error("unterminated section");
        ++i;
        return body;
    };
    // Header.
    while (i < tok.size()) {
        const std::string t = tok[i++];
        if (t == "$enddefinitions") {
            until_end();
            break;
        }
        auto body = until_end();
        if (t == "$timescale") {
            for (const auto& b : body) d.timescale += b;
        } else if (t == "$var") {
            if (body.size() < 4) throw std::runtime_error("short $var");
            Var v{body[3], static_cast<unsigned>(std::stoul(body[1]))};
            id_to_name[body[2]] = v.name;
            d.vars.push_back(v);
            d.changes[v.name];
        }
    }
    // Value changes.
    std::uint64_t now = 0;
    auto set = [&](const std::string& id, std::string value) {
        auto it = id_to_name.find(id);
        if (it == id_to_name.end()) throw std::runtime_error("unknown id " + id);
        d.changes[it->second].emplace_back(now, std::move(value));
    };
    while (i < tok.size()) {
        const std::string t = tok[i++];
        if (t == "$dumpvars" || t == "$end") continue;
        if (t[0] == '#') {
            now = std::stoull(t.substr(1));
        } else if (t[0] == 'b' || t[0] == 'B') {
            if (i == tok.size()) throw std::runtime_error("vector change without id");
            set(tok[i++], t.substr(1));
        } else if (t[0] == '0' || t[0] == '1' || t[0] == 'x' || t[0] == 'z') {
            set(t.substr(1), t.substr(0, 1));
        } else {
            throw std::runtime_error("unexpected token " + t);
        }
    }
    return d;
}

inline Dump read_vcd(const std::string& text) {
    std::istringstream is(text);
    return read_vcd(is);
}

}  // namespace vcdtest
