// Two-valued logic levels, fixed-width binary words and design generics
// shared by every part of the RAM arbiter simulator.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ramarb {

/// Binary logic level. There is no unknown or high-impedance value.
enum class Level : std::uint8_t { low = 0, high = 1 };

constexpr Level to_level(bool b) noexcept { return b ? Level::high : Level::low; }
constexpr bool is_high(Level l) noexcept { return l == Level::high; }
constexpr char level_char(Level l) noexcept { return is_high(l) ? '1' : '0'; }

/// Raised for malformed binary literals. `position` is the zero-based index
/// of the first offending character, or the index where text and width
/// diverge on a length mismatch.
class WordParseError : public std::invalid_argument {
public:
    WordParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Fixed-width bus value, most-significant bit first when rendered.
/// Widths up to 64 bits are supported.
class Word {
public:
    static constexpr unsigned max_width = 64;

    Word() = default;

    /// Zero word of the given width.
    explicit Word(unsigned width) : Word(width, 0) {}

    /// Word holding the low `width` bits of `value`.
    Word(unsigned width, std::uint64_t value) : width_(width) {
        if (width == 0 || width > max_width)
            throw std::invalid_argument("word width must be in [1, 64], got " + std::to_string(width));
        bits_ = value & mask(width);
    }

    unsigned width() const noexcept { return width_; }

    /// Unsigned big-endian interpretation, in [0, 2^width).
    std::uint64_t value() const noexcept { return bits_; }

    Level bit(unsigned i) const noexcept { return to_level((bits_ >> i) & 1u); }

    bool is_zero() const noexcept { return bits_ == 0; }

    std::string to_string() const {
        std::string s(width_, '0');
        for (unsigned i = 0; i < width_; ++i)
            if ((bits_ >> (width_ - 1 - i)) & 1u) s[i] = '1';
        return s;
    }

    friend bool operator==(const Word&, const Word&) = default;

private:
    static constexpr std::uint64_t mask(unsigned width) noexcept {
        return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
    }

    std::uint64_t bits_ = 0;
    unsigned width_ = 0;
};

/// Parses a binary literal such as "1010" of exactly `width` characters.
inline Word parse_word(std::string_view text, unsigned width) {
    if (width == 0 || width > Word::max_width)
        throw WordParseError("word width must be in [1, 64], got " + std::to_string(width), 0);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1')
            throw WordParseError("illegal character '" + std::string(1, c) + "' at position " + std::to_string(i),
                                 i);
        if (i < width) v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    }
    if (text.size() != width)
        throw WordParseError("expected " + std::to_string(width) + " binary digits, got " +
                                 std::to_string(text.size()) + " (mismatch at position " +
                                 std::to_string(std::min<std::size_t>(text.size(), width)) + ")",
                             std::min<std::size_t>(text.size(), width));
    return Word(width, v);
}

inline std::uint64_t word_to_index(const Word& w) noexcept { return w.value(); }

/// Design generics: address/data bus widths and the client1 output register
/// option.
struct Params {
    unsigned addr_width = 4;
    unsigned data_width = 8;
    bool registered_output = false;

    static constexpr unsigned max_addr_width = 20;

    std::uint64_t ram_depth() const noexcept { return std::uint64_t{1} << addr_width; }

    void validate() const {
        if (addr_width < 1 || addr_width > max_addr_width)
            throw std::invalid_argument("addr_width must be in [1, " + std::to_string(max_addr_width) + "], got " +
                                        std::to_string(addr_width));
        if (data_width < 1 || data_width > Word::max_width)
            throw std::invalid_argument("data_width must be in [1, 64], got " + std::to_string(data_width));
    }

    Word zero_addr() const { return Word(addr_width); }
    Word zero_data() const { return Word(data_width); }

    friend bool operator==(const Params&, const Params&) = default;
};

}  // namespace ramarb
