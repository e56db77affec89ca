#include <gtest/gtest.h>

#include "ramarb/signal.hpp"

using namespace ramarb;

TEST(Word, RendersMsbFirst) {
    EXPECT_EQ(Word(4, 0b1010).to_string(), "1010");
    EXPECT_EQ(Word(8, 0b10100011).to_string(), "10100011");
    EXPECT_EQ(Word(1, 1).to_string(), "1");
}

TEST(Word, KeepsOnlyLowBits) {
    EXPECT_EQ(Word(4, 0xFFu).value(), 0xFu);
    EXPECT_EQ(Word(64, ~0ull).value(), ~0ull);
    EXPECT_EQ(Word(64, ~0ull).to_string(), std::string(64, '1'));
}

TEST(Word, RejectsBadWidth) {
    EXPECT_THROW(Word(0, 0), std::invalid_argument);
    EXPECT_THROW(Word(65, 0), std::invalid_argument);
}

TEST(Word, BitIndexIsLsbZero) {
    const Word w(4, 0b0010);
    EXPECT_EQ(w.bit(0), Level::low);
    EXPECT_EQ(w.bit(1), Level::high);
}

TEST(Word, EqualityIncludesWidth) {
    EXPECT_EQ(Word(4, 3), Word(4, 3));
    EXPECT_NE(Word(4, 3), Word(5, 3));
}

TEST(ParseWord, KnownLiterals) {
    EXPECT_EQ(parse_word("1010", 4).value(), 10u);
    EXPECT_EQ(parse_word("11100011", 8).value(), 0xE3u);
    EXPECT_EQ(parse_word("00000000", 8), Word(8));
}

TEST(ParseWord, IllegalCharacterReportsPosition) {
    try {
        parse_word("10x1", 4);
        FAIL() << "expected WordParseError";
    } catch (const WordParseError& e) {
        EXPECT_EQ(e.position(), 2u);
    }
}

TEST(ParseWord, LengthMismatchReportsDivergence) {
    try {
        parse_word("101", 4);
        FAIL();
    } catch (const WordParseError& e) {
        EXPECT_EQ(e.position(), 3u);
    }
    try {
        parse_word("10101", 4);
        FAIL();
    } catch (const WordParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
}

TEST(ParseWord, CharacterErrorsWinOverLength) {
    try {
        parse_word("1z", 4);
        FAIL();
    } catch (const WordParseError& e) {
        EXPECT_EQ(e.position(), 1u);
    }
}

TEST(ParseWord, EmptyText) { EXPECT_THROW(parse_word("", 1), WordParseError); }

TEST(ParseWord, ExhaustiveRoundTripUpToEightBits) {
    for (unsigned w = 1; w <= 8; ++w) {
        for (std::uint64_t v = 0; v < (1u << w); ++v) {
            const Word word(w, v);
            const std::string s = word.to_string();
            ASSERT_EQ(s.size(), w);
            ASSERT_EQ(parse_word(s, w), word) << s;
        }
    }
}

TEST(ParseWord, WideRoundTrip) {
    const std::string s = "1000000000000000000000000000000000000000000000000000000000000001";
    EXPECT_EQ(parse_word(s, 64).to_string(), s);
}

TEST(Params, Limits) {
    Params p;
    EXPECT_NO_THROW(p.validate());
    EXPECT_EQ(p.ram_depth(), 16u);
    p.addr_width = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p.addr_width = 21;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p.addr_width = 20;
    EXPECT_NO_THROW(p.validate());
    p.data_width = 65;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p.data_width = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Level, Helpers) {
    EXPECT_EQ(to_level(true), Level::high);
    EXPECT_EQ(level_char(Level::low), '0');
    EXPECT_FALSE(is_high(Level::low));
}
