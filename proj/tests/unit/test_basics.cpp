#include <gtest/gtest.h>

#include "sino/error.hpp"
#include "sino/types.hpp"
#include "sino/utf8.hpp"

using namespace sino;

TEST(Codepoint, FormatAndParse) {
  EXPECT_EQ(format_codepoint(0x4E00), "4E00");
  EXPECT_EQ(format_codepoint(0x41), "0041");
  EXPECT_EQ(format_codepoint(0x20000), "20000");
  EXPECT_EQ(parse_codepoint("4e00"), Codepoint{0x4E00});
  EXPECT_EQ(parse_codepoint("U+8A00"), Codepoint{0x8A00});
  EXPECT_FALSE(parse_codepoint("xyz"));
  EXPECT_FALSE(parse_codepoint(""));
  EXPECT_FALSE(parse_codepoint("110000"));
}

TEST(Doubles, ShortestRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, 0.5965735902799727, 1e-300, 123456.789}) {
    EXPECT_EQ(parse_double(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_FALSE(parse_double("1.5x"));
  EXPECT_FALSE(parse_double(""));
}

TEST(Language, Tags) {
  for (auto lang : kAllLanguages) EXPECT_EQ(parse_language(to_string(lang)), lang);
  EXPECT_FALSE(parse_language("fr"));
}

TEST(Utf8, RoundTrip) {
  const std::string text = "言語 a \xF0\xA0\x80\x80";
  const auto decoded = utf8::decode(text);
  ASSERT_EQ(decoded.size(), 6u);
  EXPECT_EQ(decoded[0], U'言');
  EXPECT_EQ(decoded[5], Codepoint{0x20000});
  EXPECT_EQ(utf8::encode(decoded), text);
}

TEST(Utf8, RejectsMalformed) {
  EXPECT_THROW(utf8::decode("\xff"), InputError);
  EXPECT_THROW(utf8::decode("\xe8\xa8"), InputError);
  EXPECT_THROW(utf8::decode("\xc0\x80"), InputError);  // overlong
  EXPECT_THROW(utf8::decode("\xed\xa0\x80"), InputError);  // surrogate
}
