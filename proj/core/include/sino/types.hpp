#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sino {

/// A Unicode scalar value.
using Codepoint = char32_t;

/// Identifier of an allographic class. Dense, assigned in ascending order of
/// each class's smallest member codepoint.
using ClassId = std::uint32_t;

/// Node identifier inside an InclusionGraph. Character-level graphs use
/// codepoints, class-level graphs use ClassId.
using NodeId = std::uint32_t;

enum class Language : std::uint8_t { mandarin = 0, japanese_on = 1, japanese_kun = 2 };

inline constexpr std::size_t kLanguageCount = 3;
inline constexpr std::array<Language, kLanguageCount> kAllLanguages = {
    Language::mandarin, Language::japanese_on, Language::japanese_kun};

constexpr std::size_t index_of(Language lang) { return static_cast<std::size_t>(lang); }

/// File-format tag: cmn, ja_on, ja_kun.
std::string_view to_string(Language lang);
std::optional<Language> parse_language(std::string_view tag);

/// "4E00" style, uppercase, at least four digits.
std::string format_codepoint(Codepoint cp);
/// Accepts "4E00", "4e00" and "U+4E00".
std::optional<Codepoint> parse_codepoint(std::string_view text);

// Shortest round-trip decimal representation.
std::string format_double(double value);
// Whole-string parse; std::nullopt on trailing garbage.
std::optional<double> parse_double(std::string_view text);

}  // namespace sino
