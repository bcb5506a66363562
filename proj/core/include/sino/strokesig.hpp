#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sino/error.hpp"
#include "sino/types.hpp"

namespace sino {

// The 36 calligraphic stroke classes of the CJK Strokes block (U+31C0..U+31E3),
// in block order. Codes are the lowercase pinyin abbreviations.
enum class StrokeType : std::uint8_t {
  t, wg, xg, bxg, sw, hzz, hzg, hp, hzwg, szwg, hzt, hzzp, hpwg, hzw, hzzz, n,
  h, s, p, sp, d, hz, hg, sz, swz, st, sg, pd, pz, tn, szz, swg, hxwg, hzzzg, pg, q,
};

inline constexpr std::size_t kStrokeTypeCount = 36;

std::string_view to_string(StrokeType type);
// Case-insensitive.
std::optional<StrokeType> parse_stroke_type(std::string_view code);

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

struct Stroke {
  StrokeType type = StrokeType::h;
  std::vector<Point> skeleton;  // at least two points

  const Point& first() const { return skeleton.front(); }
  const Point& last() const { return skeleton.back(); }
  bool operator==(const Stroke&) const = default;
};

// One component of a pair signature; std::nullopt is the marker E.
using SignatureValue = std::optional<double>;

struct StrokePairSignature {
  std::array<SignatureValue, 4> values;

  bool operator==(const StrokePairSignature&) const = default;
};

std::string to_string(const StrokePairSignature& sig);

struct CharSignature {
  std::vector<StrokeType> stroke_types;
  std::vector<StrokePairSignature> pair_sigs;  // consecutive pairs (i, i+1)

  std::size_t length() const noexcept { return stroke_types.size(); }
  bool operator==(const CharSignature&) const = default;
};

// Thrown for a stroke whose endpoints coincide. `index` is the position of the
// stroke in the sequence passed to the failing call.
class DegenerateStrokeError : public InputError {
 public:
  DegenerateStrokeError(std::string what, std::size_t index) : InputError(std::move(what)), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Relation of two strokes through the infinite lines joining their endpoints:
//   p1 = |x0 - x1| / |s1|        (intersection distance from the start of s1)
//   p2 = |x4 - x3| / |x2 - x1|   (bounding-box width ratio)
//   p3 = |y4 - y3| / |y2 - y1|   (bounding-box height ratio)
//   p4 = |x0 - x3| / |s2|        (intersection distance from the start of s2)
// Zero denominators and parallel lines give E.
StrokePairSignature pair_signature(const Stroke& first, const Stroke& second);

CharSignature char_signature(std::span<const Stroke> strokes);

inline constexpr double kDefaultInclusionTolerance = 0.05;

bool signature_values_match(const SignatureValue& a, const SignatureValue& b, double tolerance);

// True when `sub` occurs as a contiguous block of `super` at `offset`.
bool signature_occurs_at(const CharSignature& sub, const CharSignature& super, std::size_t offset, double tolerance);

using CharEdge = std::pair<Codepoint, Codepoint>;  // (subcharacter, character)

// All strict inclusions s -> c: the signature of s is a contiguous block of the
// signature of c and c has strictly more strokes.
std::set<CharEdge> detect_inclusions(const std::map<Codepoint, CharSignature>& signatures,
                                     double tolerance = kDefaultInclusionTolerance);

}  // namespace sino
