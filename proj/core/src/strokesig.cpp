#include "sino/strokesig.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>


namespace sino {

namespace {

constexpr std::array<std::string_view, kStrokeTypeCount> kStrokeCodes = {
    "t",  "wg", "xg", "bxg", "sw", "hzz", "hzg", "hp", "hzwg", "szwg", "hzt", "hzzp",
    "hpwg", "hzw", "hzzz", "n", "h", "s", "p", "sp", "d", "hz", "hg", "sz",
    "swz", "st", "sg", "pd", "pz", "tn", "szz", "swg", "hxwg", "hzzzg", "pg", "q",
};

// Relative to the larger of the two scales involved.
constexpr double kZeroTolerance = 1e-12;

double length(const Point& a, const Point& b) { return std::hypot(b.x - a.x, b.y - a.y); }

SignatureValue ratio(double num, double den, double scale) {
  if (std::abs(den) <= kZeroTolerance * std::max(scale, 1.0)) return std::nullopt;
  return num / den;
}

void check_stroke(const Stroke& stroke, std::size_t index) {
  if (stroke.skeleton.size() < 2) {
    throw DegenerateStrokeError("stroke " + std::to_string(index) + " has fewer than two skeleton points", index);
  }
  if (stroke.first() == stroke.last()) {
    throw DegenerateStrokeError("stroke " + std::to_string(index) + " has coincident endpoints", index);
  }
}

}  // namespace

std::string_view to_string(StrokeType type) { return kStrokeCodes[static_cast<std::size_t>(type)]; }

std::optional<StrokeType> parse_stroke_type(std::string_view code) {
  std::string lower(code);
  for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (std::size_t i = 0; i < kStrokeCodes.size(); ++i) {
    if (kStrokeCodes[i] == lower) return static_cast<StrokeType>(i);
  }
  return std::nullopt;
}

std::string to_string(const StrokePairSignature& sig) {
  std::string out = "(";
  for (std::size_t i = 0; i < sig.values.size(); ++i) {
    if (i) out += ",";
    if (sig.values[i]) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", *sig.values[i]);
      out += buf;
    } else {
      out += "E";
    }
  }
  return out + ")";
}

StrokePairSignature pair_signature(const Stroke& first, const Stroke& second) {
  check_stroke(first, 0);
  check_stroke(second, 1);
  const Point& p1 = first.first();
  const Point& p2 = first.last();
  const Point& p3 = second.first();
  const Point& p4 = second.last();

  const double len1 = length(p1, p2);
  const double len2 = length(p3, p4);
  const double scale = std::max(len1, len2);

  StrokePairSignature sig;
  sig.values[1] = ratio(std::abs(p4.x - p3.x), std::abs(p2.x - p1.x), scale);
  sig.values[2] = ratio(std::abs(p4.y - p3.y), std::abs(p2.y - p1.y), scale);

  // Intersection of p1 + t (p2 - p1) with p3 + u (p4 - p3).
  const double dx1 = p2.x - p1.x, dy1 = p2.y - p1.y;
  const double dx2 = p4.x - p3.x, dy2 = p4.y - p3.y;
  const double cross = dx1 * dy2 - dy1 * dx2;
  if (std::abs(cross) > kZeroTolerance * len1 * len2) {
    const double t = ((p3.x - p1.x) * dy2 - (p3.y - p1.y) * dx2) / cross;
    const Point x0{p1.x + t * dx1, p1.y + t * dy1};
    sig.values[0] = length(x0, p1) / len1;
    sig.values[3] = length(x0, p3) / len2;
  }
  return sig;
}

CharSignature char_signature(std::span<const Stroke> strokes) {
  if (strokes.empty()) throw InputError("char_signature: empty stroke list");
  CharSignature sig;
  sig.stroke_types.reserve(strokes.size());
  for (std::size_t i = 0; i < strokes.size(); ++i) {
    check_stroke(strokes[i], i);
    sig.stroke_types.push_back(strokes[i].type);
  }
  for (std::size_t i = 0; i + 1 < strokes.size(); ++i) sig.pair_sigs.push_back(pair_signature(strokes[i], strokes[i + 1]));
  return sig;
}

bool signature_values_match(const SignatureValue& a, const SignatureValue& b, double tolerance) {
  if (!a || !b) return !a && !b;
  return std::abs(*a - *b) <= tolerance;
}

bool signature_occurs_at(const CharSignature& sub, const CharSignature& super, std::size_t offset, double tolerance) {
  if (offset + sub.length() > super.length()) return false;
  for (std::size_t i = 0; i < sub.length(); ++i) {
    if (sub.stroke_types[i] != super.stroke_types[offset + i]) return false;
  }
  for (std::size_t i = 0; i < sub.pair_sigs.size(); ++i) {
    const auto& a = sub.pair_sigs[i].values;
    const auto& b = super.pair_sigs[offset + i].values;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!signature_values_match(a[k], b[k], tolerance)) return false;
    }
  }
  return true;
}

std::set<CharEdge> detect_inclusions(const std::map<Codepoint, CharSignature>& signatures, double tolerance) {
  if (!(tolerance >= 0.0)) throw InputError("detect_inclusions: tolerance must be nonnegative");

  // Every stroke position of every character, keyed by stroke type, so a
  // candidate s only visits characters containing its first stroke type.
  std::array<std::vector<std::pair<const std::pair<const Codepoint, CharSignature>*, std::size_t>>, kStrokeTypeCount>
      positions;
  for (const auto& entry : signatures) {
    const auto& types = entry.second.stroke_types;
    for (std::size_t i = 0; i < types.size(); ++i) positions[static_cast<std::size_t>(types[i])].emplace_back(&entry, i);
  }

  std::set<CharEdge> edges;
  for (const auto& [sub_cp, sub] : signatures) {
    if (sub.length() == 0) continue;
    for (const auto& [entry, offset] : positions[static_cast<std::size_t>(sub.stroke_types.front())]) {
      const auto& [super_cp, super] = *entry;
      if (super_cp == sub_cp || super.length() <= sub.length()) continue;
      if (edges.contains({sub_cp, super_cp})) continue;
      if (signature_occurs_at(sub, super, offset, tolerance)) edges.emplace(sub_cp, super_cp);
    }
  }
  return edges;
}

}  // namespace sino
