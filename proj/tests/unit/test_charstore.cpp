#include <gtest/gtest.h>

#include "sino/charstore.hpp"
#include "sino/error.hpp"

using namespace sino;

namespace {
constexpr Codepoint x = 0x4E00, y = 0x4E01, z = 0x4E02, w = 0x4E03;
}

TEST(Allographs, Singletons) {
  auto p = build_allograph_classes({}, {x, y, z});
  EXPECT_EQ(p.size(), 3u);
  const auto s = class_statistics(p.classes());
  EXPECT_EQ(s.count, 3u);
  EXPECT_DOUBLE_EQ(s.singleton_fraction, 1.0);
  EXPECT_EQ(s.max_size, 1u);
  EXPECT_DOUBLE_EQ(s.mean_size, 1.0);
  EXPECT_EQ(p.get(p.class_of(y)).members, std::vector<Codepoint>{y});
  EXPECT_NE(p.class_of(x), p.class_of(z));
}

TEST(Allographs, ChainMerges) {
  std::vector<VariantPair> pairs{{x, y}, {y, z}};
  auto p = build_allograph_classes(pairs, {x, y, z, w});
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.class_of(x), p.class_of(z));
  EXPECT_EQ(p.get(p.class_of(x)).members, (std::vector<Codepoint>{x, y, z}));
  EXPECT_EQ(p.class_of(x), 0u);
  EXPECT_EQ(p.class_of(w), 1u);
  const auto s = class_statistics(p.classes());
  EXPECT_EQ(s.count, 2u);
  EXPECT_DOUBLE_EQ(s.singleton_fraction, 0.5);
  EXPECT_EQ(s.max_size, 3u);
  EXPECT_DOUBLE_EQ(s.mean_size, 2.0);
}

TEST(Allographs, FiveMemberVariantChain) {
  // 糸 糹 纟 丝 絲
  std::vector<Codepoint> v{0x7CF8, 0x7CF9, 0x7E9F, 0x4E1D, 0x7D72};
  std::vector<VariantPair> pairs;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) pairs.emplace_back(v[i], v[i + 1]);
  auto p = build_allograph_classes(pairs, std::set<Codepoint>(v.begin(), v.end()));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.get(0).members.size(), 5u);
}

TEST(Allographs, RepresentativeByFrequency) {
  std::vector<VariantPair> pairs{{x, y}};
  FrequencyList freq({{y, 0.6}, {x, 0.4}}, 10);
  auto p = build_allograph_classes(pairs, {x, y}, &freq);
  EXPECT_EQ(p.get(0).representative, y);
  EXPECT_EQ(build_allograph_classes(pairs, {x, y}).get(0).representative, x);
}

TEST(Allographs, UnknownCodepointInPair) {
  std::vector<VariantPair> pairs{{x, 0x9999}};
  EXPECT_THROW(build_allograph_classes(pairs, {x}), InputError);
  auto p = build_allograph_classes({}, {x});
  EXPECT_THROW(p.class_of(y), NotFoundError);
  EXPECT_THROW(class_statistics({}), InputError);
}

TEST(Allographs, PartitionValidation) {
  EXPECT_THROW(AllographPartition({{1, {x}, x}}), InputError);
  EXPECT_THROW(AllographPartition({{0, {x}, x}, {1, {x, y}, y}}), InputError);
}

TEST(Readings, Validation) {
  EXPECT_NO_THROW(validate_reading({Language::mandarin, {"ren2"}}));
  EXPECT_THROW(validate_reading({Language::mandarin, {"ren2", "min2"}}), InputError);
  EXPECT_THROW(validate_reading({Language::japanese_on, {}}), InputError);
  EXPECT_THROW(validate_reading({Language::japanese_kun, std::vector<std::string>(13, "a")}), InputError);
  EXPECT_NO_THROW(validate_reading({Language::japanese_kun, std::vector<std::string>(12, "a")}));
}

TEST(CharStore, ReadingsAndRadicals) {
  CharStore store;
  store.add_reading(x, {Language::japanese_on, {"ni", "n"}});
  store.add_reading(x, {Language::japanese_on, {"ni", "n"}});
  store.add_reading(x, {Language::mandarin, {"ren2"}});
  EXPECT_EQ(store.readings(x, Language::japanese_on).size(), 1u);
  EXPECT_TRUE(store.has_reading(x, Language::mandarin));
  EXPECT_FALSE(store.has_reading(x, Language::japanese_kun));
  store.set_radical(x, 9);
  EXPECT_EQ(store.radical(x), 9);
  EXPECT_THROW(store.set_radical(x, 215), InputError);
  EXPECT_THROW(store.at(y), NotFoundError);
  EXPECT_EQ(store.codepoints(), std::set<Codepoint>{x});
}
