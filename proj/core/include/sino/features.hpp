#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sino/charstore.hpp"
#include "sino/graphcore.hpp"
#include "sino/types.hpp"

namespace sino {

struct Document {
  std::string label;
  std::u32string text;
};

enum class Provenance : std::uint8_t { baseline, added_by_chain };

class Vocabulary {
 public:
  bool contains(ClassId id) const { return entries_.contains(id); }
  // Existing entries keep their provenance.
  void add(ClassId id, Provenance provenance);
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t count(Provenance provenance) const;
  const std::map<ClassId, Provenance>& entries() const noexcept { return entries_; }

  bool operator==(const Vocabulary&) const = default;

 private:
  std::map<ClassId, Provenance> entries_;
};

using SparseVector = std::map<ClassId, double>;

// Per-document class weights before normalization.
struct FeatureSet {
  Vocabulary vocabulary;
  std::vector<std::string> labels;
  std::vector<SparseVector> weights;
  std::size_t empty_documents = 0;    // documents without any mapped character
  std::size_t unmapped_characters = 0;  // characters outside the partition, skipped

  bool operator==(const FeatureSet&) const = default;
};

// w(c) per document = max over members of their relative frequency in the
// document; classes with corpus count below `min_count` are dropped. Throws
// InputError on an empty corpus and DataError when nothing survives the filter.
FeatureSet baseline_vectors(std::span<const Document> corpus, const AllographPartition& classes,
                            std::size_t min_count = 10);

std::vector<SparseVector> l2_normalized(std::span<const SparseVector> vectors);

using ChainMap = std::map<ClassId, std::vector<NodeId>>;
// Weight of an edge (sub, super); std::nullopt contributes nothing.
using EdgeWeight = std::function<std::optional<double>(NodeId sub, NodeId super)>;

EdgeWeight semanticity_weight(const InclusionGraph& g);
EdgeWeight phoneticity_weight(const InclusionGraph& g, Language lang);

// Chains for every vocabulary entry of `features`.
ChainMap semantic_chains(const InclusionGraph& g, const Vocabulary& vocabulary);
ChainMap phonetic_chains(const InclusionGraph& g, const Vocabulary& vocabulary, Language lang);

struct AugmentStats {
  std::size_t modified = 0;  // existing vocabulary entries that received weight
  std::size_t added = 0;     // entries introduced by chains
};

// For each document and in-vocabulary class c with chain (c = s0, s1, ..., sL):
// feature s_i += (1/i) * weight(s_{i-1} -> s_i) * w(c), adding s_i to the
// vocabulary when needed. Increments are computed from the input weights.
FeatureSet augment_chains(const FeatureSet& input, const ChainMap& chains, const EdgeWeight& weight,
                          AugmentStats* stats = nullptr);

// Most-semantic-chain augmentation.
FeatureSet augment_strategy1(const FeatureSet& baseline, const ChainMap& semantic_chains, const EdgeWeight& semanticity,
                             AugmentStats* stats = nullptr);

// Strategy 1 followed by least-phonetic-chain augmentation driven by the
// baseline weights. `phonetic_only` skips the semantic step.
FeatureSet augment_strategy2(const FeatureSet& baseline, const ChainMap& semantic_chains,
                             const ChainMap& phonetic_chains, const EdgeWeight& semanticity,
                             const EdgeWeight& phoneticity, bool phonetic_only = false, AugmentStats* stats = nullptr);

}  // namespace sino
