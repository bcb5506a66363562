#include "sino/features.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sino/error.hpp"
#include "sino/phonetics.hpp"
#include "sino/semantics.hpp"

namespace sino {

void Vocabulary::add(ClassId id, Provenance provenance) { entries_.try_emplace(id, provenance); }

std::size_t Vocabulary::count(Provenance provenance) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [&](const auto& e) { return e.second == provenance; }));
}

FeatureSet baseline_vectors(std::span<const Document> corpus, const AllographPartition& classes,
                            std::size_t min_count) {
  if (corpus.empty()) throw InputError("baseline_vectors: empty corpus");
  FeatureSet out;
  std::map<ClassId, std::size_t> corpus_counts;
  std::vector<std::map<Codepoint, std::size_t>> doc_counts(corpus.size());
  std::vector<std::size_t> doc_lengths(corpus.size(), 0);
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    for (char32_t cp : corpus[d].text) {
      if (!classes.contains(cp)) {
        ++out.unmapped_characters;
        continue;
      }
      ++doc_counts[d][cp];
      ++doc_lengths[d];
      ++corpus_counts[classes.class_of(cp)];
    }
  }
  for (const auto& [id, count] : corpus_counts) {
    if (count >= min_count) out.vocabulary.add(id, Provenance::baseline);
  }
  if (out.vocabulary.size() == 0) {
    throw DataError("baseline_vectors: no class occurs at least " + std::to_string(min_count) + " times");
  }

  out.labels.reserve(corpus.size());
  out.weights.resize(corpus.size());
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    out.labels.push_back(corpus[d].label);
    if (doc_lengths[d] == 0) {
      ++out.empty_documents;
      continue;
    }
    auto& vec = out.weights[d];
    for (const auto& [cp, count] : doc_counts[d]) {
      const ClassId id = classes.class_of(cp);
      if (!out.vocabulary.contains(id)) continue;
      const double f = static_cast<double>(count) / static_cast<double>(doc_lengths[d]);
      auto [it, inserted] = vec.try_emplace(id, f);
      if (!inserted) it->second = std::max(it->second, f);
    }
  }
  return out;
}

std::vector<SparseVector> l2_normalized(std::span<const SparseVector> vectors) {
  std::vector<SparseVector> out(vectors.begin(), vectors.end());
  for (auto& v : out) {
    double sq = 0.0;
    for (const auto& [_, w] : v) sq += w * w;
    if (sq <= 0.0) continue;
    const double norm = std::sqrt(sq);
    for (auto& [_, w] : v) w /= norm;
  }
  return out;
}

EdgeWeight semanticity_weight(const InclusionGraph& g) {
  return [&g](NodeId sub, NodeId super) -> std::optional<double> {
    const Edge e{sub, super};
    if (!g.has_edge(e)) return std::nullopt;
    return g.attributes(e).semanticity;
  };
}

EdgeWeight phoneticity_weight(const InclusionGraph& g, Language lang) {
  return [&g, li = index_of(lang)](NodeId sub, NodeId super) -> std::optional<double> {
    const Edge e{sub, super};
    if (!g.has_edge(e)) return std::nullopt;
    return g.attributes(e).phoneticity[li];
  };
}

ChainMap semantic_chains(const InclusionGraph& g, const Vocabulary& vocabulary) {
  ChainMap chains;
  for (const auto& [id, _] : vocabulary.entries()) {
    if (g.contains(id)) chains.emplace(id, most_semantic_chain(g, id));
  }
  return chains;
}

ChainMap phonetic_chains(const InclusionGraph& g, const Vocabulary& vocabulary, Language lang) {
  ChainMap chains;
  for (const auto& [id, _] : vocabulary.entries()) {
    if (g.contains(id)) chains.emplace(id, least_phonetic_chain(g, id, lang));
  }
  return chains;
}

namespace {

// Adds chain increments computed from `source` weights into `target`.
void apply_chains(const FeatureSet& source, FeatureSet& target, const ChainMap& chains, const EdgeWeight& weight,
                  std::set<ClassId>& touched) {
  for (std::size_t d = 0; d < source.weights.size(); ++d) {
    for (const auto& [id, w] : source.weights[d]) {
      if (!source.vocabulary.contains(id) || source.vocabulary.entries().at(id) != Provenance::baseline) continue;
      auto chain = chains.find(id);
      if (chain == chains.end()) continue;
      const auto& nodes = chain->second;
      for (std::size_t i = 1; i < nodes.size(); ++i) {
        const auto edge_weight = weight(nodes[i], nodes[i - 1]);
        if (!edge_weight) continue;
        const double increment = *edge_weight * w / static_cast<double>(i);
        if (!(increment > 0.0)) continue;
        target.weights[d][nodes[i]] += increment;
        target.vocabulary.add(nodes[i], Provenance::added_by_chain);
        touched.insert(nodes[i]);
      }
    }
  }
}

AugmentStats stats_for(const FeatureSet& baseline, const FeatureSet& augmented, const std::set<ClassId>& touched) {
  AugmentStats stats;
  for (ClassId id : touched) {
    if (baseline.vocabulary.contains(id)) ++stats.modified;
  }
  stats.added = augmented.vocabulary.size() - baseline.vocabulary.size();
  return stats;
}

}  // namespace

FeatureSet augment_chains(const FeatureSet& input, const ChainMap& chains, const EdgeWeight& weight,
                          AugmentStats* stats) {
  FeatureSet out = input;
  std::set<ClassId> touched;
  apply_chains(input, out, chains, weight, touched);
  if (stats) *stats = stats_for(input, out, touched);
  return out;
}

FeatureSet augment_strategy1(const FeatureSet& baseline, const ChainMap& semantic_chains, const EdgeWeight& semanticity,
                             AugmentStats* stats) {
  return augment_chains(baseline, semantic_chains, semanticity, stats);
}

FeatureSet augment_strategy2(const FeatureSet& baseline, const ChainMap& semantic_chains,
                             const ChainMap& phonetic_chains, const EdgeWeight& semanticity,
                             const EdgeWeight& phoneticity, bool phonetic_only, AugmentStats* stats) {
  FeatureSet out = baseline;
  std::set<ClassId> touched;
  if (!phonetic_only) apply_chains(baseline, out, semantic_chains, semanticity, touched);
  apply_chains(baseline, out, phonetic_chains, phoneticity, touched);
  if (stats) *stats = stats_for(baseline, out, touched);
  return out;
}

}  // namespace sino
