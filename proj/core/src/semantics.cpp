#include "sino/semantics.hpp"

#include <algorithm>
#include <cmath>

#include "sino/error.hpp"
#include "sino/utf8.hpp"

namespace sino {

void SynsetStore::add_synset(Synset synset) {
  if (synset.id.empty()) throw InputError("synset with empty id");
  if (synset.lemmas.empty()) throw InputError("synset " + synset.id + " has no lemmas");
  if (index_.contains(synset.id)) throw InputError("duplicate synset id " + synset.id);
  index_.emplace(synset.id, synsets_.size());
  std::vector<std::string> words;
  for (const auto& lemma : synset.lemmas) {
    if (lemma.empty()) throw InputError("synset " + synset.id + " has an empty lemma");
    if (std::find(words.begin(), words.end(), lemma) == words.end()) words.push_back(lemma);
  }
  words_.push_back(std::move(words));
  synsets_.push_back(std::move(synset));
}

void SynsetStore::add_relation(SemRelation relation) {
  if (!contains(relation.source) || !contains(relation.target)) {
    throw InputError("relation " + relation.source + " -" + relation.type + "-> " + relation.target +
                     " references an unknown synset");
  }
  if (relation_set_.insert(relation).second) relations_.push_back(std::move(relation));
}

void SynsetStore::add_membership(const std::string& word, const std::string& synset_id) {
  auto& words = words_[index_of(synset_id)];
  if (std::find(words.begin(), words.end(), word) == words.end()) words.push_back(word);
}

std::size_t SynsetStore::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw NotFoundError("unknown synset " + id);
  return it->second;
}

const Synset& SynsetStore::synset(const std::string& id) const { return synsets_[index_of(id)]; }

const std::vector<std::string>& SynsetStore::words(const std::string& id) const { return words_[index_of(id)]; }

std::vector<std::string> SynsetStore::synsets_of_word(const std::string& word) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < synsets_.size(); ++i) {
    if (std::find(words_[i].begin(), words_[i].end(), word) != words_[i].end()) out.push_back(synsets_[i].id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassAnnotations annotate_classes(const AllographPartition& classes, const SynsetStore& synsets,
                                  const std::map<Codepoint, std::vector<std::string>>& glosses) {
  std::unordered_map<std::string, std::set<std::string>> by_word;
  std::unordered_map<Codepoint, std::set<std::string>> by_char;
  for (const auto& s : synsets.synsets()) {
    for (const auto& word : synsets.words(s.id)) {
      by_word[word].insert(s.id);
      for (char32_t cp : utf8::decode(word)) by_char[cp].insert(s.id);
    }
  }

  ClassAnnotations out;
  for (const auto& cls : classes.classes()) {
    std::set<std::string> found;
    for (Codepoint cp : cls.members) {
      if (auto g = glosses.find(cp); g != glosses.end()) {
        for (const auto& word : g->second) {
          if (auto w = by_word.find(word); w != by_word.end()) found.insert(w->second.begin(), w->second.end());
        }
      }
      if (auto c = by_char.find(cp); c != by_char.end()) found.insert(c->second.begin(), c->second.end());
    }
    if (!found.empty()) out.emplace(cls.id, std::move(found));
  }
  return out;
}

SemanticCounter::SemanticCounter(const SynsetStore& synsets, std::optional<std::set<std::string>> relation_types) {
  const auto& all = synsets.synsets();
  out_.resize(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::map<Codepoint, std::uint64_t> per_char;
    for (const auto& word : synsets.words(all[i].id)) {
      auto chars = utf8::decode(word);
      std::sort(chars.begin(), chars.end());
      chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
      for (char32_t cp : chars) ++per_char[cp];
    }
    for (const auto& [cp, n] : per_char) occurrences_[cp].emplace_back(i, n);
  }
  for (const auto& r : synsets.relations()) {
    if (relation_types && !relation_types->contains(r.type)) continue;
    out_[synsets.index_of(r.source)].push_back(synsets.index_of(r.target));
  }
}

std::unordered_map<std::size_t, std::uint64_t> SemanticCounter::target_weights(const AllographClass& super) const {
  std::unordered_map<std::size_t, std::uint64_t> weights;
  for (Codepoint c : super.members) {
    auto it = occurrences_.find(c);
    if (it == occurrences_.end()) continue;
    for (const auto& [synset, n] : it->second) weights[synset] += n;
  }
  return weights;
}

std::uint64_t SemanticCounter::count_f1(const AllographClass& sub, const AllographClass& super) const {
  const auto targets = target_weights(super);
  if (targets.empty()) return 0;
  std::uint64_t total = 0;
  for (Codepoint s : sub.members) {
    auto it = occurrences_.find(s);
    if (it == occurrences_.end()) continue;
    for (const auto& [source, n1] : it->second) {
      for (std::size_t target : out_[source]) {
        if (auto t = targets.find(target); t != targets.end()) total += n1 * t->second;
      }
    }
  }
  return total;
}

std::uint64_t SemanticCounter::count_f2(const AllographClass& sub, const AllographClass& super) const {
  const auto targets = target_weights(super);
  if (targets.empty()) return 0;
  std::uint64_t total = 0;
  for (Codepoint s : sub.members) {
    auto it = occurrences_.find(s);
    if (it == occurrences_.end()) continue;
    for (const auto& [source, n1] : it->second) {
      for (std::size_t middle : out_[source]) {
        for (std::size_t target : out_[middle]) {
          if (auto t = targets.find(target); t != targets.end()) total += n1 * t->second;
        }
      }
    }
  }
  return total;
}

std::uint64_t count_f1(const AllographClass& sub, const AllographClass& super, const SynsetStore& synsets) {
  return SemanticCounter(synsets).count_f1(sub, super);
}

std::uint64_t count_f2(const AllographClass& sub, const AllographClass& super, const SynsetStore& synsets) {
  return SemanticCounter(synsets).count_f2(sub, super);
}

double radical_agreement(const AllographClass& sub, const AllographClass& super, const CharStore& store) {
  if (sub.members.empty() || super.members.empty()) return 0.0;
  std::size_t agree = 0;
  for (Codepoint s : sub.members) {
    const auto rs = store.radical(s);
    if (!rs) continue;
    for (Codepoint c : super.members) {
      if (store.radical(c) == rs) ++agree;
    }
  }
  return static_cast<double>(agree) / static_cast<double>(sub.members.size() * super.members.size());
}

double raw_semanticity(std::uint64_t f1, std::uint64_t f2, double r, const SemanticityCoefficients& k) {
  return k.f1 * std::log1p(static_cast<double>(f1)) + k.f2 * std::log1p(static_cast<double>(f2)) + k.radical * r;
}

void annotate_semantic_counts(InclusionGraph& g, const AllographPartition& classes, const CharStore& store,
                              const SemanticCounter* counter) {
  for (const Edge& e : g.edge_list()) {
    const auto& sub = classes.get(e.sub);
    const auto& super = classes.get(e.super);
    auto& attrs = g.attributes(e);
    attrs.f1 = counter ? counter->count_f1(sub, super) : 0;
    attrs.f2 = counter ? counter->count_f2(sub, super) : 0;
    attrs.radical_agreement = radical_agreement(sub, super, store);
  }
}

double semanticity(InclusionGraph& g, const SemanticityCoefficients& coefficients) {
  double max_raw = 0.0;
  for (const Edge& e : g.edge_list()) {
    auto& attrs = g.attributes(e);
    attrs.raw_semanticity = raw_semanticity(attrs.f1, attrs.f2, attrs.radical_agreement.value_or(0.0), coefficients);
    max_raw = std::max(max_raw, *attrs.raw_semanticity);
  }
  for (const Edge& e : g.edge_list()) {
    auto& attrs = g.attributes(e);
    attrs.semanticity = max_raw > 0.0 ? *attrs.raw_semanticity / max_raw : 0.0;
  }
  g.metadata()[kSemanticityNormKey] = format_double(max_raw);
  return max_raw;
}

std::vector<NodeId> most_semantic_chain(const InclusionGraph& g, NodeId start) {
  return greedy_chain(
      g, start, [](const Edge&, const EdgeAttributes& a) { return a.semanticity; }, ChainObjective::maximize);
}

}  // namespace sino
