#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "sino/charstore.hpp"
#include "sino/graphcore.hpp"
#include "sino/types.hpp"

namespace sino {

struct Synset {
  std::string id;
  std::vector<std::string> lemmas;  // UTF-8 words
};

struct SemRelation {
  std::string source;
  std::string type;
  std::string target;

  auto operator<=>(const SemRelation&) const = default;
};

// Synsets, typed relations between them, and word membership. Built by the
// loaders and read-only afterwards.
class SynsetStore {
 public:
  // Throws InputError on duplicate ids or empty lemma sets.
  void add_synset(Synset synset);
  // Throws InputError when an endpoint is unknown. Duplicates are ignored.
  void add_relation(SemRelation relation);
  // Extra (word, synset) membership beyond the lemma lists.
  void add_membership(const std::string& word, const std::string& synset_id);

  bool contains(const std::string& id) const { return index_.contains(id); }
  const Synset& synset(const std::string& id) const;
  const std::vector<Synset>& synsets() const noexcept { return synsets_; }
  const std::vector<SemRelation>& relations() const noexcept { return relations_; }

  // Distinct words of a synset: lemmas plus extra membership.
  const std::vector<std::string>& words(const std::string& id) const;
  // Synsets a word belongs to, ascending by id.
  std::vector<std::string> synsets_of_word(const std::string& word) const;

  std::size_t index_of(const std::string& id) const;

 private:
  std::vector<Synset> synsets_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::string>> words_;
  std::set<SemRelation> relation_set_;
  std::vector<SemRelation> relations_;
};

// Class id -> synset ids. Unannotated classes have no entry.
using ClassAnnotations = std::map<ClassId, std::set<std::string>>;

// A class receives synset s when a member's gloss word equals a word of s, or
// a member character occurs inside a word of s.
ClassAnnotations annotate_classes(const AllographPartition& classes, const SynsetStore& synsets,
                                  const std::map<Codepoint, std::vector<std::string>>& glosses);

// Counts relation-supported character pairs for inclusions. Relations are
// directed source -> target with the subcharacter on the source side.
class SemanticCounter {
 public:
  // `relation_types`: when set, only relations of these types count.
  explicit SemanticCounter(const SynsetStore& synsets,
                           std::optional<std::set<std::string>> relation_types = std::nullopt);

  // Distinct tuples (relation, w1, w2, s, c) with s in w1, c in w2.
  std::uint64_t count_f1(const AllographClass& sub, const AllographClass& super) const;
  // As count_f1 over relation paths of exactly two steps (any types).
  std::uint64_t count_f2(const AllographClass& sub, const AllographClass& super) const;

 private:
  using Occurrences = std::vector<std::pair<std::size_t, std::uint64_t>>;  // (synset, #words containing char)

  std::unordered_map<std::size_t, std::uint64_t> target_weights(const AllographClass& super) const;

  std::unordered_map<Codepoint, Occurrences> occurrences_;
  std::vector<std::vector<std::size_t>> out_;  // one entry per relation instance
};

std::uint64_t count_f1(const AllographClass& sub, const AllographClass& super, const SynsetStore& synsets);
std::uint64_t count_f2(const AllographClass& sub, const AllographClass& super, const SynsetStore& synsets);

// Fraction of member pairs (s, c) with the same Kang Xi radical; pairs with a
// missing radical count as disagreement.
double radical_agreement(const AllographClass& sub, const AllographClass& super, const CharStore& store);

struct SemanticityCoefficients {
  double f1 = 0.5;
  double f2 = 0.25;
  double radical = 0.25;
};

// a * ln(1 + f1) + b * ln(1 + f2) + c * r.
double raw_semanticity(std::uint64_t f1, std::uint64_t f2, double r, const SemanticityCoefficients& coefficients = {});

inline constexpr const char* kSemanticityNormKey = "semanticity.max_raw";

// Fills f1, f2 and r on every edge. A null counter leaves f1 = f2 = 0.
void annotate_semantic_counts(InclusionGraph& g, const AllographPartition& classes, const CharStore& store,
                              const SemanticCounter* counter);

// Raw S from the edge counts, then S = raw / max raw (all zero when max raw is 0).
// Returns the normalizer, also recorded in metadata.
double semanticity(InclusionGraph& g, const SemanticityCoefficients& coefficients = {});

// Repeatedly steps to the subcharacter with the largest S.
std::vector<NodeId> most_semantic_chain(const InclusionGraph& g, NodeId start);

}  // namespace sino
