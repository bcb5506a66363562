#pragma once

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sino/charstore.hpp"
#include "sino/features.hpp"
#include "sino/freqlists.hpp"
#include "sino/graphcore.hpp"
#include "sino/phonetics.hpp"
#include "sino/semantics.hpp"
#include "sino/strokesig.hpp"

// Line-oriented UTF-8 TSV formats. Blank lines and lines starting with '#'
// are skipped by every reader. Parse failures throw InputError naming the
// source and line number.
namespace sino::io {

// <hex>\t<type>:(x,y)-(x,y)...;<type>:...
using StrokeTable = std::map<Codepoint, std::vector<Stroke>>;
StrokeTable read_strokes(std::istream& in, const std::string& source = "strokes");
void write_strokes(std::ostream& out, const StrokeTable& strokes);

// <hex>\t<cmn|ja_on|ja_kun>\t<syllable>[ <syllable>...]
// Japanese tokens are split into morae.
std::vector<std::pair<Codepoint, Reading>> read_readings(std::istream& in, const std::string& source = "readings");
void write_readings(std::ostream& out, const std::vector<std::pair<Codepoint, Reading>>& readings);

// <hex>\t<hex>
std::vector<VariantPair> read_variants(std::istream& in, const std::string& source = "variants");
void write_variants(std::ostream& out, const std::vector<VariantPair>& pairs);

// <hex>\t<1..214>
std::vector<std::pair<Codepoint, int>> read_radicals(std::istream& in, const std::string& source = "radicals");
void write_radicals(std::ostream& out, const std::vector<std::pair<Codepoint, int>>& radicals);

// synsets: <id>\t<lemma>[|<lemma>...]
// relations: <src>\t<type>\t<dst>
// words: <word>\t<synset id>   (extra membership)
void read_synsets(std::istream& in, SynsetStore& store, const std::string& source = "synsets");
void read_relations(std::istream& in, SynsetStore& store, const std::string& source = "relations");
void read_words(std::istream& in, SynsetStore& store, const std::string& source = "words");
void write_synsets(std::ostream& out, const SynsetStore& store);
void write_relations(std::ostream& out, const SynsetStore& store);

// <hex>\t<word>[|<word>...]
using Glosses = std::map<Codepoint, std::vector<std::string>>;
Glosses read_glosses(std::istream& in, const std::string& source = "glosses");
void write_glosses(std::ostream& out, const Glosses& glosses);

// <hex>\t<count>
std::map<Codepoint, std::uint64_t> read_counts(std::istream& in, const std::string& source = "freq");
void write_counts(std::ostream& out, const std::map<Codepoint, std::uint64_t>& counts);
// <hex>\t<relative frequency>, list order
void write_frequency_list(std::ostream& out, const FrequencyList& list);

// <label>\t<text>
std::vector<Document> read_corpus(std::istream& in, const std::string& source = "corpus");
void write_corpus(std::ostream& out, const std::vector<Document>& corpus);

// <cmn|ja>\t<C|V>\t<symbol or ->\t<v1> <v2> ...  (4 consonant or 3 vowel values)
// Rows override the default tables.
std::pair<PhonemeTable, PhonemeTable> read_phonemes(std::istream& in, const std::string& source = "phonemes");

// Header "# sinograph-vectors 1", then <label>\t<id>:<weight> ... per document.
void write_vectors(std::ostream& out, std::span<const std::string> labels, std::span<const SparseVector> vectors);
std::pair<std::vector<std::string>, std::vector<SparseVector>> read_vectors(std::istream& in,
                                                                           const std::string& source = "vectors");

struct Snapshot {
  InclusionGraph graph;
  AllographPartition classes;
  ClassAnnotations annotations;

  bool operator==(const Snapshot&) const = default;
};

inline constexpr const char* kSnapshotHeader = "# sinograph-snapshot 1";

// Sections [META], [NODES], [EDGES], [ANNOTATIONS]. Unset attributes are "-";
// doubles use the shortest round-trip form, so read(write(s)) == s.
void write_snapshot(std::ostream& out, const Snapshot& snapshot);
Snapshot read_snapshot(std::istream& in, const std::string& source = "snapshot");

// Opens a file for reading; InputError when it cannot be opened.
std::ifstream open_input(const std::filesystem::path& path);

template <typename Reader>
auto read_file(const std::filesystem::path& path, Reader reader) {
  auto in = open_input(path);
  return reader(in, path.string());
}

}  // namespace sino::io
