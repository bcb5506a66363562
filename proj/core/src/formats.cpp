#include "sino/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sino/error.hpp"
#include "sino/utf8.hpp"

namespace sino::io {

namespace {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  // Next non-blank, non-comment line, with a trailing '\r' removed.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      return true;
    }
    return false;
  }

  // Like next() but keeps comment lines (snapshot section parsing).
  bool next_raw(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw InputError(source_ + ":" + std::to_string(number_) + ": " + message);
  }

  std::size_t line_number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t number_ = 0;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream ss{std::string(text)};
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

std::vector<std::string> fields(LineReader& reader, const std::string& line, std::size_t expected) {
  auto parts = split(line, '\t');
  if (parts.size() != expected) {
    reader.fail("expected " + std::to_string(expected) + " tab-separated fields, got " + std::to_string(parts.size()));
  }
  return parts;
}

Codepoint codepoint_field(LineReader& reader, const std::string& text) {
  auto cp = parse_codepoint(text);
  if (!cp) reader.fail("bad codepoint '" + text + "'");
  return *cp;
}

double double_field(LineReader& reader, const std::string& text) {
  auto v = parse_double(text);
  if (!v) reader.fail("bad number '" + text + "'");
  return *v;
}

std::uint64_t unsigned_field(LineReader& reader, const std::string& text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || p != end) reader.fail("bad unsigned integer '" + text + "'");
  return v;
}

void require_clean(const std::string& text, const char* what) {
  if (text.find_first_of("\t\n\r") != std::string::npos) {
    throw InputError(std::string("cannot write ") + what + " containing tab or newline: '" + text + "'");
  }
}

// "(x,y)"
Point parse_point(LineReader& reader, std::string_view text) {
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') reader.fail("bad point '" + std::string(text) + "'");
  auto inner = text.substr(1, text.size() - 2);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos) reader.fail("bad point '" + std::string(text) + "'");
  return {double_field(reader, std::string(inner.substr(0, comma))),
          double_field(reader, std::string(inner.substr(comma + 1)))};
}

std::string optional_field(const std::optional<double>& v) { return v ? format_double(*v) : "-"; }

std::optional<double> parse_optional(LineReader& reader, const std::string& text) {
  if (text == "-") return std::nullopt;
  return double_field(reader, text);
}

}  // namespace

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

StrokeTable read_strokes(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  StrokeTable table;
  std::string line;
  while (reader.next(line)) {
    const auto parts = fields(reader, line, 2);
    const Codepoint cp = codepoint_field(reader, parts[0]);
    if (table.contains(cp)) reader.fail("duplicate character " + format_codepoint(cp));
    std::vector<Stroke> strokes;
    for (const auto& item : split(parts[1], ';')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) reader.fail("stroke without type: '" + item + "'");
      auto type = parse_stroke_type(std::string_view(item).substr(0, colon));
      if (!type) reader.fail("unknown stroke type '" + item.substr(0, colon) + "'");
      Stroke stroke{*type, {}};
      // points are joined by '-', which may also be a sign, so split on ")-("
      std::string_view rest = std::string_view(item).substr(colon + 1);
      for (auto cut = rest.find(")-("); cut != std::string_view::npos; cut = rest.find(")-(")) {
        stroke.skeleton.push_back(parse_point(reader, rest.substr(0, cut + 1)));
        rest.remove_prefix(cut + 2);
      }
      stroke.skeleton.push_back(parse_point(reader, rest));
      if (stroke.skeleton.size() < 2) reader.fail("stroke needs at least two points");
      strokes.push_back(std::move(stroke));
    }
    table.emplace(cp, std::move(strokes));
  }
  return table;
}

void write_strokes(std::ostream& out, const StrokeTable& strokes) {
  for (const auto& [cp, list] : strokes) {
    out << format_codepoint(cp) << '\t';
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i) out << ';';
      out << to_string(list[i].type) << ':';
      for (std::size_t k = 0; k < list[i].skeleton.size(); ++k) {
        if (k) out << '-';
        out << '(' << format_double(list[i].skeleton[k].x) << ',' << format_double(list[i].skeleton[k].y) << ')';
      }
    }
    out << '\n';
  }
}

std::vector<std::pair<Codepoint, Reading>> read_readings(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::vector<std::pair<Codepoint, Reading>> out;
  std::string line;
  while (reader.next(line)) {
    const auto parts = fields(reader, line, 3);
    const Codepoint cp = codepoint_field(reader, parts[0]);
    auto lang = parse_language(parts[1]);
    if (!lang) reader.fail("unknown language tag '" + parts[1] + "'");
    Reading reading{*lang, {}};
    for (const auto& token : split_words(parts[2])) {
      if (*lang == Language::mandarin) {
        reading.syllables.push_back(token);
      } else {
        for (auto& mora : split_morae(token)) reading.syllables.push_back(std::move(mora));
      }
    }
    try {
      validate_reading(reading);
    } catch (const InputError& e) {
      reader.fail(e.what());
    }
    out.emplace_back(cp, std::move(reading));
  }
  return out;
}

void write_readings(std::ostream& out, const std::vector<std::pair<Codepoint, Reading>>& readings) {
  for (const auto& [cp, reading] : readings) {
    out << format_codepoint(cp) << '\t' << to_string(reading.language) << '\t';
    for (std::size_t i = 0; i < reading.syllables.size(); ++i) out << (i ? " " : "") << reading.syllables[i];
    out << '\n';
  }
}

std::vector<VariantPair> read_variants(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::vector<VariantPair> out;
  std::string line;
  while (reader.next(line)) {
    const auto parts = fields(reader, line, 2);
    out.emplace_back(codepoint_field(reader, parts[0]), codepoint_field(reader, parts[1]));
  }
  return out;
}

void write_variants(std::ostream& out, const std::vector<VariantPair>& pairs) {
  for (const auto& [a, b] : pairs) out << format_codepoint(a) << '\t' << format_codepoint(b) << '\n';
}

std::vector<std::pair<Codepoint, int>> read_radicals(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::vector<std::pair<Codepoint, int>> out;
  std::string line;
  while (reader.next(line)) {
    const auto parts = fields(reader, line, 2);
    const Codepoint cp = codepoint_field(reader, parts[0]);
    const auto r = unsigned_field(reader, parts[1]);
    if (r < 1 || r > 214) reader.fail("radical number out of range 1..214: " + parts[1]);
    out.emplace_back(cp, static_cast<int>(r));
  }
  return out;
}

void write_radicals(std::ostream& out, const std::vector<std::pair<Codepoint, int>>& radicals) {
  for (const auto& [cp, r] : radicals) out << format_codepoint(cp) << '\t' << r << '\n';
}

void read_synsets(std::istream& in, SynsetStore& store, const std::string& source) {
  LineReader reader(in, source);
  std::string line;
  while (reader.next(line)) {
    const auto parts = fields(reader, line, 2);
    Synset synset{parts[0], {}};
    for (auto& lemma : split(parts[1], '|')) {
      if (!lemma.empty()) synset.lemmas.push_back(std::move(lemma));
    }
    try {
      store.add_synset(std::move(synset));
    } catch (const InputError& e) {
      reader.fail(e.what());
    }
  }
}

void read_relations(std::istream& in, SynsetStore& store, const std::string& source) {
  LineReader reader(in, source);
  std::string line;
  while (reader.next(line)) {
    const auto parts = fields(reader, line, 3);
    try {
      store.add_relation({parts[0], parts[1], parts[2]});
    } catch (const InputError& e) {
      reader.fail(e.what());
    }
  }
}

void read_words(std::istream& in, SynsetStore& store, const std::string& source) {
  LineReader reader(in, source);
  std::string line;
  while (reader.next(line)) {
    const auto parts = fields(reader, line, 2);
    try {
      store.add_membership(parts[0], parts[1]);
    } catch (const Error& e) {
      reader.fail(e.what());
    }
  }
}

void write_synsets(std::ostream& out, const SynsetStore& store) {
  for (const auto& s : store.synsets()) {
    out << s.id << '\t';
    for (std::size_t i = 0; i < s.lemmas.size(); ++i) out << (i ? "|" : "") << s.lemmas[i];
    out << '\n';
  }
}

void write_relations(std::ostream& out, const SynsetStore& store) {
  for (const auto& r : store.relations()) out << r.source << '\t' << r.type << '\t' << r.target << '\n';
}

Glosses read_glosses(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  Glosses out;
  std::string line;
  while (reader.next(line)) {
    const auto parts = fields(reader, line, 2);
    auto& words = out[codepoint_field(reader, parts[0])];
    for (auto& w : split(parts[1], '|')) {
      if (!w.empty()) words.push_back(std::move(w));
    }
  }
  return out;
}

void write_glosses(std::ostream& out, const Glosses& glosses) {
  for (const auto& [cp, words] : glosses) {
    out << format_codepoint(cp) << '\t';
    for (std::size_t i = 0; i < words.size(); ++i) out << (i ? "|" : "") << words[i];
    out << '\n';
  }
}

std::map<Codepoint, std::uint64_t> read_counts(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::map<Codepoint, std::uint64_t> out;
  std::string line;
  while (reader.next(line)) {
    const auto parts = fields(reader, line, 2);
    const Codepoint cp = codepoint_field(reader, parts[0]);
    const auto count = unsigned_field(reader, parts[1]);
    if (count == 0) reader.fail("count must be positive");
    if (!out.emplace(cp, count).second) reader.fail("duplicate character " + format_codepoint(cp));
  }
  return out;
}

void write_counts(std::ostream& out, const std::map<Codepoint, std::uint64_t>& counts) {
  for (const auto& [cp, n] : counts) out << format_codepoint(cp) << '\t' << n << '\n';
}

void write_frequency_list(std::ostream& out, const FrequencyList& list) {
  for (const auto& e : list.entries()) out << format_codepoint(e.codepoint) << '\t' << format_double(e.frequency) << '\n';
}

std::vector<Document> read_corpus(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::vector<Document> out;
  std::string line;
  while (reader.next(line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) reader.fail("expected <label>\\t<text>");
    try {
      out.push_back({line.substr(0, tab), utf8::decode(std::string_view(line).substr(tab + 1))});
    } catch (const InputError& e) {
      reader.fail(e.what());
    }
  }
  return out;
}

void write_corpus(std::ostream& out, const std::vector<Document>& corpus) {
  for (const auto& d : corpus) {
    require_clean(d.label, "label");
    out << d.label << '\t' << utf8::encode(d.text) << '\n';
  }
}

std::pair<PhonemeTable, PhonemeTable> read_phonemes(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  auto mandarin = PhonemeTable::mandarin_default();
  auto japanese = PhonemeTable::japanese_default();
  std::string line;
  while (reader.next(line)) {
    const auto parts = fields(reader, line, 4);
    PhonemeTable* table = nullptr;
    if (parts[0] == "cmn") {
      table = &mandarin;
    } else if (parts[0] == "ja") {
      table = &japanese;
    } else {
      reader.fail("unknown phoneme language '" + parts[0] + "'");
    }
    const std::string symbol = parts[2] == "-" ? "" : parts[2];
    std::vector<double> values;
    for (const auto& v : split_words(parts[3])) {
      const double x = double_field(reader, v);
      if (x < 0.0 || x > 1.0) reader.fail("feature value outside [0, 1]: " + v);
      values.push_back(x);
    }
    if (parts[1] == "C") {
      if (values.size() != 4) reader.fail("consonant rows need 4 values");
      table->consonants[symbol] = {values[0], values[1], values[2], values[3]};
    } else if (parts[1] == "V") {
      if (values.size() != 3) reader.fail("vowel rows need 3 values");
      if (symbol.empty()) reader.fail("vowel symbol may not be empty");
      table->vowels[symbol] = {values[0], values[1], values[2]};
    } else {
      reader.fail("phoneme kind must be C or V");
    }
  }
  return {std::move(japanese), std::move(mandarin)};
}

void write_vectors(std::ostream& out, std::span<const std::string> labels, std::span<const SparseVector> vectors) {
  if (labels.size() != vectors.size()) throw InputError("write_vectors: labels and vectors differ in length");
  out << "# sinograph-vectors 1\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    require_clean(labels[i], "label");
    out << labels[i] << '\t';
    bool first = true;
    for (const auto& [id, w] : vectors[i]) {
      out << (first ? "" : " ") << id << ':' << format_double(w);
      first = false;
    }
    out << '\n';
  }
}

std::pair<std::vector<std::string>, std::vector<SparseVector>> read_vectors(std::istream& in,
                                                                           const std::string& source) {
  LineReader reader(in, source);
  std::pair<std::vector<std::string>, std::vector<SparseVector>> out;
  std::string line;
  while (reader.next(line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) reader.fail("expected <label>\\t<features>");
    SparseVector v;
    for (const auto& item : split_words(std::string_view(line).substr(tab + 1))) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) reader.fail("bad feature '" + item + "'");
      const auto id = unsigned_field(reader, item.substr(0, colon));
      v[static_cast<ClassId>(id)] = double_field(reader, item.substr(colon + 1));
    }
    out.first.push_back(line.substr(0, tab));
    out.second.push_back(std::move(v));
  }
  return out;
}

void write_snapshot(std::ostream& out, const Snapshot& snapshot) {
  out << kSnapshotHeader << '\n';
  out << "[META]\n";
  for (const auto& [k, v] : snapshot.graph.metadata()) {
    require_clean(k, "metadata key");
    require_clean(v, "metadata value");
    out << k << '\t' << v << '\n';
  }
  out << "[NODES]\n";
  for (NodeId id : snapshot.graph.nodes()) {
    out << id;
    if (id < snapshot.classes.size()) {
      const auto& cls = snapshot.classes.get(id);
      out << '\t' << format_codepoint(cls.representative) << '\t';
      for (std::size_t i = 0; i < cls.members.size(); ++i) out << (i ? " " : "") << format_codepoint(cls.members[i]);
    }
    out << '\n';
  }
  out << "[EDGES]\n";
  out << "#sub\tsuper";
  for (auto lang : kAllLanguages) out << "\td_" << to_string(lang);
  for (auto lang : kAllLanguages) out << "\tphi_" << to_string(lang);
  out << "\tf1\tf2\tr\traw_s\ts\n";
  for (const auto& [e, a] : snapshot.graph.edges()) {
    out << e.sub << '\t' << e.super;
    for (const auto& d : a.distance) out << '\t' << optional_field(d);
    for (const auto& p : a.phoneticity) out << '\t' << optional_field(p);
    out << '\t' << a.f1 << '\t' << a.f2 << '\t' << optional_field(a.radical_agreement) << '\t'
        << optional_field(a.raw_semanticity) << '\t' << optional_field(a.semanticity) << '\n';
  }
  out << "[ANNOTATIONS]\n";
  for (const auto& [id, synsets] : snapshot.annotations) {
    out << id << '\t';
    bool first = true;
    for (const auto& s : synsets) {
      require_clean(s, "synset id");
      out << (first ? "" : "|") << s;
      first = false;
    }
    out << '\n';
  }
}

Snapshot read_snapshot(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::string line;
  if (!reader.next_raw(line) || line != kSnapshotHeader) reader.fail("missing header '" + std::string(kSnapshotHeader) + "'");

  enum class Section { none, meta, nodes, edges, annotations } section = Section::none;
  std::map<std::string, std::string> meta;
  std::vector<NodeId> nodes;
  std::vector<AllographClass> classes;
  std::vector<std::pair<Edge, EdgeAttributes>> edges;
  ClassAnnotations annotations;

  while (reader.next_raw(line)) {
    if (line == "[META]") {
      section = Section::meta;
      continue;
    }
    if (line == "[NODES]") {
      section = Section::nodes;
      continue;
    }
    if (line == "[EDGES]") {
      section = Section::edges;
      continue;
    }
    if (line == "[ANNOTATIONS]") {
      section = Section::annotations;
      continue;
    }
    if (line.front() == '#' && section != Section::meta) continue;
    switch (section) {
      case Section::none:
        reader.fail("content before the first section");
      case Section::meta: {
        const auto parts = fields(reader, line, 2);
        meta[parts[0]] = parts[1];
        break;
      }
      case Section::nodes: {
        const auto parts = split(line, '\t');
        const auto id = static_cast<NodeId>(unsigned_field(reader, parts[0]));
        nodes.push_back(id);
        if (parts.size() == 3) {
          AllographClass cls{id, {}, codepoint_field(reader, parts[1])};
          for (const auto& m : split_words(parts[2])) cls.members.push_back(codepoint_field(reader, m));
          classes.push_back(std::move(cls));
        } else if (parts.size() != 1) {
          reader.fail("node rows have 1 or 3 fields");
        }
        break;
      }
      case Section::edges: {
        const auto parts = fields(reader, line, 2 + 2 * kLanguageCount + 5);
        Edge e{static_cast<NodeId>(unsigned_field(reader, parts[0])),
               static_cast<NodeId>(unsigned_field(reader, parts[1]))};
        EdgeAttributes a;
        std::size_t col = 2;
        for (auto& d : a.distance) d = parse_optional(reader, parts[col++]);
        for (auto& p : a.phoneticity) p = parse_optional(reader, parts[col++]);
        a.f1 = unsigned_field(reader, parts[col++]);
        a.f2 = unsigned_field(reader, parts[col++]);
        a.radical_agreement = parse_optional(reader, parts[col++]);
        a.raw_semanticity = parse_optional(reader, parts[col++]);
        a.semanticity = parse_optional(reader, parts[col++]);
        edges.emplace_back(e, a);
        break;
      }
      case Section::annotations: {
        const auto parts = fields(reader, line, 2);
        auto& set = annotations[static_cast<ClassId>(unsigned_field(reader, parts[0]))];
        for (auto& s : split(parts[1], '|')) {
          if (!s.empty()) set.insert(std::move(s));
        }
        break;
      }
    }
  }

  Snapshot snapshot;
  try {
    std::vector<Edge> topology;
    for (const auto& [e, _] : edges) topology.push_back(e);
    snapshot.graph = InclusionGraph(std::move(nodes), topology);
    for (const auto& [e, a] : edges) snapshot.graph.attributes(e) = a;
    snapshot.graph.metadata() = std::move(meta);
    std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    snapshot.classes = AllographPartition(std::move(classes));
  } catch (const Error& e) {
    throw InputError(source + ": " + e.what());
  }
  snapshot.annotations = std::move(annotations);
  return snapshot;
}

}  // namespace sino::io
