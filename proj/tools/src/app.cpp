#include "sinograph_app/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "sino/charstore.hpp"
#include "sino/classify.hpp"
#include "sino/error.hpp"
#include "sino/features.hpp"
#include "sino/formats.hpp"
#include "sino/freqlists.hpp"
#include "sino/graphcore.hpp"
#include "sino/inferschar.hpp"
#include "sino/phonetics.hpp"
#include "sino/semantics.hpp"
#include "sino/strokesig.hpp"
#include "sino/utf8.hpp"
#include "sinograph_app/synthetic.hpp"

namespace sinograph_app {

namespace fs = std::filesystem;
using sino::format_double;

namespace {

struct BuildOptions {
  std::string strokes, variants, out, range;
  std::vector<std::string> freq;
  double tolerance = 0.05;
  bool bmp_only = false;
};

struct AnnotateOptions {
  std::string snapshot, out, readings, radicals, synsets, relations, words, glosses, phonemes;
  std::vector<std::string> relation_types;
  std::vector<double> coefficients{0.5, 0.25, 0.25};
};

struct ChainOptions {
  std::string snapshot, kind = "semantic", lang = "cmn";
  std::vector<sino::ClassId> starts;
  std::vector<std::string> chars;
};

struct FreqOptions {
  std::vector<std::string> freq;
  std::size_t n = 1000;
  std::string ufl_out;
  bool renormalize = false;
  double singleton_rho = 0.0;
};

struct FeatureOptions {
  std::string snapshot, corpus, out, strategy = "baseline", lang = "cmn";
  bool phonetic_only = false, raw = false;
  std::size_t min_count = 10;
};

struct EvaluateOptions {
  std::string vectors;
  std::size_t k = 10;
  sino::TrainOptions train;
};

struct QueryOptions {
  std::string snapshot, character, direction = "sub";
  std::optional<sino::ClassId> class_id;
  std::size_t max_depth = 4;
};

struct HistOptions {
  std::string snapshot, lang = "cmn";
  std::size_t bins = 10;
};

struct GenOptions {
  std::string out;
  SyntheticOptions synthetic;
};

sino::Language language_arg(const std::string& tag) {
  auto lang = sino::parse_language(tag);
  if (!lang) throw sino::InputError("unknown language '" + tag + "' (expected cmn, ja_on or ja_kun)");
  return *lang;
}

sino::Codepoint codepoint_arg(const std::string& text) {
  if (auto cp = sino::parse_codepoint(text)) return *cp;
  const auto decoded = sino::utf8::decode(text);
  if (decoded.size() == 1) return decoded.front();
  throw sino::InputError("expected a hex codepoint or a single character: '" + text + "'");
}

std::pair<sino::Codepoint, sino::Codepoint> range_arg(const std::string& text) {
  const auto dash = text.find('-');
  if (dash == std::string::npos) throw sino::InputError("range must look like 4E00-9FFF: '" + text + "'");
  auto lo = sino::parse_codepoint(text.substr(0, dash));
  auto hi = sino::parse_codepoint(text.substr(dash + 1));
  if (!lo || !hi || *lo > *hi) throw sino::InputError("bad codepoint range '" + text + "'");
  return {*lo, *hi};
}

template <typename F>
void write_output(const std::string& path, F&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sino::InputError("cannot write '" + path + "'");
  writer(out);
  out.flush();
  if (!out) throw sino::InputError("write failed for '" + path + "'");
}

sino::io::Snapshot load_snapshot(const std::string& path) {
  return sino::io::read_file(path, [](std::istream& in, const std::string& src) { return sino::io::read_snapshot(in, src); });
}

sino::FrequencyList load_frequency_list(const std::string& path) {
  auto counts = sino::io::read_file(path, [](std::istream& in, const std::string& src) { return sino::io::read_counts(in, src); });
  if (counts.empty()) throw sino::InputError(path + ": empty frequency list");
  return sino::from_counts(counts);
}

std::string chars_of(const sino::io::Snapshot& s, const std::vector<sino::NodeId>& nodes) {
  std::string text;
  for (auto id : nodes) text += sino::utf8::encode(s.classes.get(id).representative);
  return text;
}

std::string join_ids(const std::vector<sino::NodeId>& nodes) {
  std::string text;
  for (std::size_t i = 0; i < nodes.size(); ++i) text += (i ? " " : "") + std::to_string(nodes[i]);
  return text;
}

int build_graph(const BuildOptions& o, std::ostream& out, std::ostream& err) {
  auto strokes = sino::io::read_file(o.strokes, [](std::istream& in, const std::string& src) { return sino::io::read_strokes(in, src); });
  const std::size_t total = strokes.size();
  std::optional<std::pair<sino::Codepoint, sino::Codepoint>> range;
  if (!o.range.empty()) range = range_arg(o.range);
  std::erase_if(strokes, [&](const auto& kv) {
    if (o.bmp_only && kv.first > 0xFFFF) return true;
    return range && (kv.first < range->first || kv.first > range->second);
  });
  if (strokes.empty()) throw sino::InputError(o.strokes + ": no characters" + (total ? " left after filtering" : ""));

  std::map<sino::Codepoint, sino::CharSignature> signatures;
  std::set<sino::Codepoint> chars;
  for (const auto& [cp, list] : strokes) {
    try {
      signatures.emplace(cp, sino::char_signature(list));
    } catch (const sino::InputError& e) {
      throw sino::InputError(o.strokes + ": " + sino::format_codepoint(cp) + ": " + e.what());
    }
    chars.insert(cp);
  }
  const auto char_edges = sino::detect_inclusions(signatures, o.tolerance);
  const auto char_graph = sino::transitive_reduce(sino::character_graph(chars, char_edges));

  auto pairs = sino::io::read_file(o.variants, [](std::istream& in, const std::string& src) { return sino::io::read_variants(in, src); });
  std::size_t dropped = 0;
  if (total != strokes.size()) {
    std::erase_if(pairs, [&](const auto& p) {
      const bool out_of_filter = !chars.contains(p.first) || !chars.contains(p.second);
      dropped += out_of_filter;
      return out_of_filter;
    });
  }

  std::optional<sino::FrequencyList> frequencies;
  if (o.freq.size() == 1) {
    frequencies = load_frequency_list(o.freq.front());
  } else if (o.freq.size() > 1) {
    std::vector<sino::NamedFrequencyList> lists;
    for (const auto& path : o.freq) lists.push_back({fs::path(path).stem().string(), load_frequency_list(path)});
    frequencies = sino::aggregate_ufl(lists);
  }
  auto classes = sino::build_allograph_classes(pairs, chars, frequencies ? &*frequencies : nullptr);

  sino::io::Snapshot snapshot;
  snapshot.graph = sino::transitive_reduce(sino::lift_to_classes(char_graph, classes));
  snapshot.classes = std::move(classes);
  auto& meta = snapshot.graph.metadata();
  meta["build.tolerance"] = format_double(o.tolerance);
  meta["build.characters"] = std::to_string(chars.size());
  meta["build.char_edges"] = std::to_string(char_edges.size());
  meta["build.char_edges_reduced"] = std::to_string(char_graph.edge_count());
  write_output(o.out, [&](std::ostream& f) { sino::io::write_snapshot(f, snapshot); });

  if (dropped) err << "note: " << dropped << " variant pairs outside the character filter were dropped\n";
  out << "characters\t" << chars.size() << '\n'
      << "char_edges\t" << char_edges.size() << '\n'
      << "char_edges_reduced\t" << char_graph.edge_count() << '\n'
      << "nodes\t" << snapshot.graph.node_count() << '\n'
      << "edges\t" << snapshot.graph.edge_count() << '\n';
  return kOk;
}

int annotate(const AnnotateOptions& o, std::ostream& out, std::ostream& err) {
  auto snapshot = load_snapshot(o.snapshot);
  auto& g = snapshot.graph;
  if (g.edge_count() == 0) throw sino::DataError(o.snapshot + ": graph has no edges to annotate");
  if (o.coefficients.size() != 3) throw sino::InputError("--coefficients takes three values");

  sino::CharStore store;
  for (const auto& cls : snapshot.classes.classes()) {
    for (auto cp : cls.members) store.add(cp);
  }
  sino::PhoneticModel model;
  if (!o.phonemes.empty()) {
    auto [ja, cmn] = sino::io::read_file(o.phonemes, [](std::istream& in, const std::string& src) { return sino::io::read_phonemes(in, src); });
    model = sino::PhoneticModel(std::move(ja), std::move(cmn));
  }
  std::size_t skipped = 0;
  if (!o.readings.empty()) {
    auto readings = sino::io::read_file(o.readings, [](std::istream& in, const std::string& src) { return sino::io::read_readings(in, src); });
    for (auto& [cp, reading] : readings) {
      if (!store.contains(cp)) {
        ++skipped;
        continue;
      }
      try {
        model.validate(reading);
      } catch (const sino::InputError& e) {
        throw sino::InputError(o.readings + ": " + sino::format_codepoint(cp) + ": " + e.what());
      }
      store.add_reading(cp, std::move(reading));
    }
  }
  if (!o.radicals.empty()) {
    for (auto [cp, r] : sino::io::read_file(o.radicals, [](std::istream& in, const std::string& src) { return sino::io::read_radicals(in, src); })) {
      if (store.contains(cp)) store.set_radical(cp, r);
    }
  }
  if (skipped) err << "note: " << skipped << " readings for characters outside the graph were skipped\n";

  for (auto lang : sino::kAllLanguages) {
    g.metadata().erase(sino::phoneticity_norm_key(lang));
    try {
      sino::phoneticity(g, snapshot.classes, store, lang, model);
    } catch (const sino::DataError&) {
      err << "note: no " << sino::to_string(lang) << " distance defined; phoneticity unknown\n";
    }
  }

  sino::SynsetStore synsets;
  if (!o.synsets.empty()) {
    auto in = sino::io::open_input(o.synsets);
    sino::io::read_synsets(in, synsets, o.synsets);
  }
  if (!o.relations.empty()) {
    auto in = sino::io::open_input(o.relations);
    sino::io::read_relations(in, synsets, o.relations);
  }
  if (!o.words.empty()) {
    auto in = sino::io::open_input(o.words);
    sino::io::read_words(in, synsets, o.words);
  }
  sino::io::Glosses glosses;
  if (!o.glosses.empty()) {
    glosses = sino::io::read_file(o.glosses, [](std::istream& in, const std::string& src) { return sino::io::read_glosses(in, src); });
  }
  std::optional<std::set<std::string>> types;
  if (!o.relation_types.empty()) types.emplace(o.relation_types.begin(), o.relation_types.end());
  std::unique_ptr<sino::SemanticCounter> counter;
  if (!o.synsets.empty()) counter = std::make_unique<sino::SemanticCounter>(synsets, types);
  sino::annotate_semantic_counts(g, snapshot.classes, store, counter.get());
  const double max_raw =
      sino::semanticity(g, {o.coefficients[0], o.coefficients[1], o.coefficients[2]});
  snapshot.annotations = sino::annotate_classes(snapshot.classes, synsets, glosses);

  write_output(o.out, [&](std::ostream& f) { sino::io::write_snapshot(f, snapshot); });

  out << "edges\t" << g.edge_count() << '\n';
  for (auto lang : sino::kAllLanguages) {
    std::size_t defined = 0;
    for (const auto& [_, a] : g.edges()) defined += a.phoneticity[sino::index_of(lang)].has_value();
    out << "phi_defined_" << sino::to_string(lang) << '\t' << defined << '\n';
  }
  out << "semanticity_max_raw\t" << format_double(max_raw) << '\n'
      << "annotated_classes\t" << snapshot.annotations.size() << '\n';
  return kOk;
}

int chains(const ChainOptions& o, std::ostream& out) {
  const auto snapshot = load_snapshot(o.snapshot);
  const auto& g = snapshot.graph;
  if (o.kind != "semantic" && o.kind != "phonetic") throw sino::InputError("--kind must be semantic or phonetic");
  const auto lang = language_arg(o.lang);

  std::vector<sino::NodeId> starts(o.starts.begin(), o.starts.end());
  for (const auto& c : o.chars) starts.push_back(snapshot.classes.class_of(codepoint_arg(c)));
  if (starts.empty()) starts = g.nodes();
  for (auto s : starts) {
    if (!g.contains(s)) throw sino::NotFoundError("class " + std::to_string(s) + " is not in the graph");
  }

  out << "#start\tchain\tcharacters\n";
  for (auto s : starts) {
    const auto chain =
        o.kind == "semantic" ? sino::most_semantic_chain(g, s) : sino::least_phonetic_chain(g, s, lang);
    out << s << '\t' << join_ids(chain) << '\t' << chars_of(snapshot, chain) << '\n';
  }
  return kOk;
}

int freqdist(const FreqOptions& o, std::ostream& out) {
  if (o.freq.empty()) throw sino::InputError("freqdist needs at least one --freq list");
  std::vector<sino::NamedFrequencyList> lists;
  for (const auto& path : o.freq) lists.push_back({fs::path(path).stem().string(), load_frequency_list(path)});
  if (lists.size() == 1) lists.push_back(lists.front());
  const auto matrix = sino::distance_matrix(lists, o.n, {o.singleton_rho});
  out << "list";
  for (const auto& l : lists) out << '\t' << l.name;
  out << '\n';
  for (std::size_t i = 0; i < lists.size(); ++i) {
    out << lists[i].name;
    for (double d : matrix[i]) out << '\t' << format_double(d);
    out << '\n';
  }
  if (!o.ufl_out.empty()) {
    const auto ufl = sino::aggregate_ufl(lists, {o.renormalize});
    write_output(o.ufl_out, [&](std::ostream& f) { sino::io::write_frequency_list(f, ufl); });
  }
  return kOk;
}

int features(const FeatureOptions& o, std::ostream& out) {
  const auto snapshot = load_snapshot(o.snapshot);
  const auto corpus = sino::io::read_file(o.corpus, [](std::istream& in, const std::string& src) { return sino::io::read_corpus(in, src); });
  const auto lang = language_arg(o.lang);
  const auto& g = snapshot.graph;

  const auto baseline = sino::baseline_vectors(corpus, snapshot.classes, o.min_count);
  sino::AugmentStats stats;
  sino::FeatureSet result;
  if (o.strategy == "baseline") {
    if (o.phonetic_only) throw sino::InputError("--phonetic-only applies to strategy 2");
    result = baseline;
  } else if (o.strategy == "1") {
    if (o.phonetic_only) throw sino::InputError("--phonetic-only applies to strategy 2");
    result = sino::augment_strategy1(baseline, sino::semantic_chains(g, baseline.vocabulary),
                                     sino::semanticity_weight(g), &stats);
  } else if (o.strategy == "2") {
    result = sino::augment_strategy2(baseline, sino::semantic_chains(g, baseline.vocabulary),
                                     sino::phonetic_chains(g, baseline.vocabulary, lang), sino::semanticity_weight(g),
                                     sino::phoneticity_weight(g, lang), o.phonetic_only, &stats);
  } else {
    throw sino::InputError("--strategy must be baseline, 1 or 2");
  }

  const auto vectors = o.raw ? result.weights : sino::l2_normalized(result.weights);
  write_output(o.out, [&](std::ostream& f) { sino::io::write_vectors(f, result.labels, vectors); });
  out << "documents\t" << result.labels.size() << '\n'
      << "vocabulary\t" << result.vocabulary.size() << '\n'
      << "baseline_entries\t" << result.vocabulary.count(sino::Provenance::baseline) << '\n'
      << "added_entries\t" << result.vocabulary.count(sino::Provenance::added_by_chain) << '\n'
      << "modified\t" << stats.modified << '\n'
      << "empty_documents\t" << result.empty_documents << '\n'
      << "unmapped_characters\t" << result.unmapped_characters << '\n';
  return kOk;
}

int evaluate(const EvaluateOptions& o, std::ostream& out) {
  const auto [labels, vectors] = sino::io::read_file(o.vectors, [](std::istream& in, const std::string& src) { return sino::io::read_vectors(in, src); });
  if (labels.empty()) throw sino::InputError(o.vectors + ": no documents");
  const auto data = sino::make_dataset(vectors, labels);
  const auto report = sino::cross_validate(data, o.k, o.train);
  out << "documents\t" << data.size() << '\n'
      << "categories\t" << data.categories.size() << '\n'
      << "features\t" << data.dimension << '\n'
      << "folds\t" << report.fold_accuracies.size() << '\n'
      << "accuracy\t" << format_double(report.mean_accuracy) << '\n'
      << "correct\t" << report.correct << '/' << report.total << '\n'
      << "support_vectors\t" << report.support_vector_count << '\n'
      << "fold_accuracies";
  for (double a : report.fold_accuracies) out << '\t' << format_double(a);
  out << '\n';
  return kOk;
}

int query_unknown(const QueryOptions& o, std::ostream& out, std::ostream& err) {
  const auto snapshot = load_snapshot(o.snapshot);
  if (o.class_id.has_value() == !o.character.empty()) throw sino::InputError("give exactly one of --char or --class");
  const sino::NodeId u = o.class_id ? *o.class_id : snapshot.classes.class_of(codepoint_arg(o.character));
  sino::Propagation direction;
  if (o.direction == "sub") {
    direction = sino::Propagation::from_subcharacters;
  } else if (o.direction == "super") {
    direction = sino::Propagation::from_including_chars;
  } else {
    throw sino::InputError("--direction must be sub or super");
  }
  const auto vec = sino::semantic_approximation(snapshot.graph, snapshot.annotations, u, o.max_depth, direction);
  if (vec.empty()) err << "note: no annotated class reachable within depth " << o.max_depth << '\n';
  std::vector<std::pair<std::string, double>> rows(vec.begin(), vec.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  for (const auto& [id, w] : rows) out << id << '\t' << format_double(w) << '\n';
  return kOk;
}

int phi_hist(const HistOptions& o, std::ostream& out) {
  const auto snapshot = load_snapshot(o.snapshot);
  const auto h = sino::phoneticity_histogram(snapshot.graph, language_arg(o.lang), o.bins);
  out << "lower,upper,count\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    const double lo = h.lower + h.bin_width() * static_cast<double>(i);
    const double hi = i + 1 == h.counts.size() ? h.upper : h.lower + h.bin_width() * static_cast<double>(i + 1);
    out << format_double(lo) << ',' << format_double(hi) << ',' << h.counts[i] << '\n';
  }
  return kOk;
}

int graph_stats(const std::string& path, std::ostream& out) {
  const auto snapshot = load_snapshot(path);
  const auto& g = snapshot.graph;
  const auto stats = sino::degree_statistics(g);
  const auto cls = sino::class_statistics(snapshot.classes.classes());
  out << "nodes\t" << g.node_count() << '\n'
      << "edges\t" << g.edge_count() << '\n'
      << "sources\t" << stats.sources.size() << '\n'
      << "leaves\t" << stats.leaves.size() << '\n'
      << "max_in_degree\t" << stats.max_in << '\n'
      << "max_out_degree\t" << stats.max_out << '\n'
      << "classes\t" << cls.count << '\n'
      << "singleton_fraction\t" << format_double(cls.singleton_fraction) << '\n'
      << "max_class_size\t" << cls.max_size << '\n';
  auto fit = [&](const char* name, const std::vector<std::uint64_t>& degrees) {
    try {
      const auto f = sino::fit_power_law(degrees);
      out << name << "_alpha\t" << format_double(f.alpha) << '\n' << name << "_samples\t" << f.samples << '\n';
      if (f.degenerate) out << name << "_note\t" << f.diagnostic << '\n';
    } catch (const sino::DataError& e) {
      out << name << "_alpha\tn/a\n";
    }
  };
  fit("in_degree", sino::in_degrees(g));
  fit("out_degree", sino::out_degrees(g));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inclusion graphs of sinographs: mining, weighting, chains and features", "sinograph"};
  app.require_subcommand(1);

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build-graph", "Mine inclusions from strokes and write a class graph snapshot");
  build_cmd->add_option("--strokes", build.strokes, "strokes.tsv")->required();
  build_cmd->add_option("--variants", build.variants, "variants.tsv")->required();
  build_cmd->add_option("--freq", build.freq, "frequency list(s) choosing class representatives; several are merged");
  build_cmd->add_option("--tolerance", build.tolerance, "signature matching tolerance")->capture_default_str()
      ->check(CLI::PositiveNumber);
  build_cmd->add_option("--range", build.range, "keep codepoints in LO-HI (hex)");
  build_cmd->add_flag("--bmp-only", build.bmp_only, "drop characters above U+FFFF");
  build_cmd->add_option("-o,--out", build.out, "snapshot output")->required();

  AnnotateOptions ann;
  auto* ann_cmd = app.add_subcommand("annotate", "Compute phoneticity and semanticity on a snapshot");
  ann_cmd->add_option("--snapshot", ann.snapshot)->required();
  ann_cmd->add_option("-o,--out", ann.out)->required();
  ann_cmd->add_option("--readings", ann.readings);
  ann_cmd->add_option("--radicals", ann.radicals);
  ann_cmd->add_option("--synsets", ann.synsets);
  ann_cmd->add_option("--relations", ann.relations)->needs(ann_cmd->get_option("--synsets"));
  ann_cmd->add_option("--words", ann.words, "extra word/synset membership")->needs(ann_cmd->get_option("--synsets"));
  ann_cmd->add_option("--glosses", ann.glosses);
  ann_cmd->add_option("--phonemes", ann.phonemes, "phoneme feature overrides");
  ann_cmd->add_option("--relation-type", ann.relation_types, "count only these relation types");
  ann_cmd->add_option("--coefficients", ann.coefficients, "weights of ln(1+f1), ln(1+f2), r")
      ->expected(3)->capture_default_str();

  ChainOptions chain;
  auto* chain_cmd = app.add_subcommand("chains", "Most semantic or least phonetic chains");
  chain_cmd->add_option("--snapshot", chain.snapshot)->required();
  chain_cmd->add_option("--kind", chain.kind, "semantic or phonetic")->capture_default_str();
  chain_cmd->add_option("--lang", chain.lang, "cmn, ja_on or ja_kun")->capture_default_str();
  chain_cmd->add_option("--start", chain.starts, "start class id(s); default all");
  chain_cmd->add_option("--char", chain.chars, "start character(s), hex or literal");

  FreqOptions freq;
  auto* freq_cmd = app.add_subcommand("freqdist", "Distance matrix between frequency lists");
  freq_cmd->add_option("--freq", freq.freq, "frequency lists (<hex>\\t<count>)")->required();
  freq_cmd->add_option("-n", freq.n, "head size N")->capture_default_str()->check(CLI::PositiveNumber);
  freq_cmd->add_option("--ufl-out", freq.ufl_out, "write the aggregated list");
  freq_cmd->add_flag("--renormalize", freq.renormalize, "rescale the aggregated list to unit sum");
  freq_cmd->add_option("--singleton-rho", freq.singleton_rho, "rho used when one character is common")
      ->capture_default_str();

  FeatureOptions feat;
  auto* feat_cmd = app.add_subcommand("features", "Unigram class vectors, optionally chain-augmented");
  feat_cmd->add_option("--snapshot", feat.snapshot)->required();
  feat_cmd->add_option("--corpus", feat.corpus)->required();
  feat_cmd->add_option("-o,--out", feat.out)->required();
  feat_cmd->add_option("--strategy", feat.strategy, "baseline, 1 or 2")->capture_default_str();
  feat_cmd->add_flag("--phonetic-only", feat.phonetic_only, "strategy 2 without the semantic step");
  feat_cmd->add_option("--lang", feat.lang, "language of the phonetic chains")->capture_default_str();
  feat_cmd->add_option("--min-count", feat.min_count, "minimum corpus count of a class")->capture_default_str();
  feat_cmd->add_flag("--raw", feat.raw, "skip L2 normalization");

  EvaluateOptions eval;
  auto* eval_cmd = app.add_subcommand("evaluate", "Stratified k-fold cross-validation of a linear SVM");
  eval_cmd->add_option("--vectors", eval.vectors)->required();
  eval_cmd->add_option("-k,--folds", eval.k)->capture_default_str();
  eval_cmd->add_option("-C", eval.train.C, "soft-margin constant")->capture_default_str()->check(CLI::PositiveNumber);
  eval_cmd->add_option("--seed", eval.train.seed)->capture_default_str();
  eval_cmd->add_option("--max-epochs", eval.train.max_epochs)->capture_default_str()->check(CLI::PositiveNumber);

  QueryOptions query;
  auto* query_cmd = app.add_subcommand("query-unknown", "Synset vector of a class from annotated neighbours");
  query_cmd->add_option("--snapshot", query.snapshot)->required();
  query_cmd->add_option("--char", query.character, "hex codepoint or literal character");
  query_cmd->add_option("--class", query.class_id, "class id");
  query_cmd->add_option("--max-depth", query.max_depth)->capture_default_str();
  query_cmd->add_option("--direction", query.direction, "sub (toward components) or super")->capture_default_str();

  HistOptions hist;
  auto* hist_cmd = app.add_subcommand("phi-hist", "Phoneticity histogram as CSV");
  hist_cmd->add_option("--snapshot", hist.snapshot)->required();
  hist_cmd->add_option("--lang", hist.lang)->capture_default_str();
  hist_cmd->add_option("--bins", hist.bins)->capture_default_str()->check(CLI::PositiveNumber);

  std::string stats_path;
  auto* stats_cmd = app.add_subcommand("graph-stats", "Degree statistics and power-law exponents");
  stats_cmd->add_option("--snapshot", stats_path)->required();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen-synthetic", "Write the synthetic demo dataset");
  gen_cmd->add_option("-o,--out", gen.out, "output directory")->required();
  gen_cmd->add_option("--seed", gen.synthetic.seed)->capture_default_str();
  gen_cmd->add_option("--documents", gen.synthetic.documents)->capture_default_str();
  gen_cmd->add_option("--categories", gen.synthetic.categories)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build_cmd) return build_graph(build, out, err);
    if (*ann_cmd) return annotate(ann, out, err);
    if (*chain_cmd) return chains(chain, out);
    if (*freq_cmd) return freqdist(freq, out);
    if (*feat_cmd) return features(feat, out);
    if (*eval_cmd) return evaluate(eval, out);
    if (*query_cmd) return query_unknown(query, out, err);
    if (*hist_cmd) return phi_hist(hist, out);
    if (*stats_cmd) return graph_stats(stats_path, out);
    if (*gen_cmd) {
      const auto s = generate_synthetic(gen.out, gen.synthetic);
      out << "characters\t" << s.characters << "\ndocuments\t" << s.documents << "\nsynsets\t" << s.synsets
          << "\nrelations\t" << s.relations << '\n';
      return kOk;
    }
  } catch (const sino::DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const sino::CycleError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const sino::Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

}  // namespace sinograph_app
