#pragma once

#include <cstdint>
#include <filesystem>

namespace sinograph_app {

struct SyntheticOptions {
  std::uint64_t seed = 7;
  std::size_t primitives = 40;
  std::size_t compounds = 160;       // primitive + primitive
  std::size_t deep_compounds = 100;  // compound + primitive
  std::size_t variant_pairs = 20;
  std::size_t documents = 1000;
  std::size_t categories = 5;
};

struct SyntheticSummary {
  std::size_t characters = 0;
  std::size_t documents = 0;
  std::size_t synsets = 0;
  std::size_t relations = 0;
};

// Writes strokes, variants, readings, radicals, synsets, relations, glosses,
// freq and corpus TSV files into `dir`. Output depends only on the options.
SyntheticSummary generate_synthetic(const std::filesystem::path& dir, const SyntheticOptions& options = {});

}  // namespace sinograph_app
