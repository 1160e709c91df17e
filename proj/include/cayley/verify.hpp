#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cayley/chord.hpp"

namespace cayley {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20210801;
  int random_rounds = 100;      // per randomized check
  int char_table_max_n = 8;     // orthogonality / Burnside range
  int oracle_max_n = 5;         // dense-vs-character comparisons
  bool oracle_smoke_n6 = true;  // 720x720 smoke points
  int zero_law_max_n = 12;
};

/// Random chord word over n strands with the given number of chords.
ChordWord random_chord_word(std::mt19937_64& rng, int n_strands, int length);

/// Random combination: up to max_terms words, Gaussian-rational coefficients
/// with numerators in [-9, 9] and denominators in [1, max_denominator].
DiagramCombination random_combination(std::mt19937_64& rng, int n_strands, int max_terms,
                                      int max_word_length, int max_denominator);

/// Full property suite across all modules; one result per named check.
std::vector<CheckResult> run_verification_suite(const VerifyOptions& options = {});

}  // namespace cayley
