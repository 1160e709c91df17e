#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/numeric.hpp"
#include "cayley/permutation.hpp"

namespace cayley {

/// Chord between two distinct strands, stored with i < j.
struct Chord {
  int i;
  int j;
  bool operator==(const Chord&) const = default;
  auto operator<=>(const Chord&) const = default;
};

/// Word in the free monoid of horizontal chord diagrams on n_strands strands.
/// The empty word is the monoid unit.
class ChordWord {
 public:
  explicit ChordWord(int n_strands, std::vector<Chord> chords = {});

  int n_strands() const { return n_strands_; }
  const std::vector<Chord>& chords() const { return chords_; }
  size_t length() const { return chords_.size(); }
  bool empty() const { return chords_.empty(); }

  bool operator==(const ChordWord&) const = default;
  auto operator<=>(const ChordWord&) const = default;

 private:
  int n_strands_;
  std::vector<Chord> chords_;
};

/// Normalizes (j,i) to (i,j); validates 1 <= i < j <= n_strands.
Chord make_chord(int i, int j, int n_strands);

/// List concatenation; strand counts must match.
ChordWord concat(const ChordWord& a, const ChordWord& b);

/// Strand-orientation reversal: the chord list reversed. An involution and
/// anti-homomorphism: star(concat(a,b)) == concat(star(b), star(a)).
ChordWord star(const ChordWord& word);

/// The monoid homomorphism into Sym(N): the composite of the word's
/// transpositions with the rightmost chord acting first.
Permutation to_permutation(const ChordWord& word);

/// Fundamental gl(n) weight: n^{num_cycles(perm(word)) - N}, exact.
Rational weight_gl_n(const ChordWord& word, int n);

/// Finite linear combination of chord words with exact Gaussian-rational
/// coefficients. Zero coefficients are never stored.
class DiagramCombination {
 public:
  explicit DiagramCombination(int n_strands);

  int n_strands() const { return n_strands_; }
  const std::map<ChordWord, GaussianRational>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  /// Adds coeff * word, merging with an existing term; drops the term if the
  /// merged coefficient vanishes. The word's strand count must match.
  void add_term(const ChordWord& word, const GaussianRational& coeff);

 private:
  int n_strands_;
  std::map<ChordWord, GaussianRational> terms_;
};

/// Sesquilinear state form: sum over term pairs of
/// conj(a_i) * b_j * n^{-cayley_distance(perm(D_i), perm(D_j))}, exact.
GaussianRational state_eval(const DiagramCombination& a, const DiagramCombination& b, int n);

/// Linear extension of weight_gl_n to a combination.
GaussianRational weight_gl_n(const DiagramCombination& combo, int n);

std::string to_string(const ChordWord& word);  // "1,2 2,3 1,3"; "" for the unit
ChordWord parse_chord_word(std::string_view text, int n_strands);

}  // namespace cayley
