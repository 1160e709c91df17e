#include "cayley/chord.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cayley {

Chord make_chord(int i, int j, int n_strands) {
  if (i == j) throw std::invalid_argument("make_chord: strands must differ");
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_strands)
    throw std::invalid_argument("make_chord: strand index out of range for " +
                                std::to_string(n_strands) + " strands");
  return Chord{i, j};
}

ChordWord::ChordWord(int n_strands, std::vector<Chord> chords)
    : n_strands_(n_strands), chords_(std::move(chords)) {
  if (n_strands_ < 1) throw std::invalid_argument("ChordWord: need at least one strand");
  for (const Chord& c : chords_)
    if (c.i < 1 || c.i >= c.j || c.j > n_strands_)
      throw std::invalid_argument("ChordWord: chord outside strand bounds");
}

ChordWord concat(const ChordWord& a, const ChordWord& b) {
  if (a.n_strands() != b.n_strands())
    throw std::invalid_argument("concat: strand counts differ");
  std::vector<Chord> chords = a.chords();
  chords.insert(chords.end(), b.chords().begin(), b.chords().end());
  return ChordWord(a.n_strands(), std::move(chords));
}

ChordWord star(const ChordWord& word) {
  std::vector<Chord> chords(word.chords().rbegin(), word.chords().rend());
  return ChordWord(word.n_strands(), std::move(chords));
}

Permutation to_permutation(const ChordWord& word) {
  Permutation sigma = Permutation::identity(word.n_strands());
  for (const Chord& c : word.chords())
    sigma = compose(sigma, Permutation::transposition(word.n_strands(), c.i, c.j));
  return sigma;
}

Rational weight_gl_n(const ChordWord& word, int n) {
  if (n < 1) throw std::invalid_argument("weight_gl_n: n must be positive");
  const long exponent = num_cycles(to_permutation(word)) - word.n_strands();
  return rat_pow(Rational(n), exponent);
}

DiagramCombination::DiagramCombination(int n_strands) : n_strands_(n_strands) {
  if (n_strands_ < 1) throw std::invalid_argument("DiagramCombination: need at least one strand");
}

void DiagramCombination::add_term(const ChordWord& word, const GaussianRational& coeff) {
  if (word.n_strands() != n_strands_)
    throw std::invalid_argument("DiagramCombination: strand counts differ");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(word, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussianRational state_eval(const DiagramCombination& a, const DiagramCombination& b, int n) {
  if (a.n_strands() != b.n_strands())
    throw std::invalid_argument("state_eval: strand counts differ");
  if (n < 1) throw std::invalid_argument("state_eval: n must be positive");
  // Permutations are shared across the double sum, so map each word once.
  std::vector<Permutation> perms_a, perms_b;
  perms_a.reserve(a.term_count());
  perms_b.reserve(b.term_count());
  for (const auto& [word, coeff] : a.terms()) perms_a.push_back(to_permutation(word));
  for (const auto& [word, coeff] : b.terms()) perms_b.push_back(to_permutation(word));

  GaussianRational total;
  size_t ia = 0;
  for (const auto& [word_a, coeff_a] : a.terms()) {
    size_t ib = 0;
    for (const auto& [word_b, coeff_b] : b.terms()) {
      const int d = cayley_distance(perms_a[ia], perms_b[ib]);
      const Rational kernel_entry = rat_pow(Rational(n), -static_cast<long>(d));
      total = total + conj(coeff_a) * coeff_b * GaussianRational(kernel_entry);
      ++ib;
    }
    ++ia;
  }
  return total;
}

GaussianRational weight_gl_n(const DiagramCombination& combo, int n) {
  GaussianRational total;
  for (const auto& [word, coeff] : combo.terms())
    total = total + coeff * GaussianRational(weight_gl_n(word, n));
  return total;
}

std::string to_string(const ChordWord& word) {
  std::string text;
  for (size_t k = 0; k < word.chords().size(); ++k) {
    if (k > 0) text += ' ';
    text += std::to_string(word.chords()[k].i) + ',' + std::to_string(word.chords()[k].j);
  }
  return text;
}

ChordWord parse_chord_word(std::string_view text, int n_strands) {
  std::vector<Chord> chords;
  std::istringstream stream{std::string(text)};
  std::string token;
  while (stream >> token) {
    const size_t comma = token.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == token.size())
      throw std::invalid_argument("parse_chord_word: expected 'i,j', got '" + token + "'");
    int i = 0, j = 0;
    size_t used_i = 0, used_j = 0;
    try {
      i = std::stoi(token.substr(0, comma), &used_i);
      j = std::stoi(token.substr(comma + 1), &used_j);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_chord_word: malformed chord '" + token + "'");
    }
    if (used_i != comma || used_j != token.size() - comma - 1)
      throw std::invalid_argument("parse_chord_word: malformed chord '" + token + "'");
    chords.push_back(make_chord(i, j, n_strands));
  }
  return ChordWord(n_strands, std::move(chords));
}

}  // namespace cayley
