#include "doctest.h"

#include <random>

#include "cayley/chord.hpp"
#include "cayley/verify.hpp"

using namespace cayley;

namespace {
ChordWord word(int n, std::initializer_list<std::pair<int, int>> chords) {
  std::vector<Chord> list;
  for (auto [i, j] : chords) list.push_back(make_chord(i, j, n));
  return ChordWord(n, std::move(list));
}
}  // namespace

TEST_CASE("chord normalization and bounds") {
  CHECK(make_chord(2, 1, 3) == Chord{1, 2});
  CHECK_THROWS_AS(make_chord(1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_chord(0, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_chord(1, 4, 3), std::invalid_argument);
}

TEST_CASE("concatenation is the monoid product") {
  const ChordWord ik = word(3, {{1, 3}});
  const ChordWord ij = word(3, {{1, 2}});
  CHECK(concat(ik, ij) == word(3, {{1, 3}, {1, 2}}));
  const ChordWord unit(3);
  CHECK(concat(ik, unit) == ik);
  CHECK(concat(unit, ik) == ik);
  const ChordWord a = word(3, {{1, 2}, {2, 3}});
  CHECK(concat(a, ik).length() == a.length() + ik.length());
  CHECK_THROWS_AS(concat(ik, ChordWord(4)), std::invalid_argument);
}

TEST_CASE("star reverses the chord list") {
  CHECK(star(word(3, {{1, 2}, {2, 3}, {1, 3}})) == word(3, {{1, 3}, {2, 3}, {1, 2}}));
  CHECK(star(ChordWord(2)) == ChordWord(2));
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    const ChordWord w = random_chord_word(rng, 4, static_cast<int>(rng() % 6));
    CHECK(star(star(w)) == w);
    CHECK(to_permutation(star(w)) == inverse(to_permutation(w)));
  }
}

TEST_CASE("words map to permutations") {
  CHECK(to_permutation(word(2, {{1, 2}})) == Permutation::transposition(2, 1, 2));
  const ChordWord w = word(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(to_permutation(w) == Permutation(std::vector<int>{1, 3, 2}));
  CHECK(num_cycles(to_permutation(w)) == 2);
  CHECK(to_permutation(ChordWord(4)) == Permutation::identity(4));
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    const ChordWord a = random_chord_word(rng, 5, static_cast<int>(rng() % 5));
    const ChordWord b = random_chord_word(rng, 5, static_cast<int>(rng() % 5));
    CHECK(to_permutation(concat(a, b)) == compose(to_permutation(a), to_permutation(b)));
  }
}

TEST_CASE("fundamental weights") {
  const ChordWord w = word(3, {{1, 2}, {2, 3}, {1, 3}});
  for (int n = 1; n <= 5; ++n) CHECK(weight_gl_n(w, n) == Rational(1, n));
  CHECK(weight_gl_n(ChordWord(4), 3) == Rational(1));
  CHECK(weight_gl_n(word(2, {{1, 2}}), 2) == Rational(1, 2));
  CHECK_THROWS_AS(weight_gl_n(w, 0), std::invalid_argument);
}

TEST_CASE("combinations drop vanishing coefficients") {
  DiagramCombination combo(3);
  const ChordWord w = word(3, {{1, 2}});
  combo.add_term(w, GaussianRational(Rational(1, 2)));
  combo.add_term(w, GaussianRational(Rational(1, 2)));
  CHECK(combo.term_count() == 1);
  CHECK(combo.terms().at(w).re == Rational(1));
  combo.add_term(w, GaussianRational(Rational(-1)));
  CHECK(combo.term_count() == 0);
  combo.add_term(w, GaussianRational(Rational(0)));
  CHECK(combo.term_count() == 0);
  CHECK_THROWS_AS(combo.add_term(ChordWord(2), GaussianRational(Rational(1))),
                  std::invalid_argument);
}

TEST_CASE("state form on single words") {
  DiagramCombination unit(2);
  unit.add_term(ChordWord(2), GaussianRational(Rational(1)));
  CHECK(state_eval(unit, unit, 2) == GaussianRational(Rational(1)));

  DiagramCombination chord12(2);
  chord12.add_term(word(2, {{1, 2}}), GaussianRational(Rational(1)));
  CHECK(state_eval(chord12, chord12, 2) == GaussianRational(Rational(1)));
  CHECK(state_eval(unit, chord12, 2) == GaussianRational(Rational(1, 2)));

  CHECK_THROWS_AS(state_eval(unit, DiagramCombination(3), 2), std::invalid_argument);
  CHECK_THROWS_AS(state_eval(unit, unit, 0), std::invalid_argument);
}

TEST_CASE("state form is hermitian and matches the star product route") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 30; ++round) {
    const int strands = 2 + static_cast<int>(rng() % 3);
    const DiagramCombination a = random_combination(rng, strands, 4, 4, 7);
    const DiagramCombination b = random_combination(rng, strands, 4, 4, 7);
    for (int n = 1; n <= 3; ++n) {
      const GaussianRational left = state_eval(a, b, n);
      CHECK(conj(left) == state_eval(b, a, n));
      // term-by-term route through star, concat and the plain weight
      GaussianRational via_weight;
      for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
          via_weight =
              via_weight + conj(ca) * cb * GaussianRational(weight_gl_n(concat(star(wa), wb), n));
      CHECK(left == via_weight);
    }
  }
}

TEST_CASE("chord word text form") {
  CHECK(to_string(word(3, {{1, 2}, {2, 3}, {1, 3}})) == "1,2 2,3 1,3");
  CHECK(to_string(ChordWord(3)).empty());
  CHECK(parse_chord_word("1,2 2,3 1,3", 3) == word(3, {{1, 2}, {2, 3}, {1, 3}}));
  CHECK(parse_chord_word("", 3) == ChordWord(3));
  CHECK(parse_chord_word("2,1", 3) == word(3, {{1, 2}}));
  CHECK_THROWS_AS(parse_chord_word("1,4", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_chord_word("1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_chord_word("1,x", 3), std::invalid_argument);
}
