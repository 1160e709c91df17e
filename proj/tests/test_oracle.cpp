#include "doctest.h"

#include <cmath>
#include <random>

#include "cayley/oracle.hpp"
#include "cayley/verify.hpp"

using namespace cayley;

TEST_CASE("jacobi solves tiny fixtures") {
  const std::vector<double> a{2, 1, 1, 2};
  const auto serial = jacobi_eigenvalues_serial(a, 2);
  CHECK(serial[0] == doctest::Approx(1.0));
  CHECK(serial[1] == doctest::Approx(3.0));
  const auto parallel = jacobi_eigenvalues(a, 2);
  CHECK(parallel[0] == doctest::Approx(1.0));
  CHECK(parallel[1] == doctest::Approx(3.0));

  const std::vector<double> diag{5, 0, 0, 0, -1, 0, 0, 0, 2};
  const auto values = jacobi_eigenvalues(diag, 3);
  CHECK(values == std::vector<double>{-1, 2, 5});

  CHECK_THROWS_AS(jacobi_eigenvalues(a, 3), std::invalid_argument);
}

TEST_CASE("jacobi serial and parallel agree on random symmetric matrices") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  for (int round = 0; round < 5; ++round) {
    const size_t n = 10 + rng() % 50;
    std::vector<double> matrix(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j) matrix[i * n + j] = matrix[j * n + i] = entry(rng);
    const auto serial = jacobi_eigenvalues_serial(matrix, n);
    const auto parallel = jacobi_eigenvalues(matrix, n);
    double trace = 0;
    for (size_t i = 0; i < n; ++i) trace += matrix[i * n + i];
    double sum = 0;
    for (size_t i = 0; i < n; ++i) {
      CHECK(serial[i] == doctest::Approx(parallel[i]).epsilon(1e-10));
      sum += serial[i];
    }
    CHECK(sum == doctest::Approx(trace).epsilon(1e-10));
  }
}

TEST_CASE("dense spectrum fixtures") {
  const auto two = brute_spectrum(2, TemperaturePoint::exact(Rational(2)));
  REQUIRE(two.eigenvalues.size() == 2);
  CHECK(two.eigenvalues[0] == doctest::Approx(0.5));
  CHECK(two.eigenvalues[1] == doctest::Approx(1.5));

  const auto ones = brute_spectrum(3, TemperaturePoint::exact(Rational(1)));
  REQUIRE(ones.eigenvalues.size() == 6);
  for (size_t i = 0; i < 5; ++i) CHECK(std::abs(ones.eigenvalues[i]) < 1e-10);
  CHECK(ones.eigenvalues[5] == doctest::Approx(6.0));

  // closed forms at q = 2: {0, 3/4 x4, 3}
  const auto three = brute_spectrum(3, TemperaturePoint::exact(Rational(2)));
  CHECK(std::abs(three.eigenvalues[0]) < 1e-10);
  for (size_t i = 1; i <= 4; ++i) CHECK(three.eigenvalues[i] == doctest::Approx(0.75));
  CHECK(three.eigenvalues[5] == doctest::Approx(3.0));

  CHECK_THROWS_AS(brute_spectrum(7, TemperaturePoint::exact(Rational(2))), std::length_error);
}

TEST_CASE("dense spectrum length and trace") {
  for (int n = 2; n <= 5; ++n) {
    const auto dense = brute_spectrum(n, TemperaturePoint::numeric(1.7));
    double group_order = 1;
    for (int k = 2; k <= n; ++k) group_order *= k;
    CHECK(dense.eigenvalues.size() == static_cast<size_t>(group_order));
    double trace = 0;
    for (double value : dense.eigenvalues) trace += value;
    CHECK(std::abs(trace - group_order) <= 1e-8 * group_order);
  }
}

TEST_CASE("tensor trace weights") {
  CHECK(tensor_trace_weight(ChordWord(3), 2) == Rational(1));
  const ChordWord swap(2, {make_chord(1, 2, 2)});
  CHECK(count_fixed_multi_indices(to_permutation(swap), 2) == 2);  // trace of the 4x4 swap
  CHECK(tensor_trace_weight(swap, 2) == Rational(1, 2));
  const ChordWord triangle(3, {make_chord(1, 2, 3), make_chord(2, 3, 3), make_chord(1, 3, 3)});
  CHECK(tensor_trace_weight(triangle, 2) == Rational(1, 2));
  CHECK_THROWS_AS(tensor_trace_weight(ChordWord(8), 10), std::length_error);
  CHECK_THROWS_AS(tensor_trace_weight(ChordWord(3), 0), std::invalid_argument);
}

TEST_CASE("tensor trace equals the cycle-count weight on random words") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 60; ++round) {
    const int strands = 2 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 4);
    const ChordWord w = random_chord_word(rng, strands, static_cast<int>(rng() % 7));
    CHECK(tensor_trace_weight(w, n) == weight_gl_n(w, n));
    const Permutation sigma = to_permutation(w);
    std::uint64_t expected = 1;
    for (int c = 0; c < num_cycles(sigma); ++c) expected *= static_cast<std::uint64_t>(n);
    CHECK(count_fixed_multi_indices(sigma, n) == expected);
    CHECK(count_fixed_multi_indices_serial(sigma, n) == expected);
  }
}
