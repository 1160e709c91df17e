#include "cayley/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "cayley/character.hpp"
#include "cayley/kernel.hpp"
#include "cayley/oracle.hpp"
#include "cayley/partition.hpp"
#include "cayley/permutation.hpp"
#include "cayley/schur.hpp"

namespace cayley {

namespace {

Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

Rational random_coefficient_part(std::mt19937_64& rng, int max_denominator) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, max_denominator);
  Rational value(num(rng), den(rng));
  value.canonicalize();
  return value;
}

// Breadth-first distances from the identity in the Cayley graph generated by
// all transpositions; the independent side of the distance check.
std::map<Permutation, int> bfs_distances(int n) {
  std::vector<Permutation> generators;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) generators.push_back(Permutation::transposition(n, i, j));
  std::map<Permutation, int> distance;
  std::vector<Permutation> frontier{Permutation::identity(n)};
  distance[frontier.front()] = 0;
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& sigma : frontier)
      for (const Permutation& t : generators) {
        Permutation neighbor = compose(sigma, t);
        if (distance.emplace(neighbor, distance[sigma] + 1).second) next.push_back(std::move(neighbor));
      }
    frontier = std::move(next);
  }
  return distance;
}

struct Suite {
  const VerifyOptions& options;
  std::vector<CheckResult> results;

  template <typename Fn>
  void check(const std::string& name, Fn&& fn) {
    CheckResult result;
    result.name = name;
    try {
      std::ostringstream detail;
      result.passed = fn(detail);
      result.detail = detail.str();
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(result));
  }
};

}  // namespace

ChordWord random_chord_word(std::mt19937_64& rng, int n_strands, int length) {
  std::uniform_int_distribution<int> strand(1, n_strands);
  std::vector<Chord> chords;
  chords.reserve(static_cast<size_t>(length));
  while (static_cast<int>(chords.size()) < length) {
    const int i = strand(rng), j = strand(rng);
    if (i == j) continue;
    chords.push_back(make_chord(i, j, n_strands));
  }
  return ChordWord(n_strands, std::move(chords));
}

DiagramCombination random_combination(std::mt19937_64& rng, int n_strands, int max_terms,
                                      int max_word_length, int max_denominator) {
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<int> word_length(0, max_word_length);
  DiagramCombination combo(n_strands);
  const int terms = term_count(rng);
  for (int t = 0; t < terms; ++t)
    combo.add_term(random_chord_word(rng, n_strands, word_length(rng)),
                   {random_coefficient_part(rng, max_denominator),
                    random_coefficient_part(rng, max_denominator)});
  return combo;
}

std::vector<CheckResult> run_verification_suite(const VerifyOptions& options) {
  Suite suite{options, {}};
  std::mt19937_64 rng(options.seed);

  suite.check("symgroup/cayley-distance-bfs", [&](std::ostream& detail) {
    for (int n = 2; n <= 6; ++n) {
      const auto distance = bfs_distances(n);
      const auto group = enumerate_group(n);
      const bool exhaustive = n <= 4;
      const int samples = exhaustive ? 0 : 400;
      auto check_pair = [&](const Permutation& a, const Permutation& b) {
        return cayley_distance(a, b) == distance.at(compose(inverse(a), b));
      };
      if (exhaustive) {
        for (const auto& a : group)
          for (const auto& b : group)
            if (!check_pair(a, b)) return false;
      } else {
        std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
        for (int s = 0; s < samples; ++s)
          if (!check_pair(group[pick(rng)], group[pick(rng)])) return false;
      }
    }
    detail << "BFS word length matches N - cycles on Sym(2..6)";
    return true;
  });

  suite.check("symgroup/left-invariance", [&](std::ostream& detail) {
    for (int round = 0; round < options.random_rounds; ++round) {
      const int n = 2 + static_cast<int>(rng() % 6);
      const Permutation tau = random_permutation(rng, n);
      const Permutation a = random_permutation(rng, n);
      const Permutation b = random_permutation(rng, n);
      if (cayley_distance(compose(tau, a), compose(tau, b)) != cayley_distance(a, b)) return false;
    }
    detail << options.random_rounds << " random triples";
    return true;
  });

  suite.check("symgroup/inclusion-preserves-distance", [&](std::ostream& detail) {
    for (int round = 0; round < options.random_rounds; ++round) {
      const int n = 2 + static_cast<int>(rng() % 5);
      const Permutation a = random_permutation(rng, n);
      const Permutation b = random_permutation(rng, n);
      auto embed = [n](const Permutation& sigma) {
        std::vector<int> images = sigma.images();
        images.push_back(n + 1);
        return Permutation(std::move(images));
      };
      if (cayley_distance(embed(a), embed(b)) != cayley_distance(a, b)) return false;
    }
    detail << options.random_rounds << " random pairs";
    return true;
  });

  suite.check("symgroup/metric-axioms", [&](std::ostream& detail) {
    for (int round = 0; round < options.random_rounds; ++round) {
      const int n = 2 + static_cast<int>(rng() % 6);
      const Permutation a = random_permutation(rng, n);
      const Permutation b = random_permutation(rng, n);
      const Permutation c = random_permutation(rng, n);
      if ((cayley_distance(a, b) == 0) != (a == b)) return false;
      if (cayley_distance(a, b) != cayley_distance(b, a)) return false;
      if (cayley_distance(a, c) > cayley_distance(a, b) + cayley_distance(b, c)) return false;
    }
    detail << "identity, symmetry, triangle inequality";
    return true;
  });

  suite.check("partitions/counts", [&](std::ostream& detail) {
    const int expected[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 1; n <= 12; ++n)
      if (static_cast<int>(enumerate_partitions(n).size()) != expected[n - 1]) return false;
    detail << "p(1..12)";
    return true;
  });

  suite.check("partitions/class-equation", [&](std::ostream& detail) {
    for (int n = 1; n <= 10; ++n) {
      BigInt total = 0;
      for (const Partition& mu : enumerate_partitions(n)) total += class_size(mu);
      if (total != factorial(static_cast<unsigned>(n))) return false;
    }
    detail << "sum of class sizes equals N! for N <= 10";
    return true;
  });

  suite.check("characters/orthogonality", [&](std::ostream& detail) {
    for (int n = 2; n <= options.char_table_max_n; ++n) {
      const CharacterTable table(n);
      const auto& parts = table.partitions();
      const size_t count = parts.size();
      for (size_t mu = 0; mu < count; ++mu)
        for (size_t nu = mu; nu < count; ++nu) {
          BigInt sum = 0;
          for (size_t lambda = 0; lambda < count; ++lambda)
            sum += table.value(lambda, mu) * table.value(lambda, nu);
          const BigInt expected = mu == nu ? centralizer_order(parts[mu]) : BigInt(0);
          if (sum != expected) return false;
        }
      const BigInt group_order = factorial(static_cast<unsigned>(n));
      for (size_t lambda = 0; lambda < count; ++lambda)
        for (size_t kappa = lambda; kappa < count; ++kappa) {
          BigInt sum = 0;
          for (size_t mu = 0; mu < count; ++mu)
            sum += class_size(parts[mu]) * table.value(lambda, mu) * table.value(kappa, mu);
          const BigInt expected = lambda == kappa ? group_order : BigInt(0);
          if (sum != expected) return false;
        }
    }
    detail << "rows and columns exact for N <= " << options.char_table_max_n;
    return true;
  });

  suite.check("characters/burnside", [&](std::ostream& detail) {
    for (int n = 1; n <= options.char_table_max_n; ++n) {
      BigInt total = 0;
      for (const Partition& lambda : enumerate_partitions(n)) {
        const BigInt dim = dimension(lambda);
        total += dim * dim;
      }
      if (total != factorial(static_cast<unsigned>(n))) return false;
    }
    detail << "sum of squared dimensions equals N!";
    return true;
  });

  suite.check("characters/hook-dimension", [&](std::ostream& detail) {
    for (int n = 1; n <= options.char_table_max_n; ++n) {
      const Partition identity_class(std::vector<int>(static_cast<size_t>(n), 1));
      for (const Partition& lambda : enumerate_partitions(n))
        if (dimension(lambda) != character(lambda, identity_class)) return false;
    }
    detail << "hook lengths agree with the recursion at the identity";
    return true;
  });

  suite.check("kernel/polynomial-identities", [&](std::ostream& detail) {
    for (int n = 1; n <= 7; ++n)
      if (!verify_polynomial_identities(n).ok()) return false;
    for (int n = 1; n <= 12; ++n)
      if (!polynomial_identities_by_evaluation(n)) return false;
    detail << "coefficients (N <= 7) and exact evaluation (N <= 12)";
    return true;
  });

  suite.check("kernel/closed-form-eigenvalues", [&](std::ostream& detail) {
    std::uniform_int_distribution<int> num(1, 12), den(1, 5);
    for (int n = 1; n <= 10; ++n) {
      for (int round = 0; round < 4; ++round) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        const KernelSpectrum spec = spectrum(n, TemperaturePoint::exact(q));
        const Partition trivial(std::vector<int>{n});
        const Partition sign_label(std::vector<int>(static_cast<size_t>(n), 1));
        if (spec.find(trivial)->value != eigenvalue_trivial(n, q)) return false;
        if (spec.find(sign_label)->value != eigenvalue_sign(n, q)) return false;
      }
    }
    detail << "trivial and sign entries match product formulas exactly";
    return true;
  });

  suite.check("kernel/trace-identity", [&](std::ostream& detail) {
    std::uniform_int_distribution<int> num(1, 12), den(1, 5);
    for (int n = 1; n <= 10; ++n) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      const KernelSpectrum spec = spectrum(n, TemperaturePoint::exact(q));
      if (spec.trace() != factorial(static_cast<unsigned>(n))) return false;
      BigInt mult_total = 0;
      for (const auto& entry : spec.entries) mult_total += entry.multiplicity;
      if (mult_total != factorial(static_cast<unsigned>(n))) return false;
    }
    detail << "sum of mult*eig and of mult equals N!";
    return true;
  });

  suite.check("kernel/integer-zero-law", [&](std::ostream& detail) {
    for (int n = 2; n <= options.zero_law_max_n; ++n) {
      for (int q = 1; q <= n; ++q) {
        const KernelSpectrum spec = spectrum(n, TemperaturePoint::exact(Rational(q)));
        for (const auto& entry : spec.entries) {
          if (q == n) {
            if (!(entry.value > 0)) return false;
          } else {
            const bool should_vanish = entry.partition.rows() > q;
            if (should_vanish != (entry.value == 0)) return false;
            if (!should_vanish && !(entry.value > 0)) return false;
          }
        }
      }
    }
    detail << "zero exactly on >q-row partitions; all positive at q = N (N <= "
           << options.zero_law_max_n << ")";
    return true;
  });

  const std::vector<double> oracle_grid{0.5, 1.0, 1.5, 2.0, 2.718281828459045, 3.0, 5.0};

  suite.check("kernel/oracle-equivalence", [&](std::ostream& detail) {
    for (int n = 2; n <= options.oracle_max_n; ++n) {
      const SpectrumEvaluator evaluator(n);
      for (double q : oracle_grid) {
        const DenseSpectrum dense = brute_spectrum(n, TemperaturePoint::numeric(q));
        std::vector<double> expected;
        const std::vector<double> values = evaluator.eigenvalues(q);
        for (size_t r = 0; r < values.size(); ++r) {
          const BigInt dim = dimension(evaluator.partitions()[r]);
          const size_t mult = static_cast<size_t>(to_double(BigInt(dim * dim)));
          expected.insert(expected.end(), mult, values[r]);
        }
        std::sort(expected.begin(), expected.end());
        if (expected.size() != dense.eigenvalues.size()) return false;
        for (size_t i = 0; i < expected.size(); ++i)
          if (std::abs(expected[i] - dense.eigenvalues[i]) > 1e-8) return false;
      }
    }
    if (options.oracle_smoke_n6) {
      const SpectrumEvaluator evaluator(6);
      for (double q : {2.0, 6.0}) {
        const DenseSpectrum dense = brute_spectrum(6, TemperaturePoint::numeric(q));
        std::vector<double> expected;
        const std::vector<double> values = evaluator.eigenvalues(q);
        for (size_t r = 0; r < values.size(); ++r) {
          const BigInt dim = dimension(evaluator.partitions()[r]);
          const size_t mult = static_cast<size_t>(to_double(BigInt(dim * dim)));
          expected.insert(expected.end(), mult, values[r]);
        }
        std::sort(expected.begin(), expected.end());
        for (size_t i = 0; i < expected.size(); ++i)
          if (std::abs(expected[i] - dense.eigenvalues[i]) > 1e-8) return false;
      }
    }
    detail << "dense Jacobi multiset matches character formula within 1e-8";
    return true;
  });

  suite.check("kernel/gershgorin-containment", [&](std::ostream& detail) {
    for (int n = 2; n <= options.oracle_max_n; ++n) {
      for (double q : oracle_grid) {
        const double radius = gershgorin_bound(n, TemperaturePoint::numeric(q)).radius_value;
        const DenseSpectrum dense = brute_spectrum(n, TemperaturePoint::numeric(q));
        for (double value : dense.eigenvalues)
          if (value < 1 - radius - 1e-8 || value > 1 + radius + 1e-8) return false;
      }
    }
    detail << "all dense eigenvalues inside [1-r, 1+r]";
    return true;
  });

  suite.check("kernel/interlacing", [&](std::ostream& detail) {
    const std::vector<double> grid = make_grid(1.0, 5.75, 0.25);  // 20 points
    std::vector<SpectrumEvaluator> evaluators;
    for (int n = 2; n <= 6; ++n) evaluators.emplace_back(n);
    for (double q : grid)
      for (size_t i = 0; i + 1 < evaluators.size(); ++i)
        if (evaluators[i + 1].min_eigenvalue(q) > evaluators[i].min_eigenvalue(q) + 1e-10)
          return false;
    detail << "min eigenvalue non-increasing from Sym(N) to Sym(N+1), N = 2..5";
    return true;
  });

  suite.check("schur/frobenius-specialization", [&](std::ostream& detail) {
    for (int n = 1; n <= 7; ++n)
      for (const Partition& lambda : enumerate_partitions(n))
        for (int x = 1; x <= n; ++x)
          if (Rational(count_ssyt(lambda, x)) != schur_frobenius_specialized(lambda, x))
            return false;
    detail << "tableau counts equal the character-formula specialization (N <= 7)";
    return true;
  });

  suite.check("schur/eigenvalue-certificates", [&](std::ostream& detail) {
    for (int n = 1; n <= 7; ++n) {
      for (int q = 1; q <= n; ++q) {
        const KernelSpectrum spec = spectrum(n, TemperaturePoint::exact(Rational(q)));
        for (const auto& entry : spec.entries)
          if (entry.value != eigenvalue_via_ssyt(entry.partition, q)) return false;
      }
    }
    detail << "SSYT route equals character route exactly (N <= 7, q <= N)";
    return true;
  });

  suite.check("schur/zero-row-law", [&](std::ostream& detail) {
    for (int n = 1; n <= 7; ++n)
      for (const Partition& lambda : enumerate_partitions(n))
        for (int x = 1; x <= n + 1; ++x)
          if ((count_ssyt(lambda, x) == 0) != (lambda.rows() > x)) return false;
    detail << "count vanishes exactly above max_entry rows";
    return true;
  });

  suite.check("chords/star-laws", [&](std::ostream& detail) {
    std::uniform_int_distribution<int> strands(2, 5), length(0, 6);
    for (int round = 0; round < options.random_rounds; ++round) {
      const int n = strands(rng);
      const ChordWord a = random_chord_word(rng, n, length(rng));
      const ChordWord b = random_chord_word(rng, n, length(rng));
      if (star(star(a)) != a) return false;
      if (star(concat(a, b)) != concat(star(b), star(a))) return false;
      if (to_permutation(star(a)) != inverse(to_permutation(a))) return false;
      if (to_permutation(concat(a, b)) != compose(to_permutation(a), to_permutation(b)))
        return false;
    }
    detail << "involution, anti-homomorphism, inverse image";
    return true;
  });

  suite.check("chords/2T-annihilation", [&](std::ostream& detail) {
    std::uniform_int_distribution<int> length(0, 4), n_dist(1, 5);
    for (int round = 0; round < options.random_rounds * 2; ++round) {
      const int strands = 4 + static_cast<int>(rng() % 2);  // need two disjoint chords
      const ChordWord u = random_chord_word(rng, strands, length(rng));
      const ChordWord v = random_chord_word(rng, strands, length(rng));
      // pick two disjoint chords
      std::vector<int> labels(static_cast<size_t>(strands));
      std::iota(labels.begin(), labels.end(), 1);
      std::shuffle(labels.begin(), labels.end(), rng);
      const Chord ij = make_chord(labels[0], labels[1], strands);
      const Chord kl = make_chord(labels[2], labels[3], strands);
      const ChordWord left =
          concat(concat(u, ChordWord(strands, {ij, kl})), v);
      const ChordWord right =
          concat(concat(u, ChordWord(strands, {kl, ij})), v);
      DiagramCombination b = random_combination(rng, strands, 3, 4, 9);
      DiagramCombination wl(strands), wr(strands);
      wl.add_term(left, GaussianRational(Rational(1)));
      wr.add_term(right, GaussianRational(Rational(1)));
      const int n = n_dist(rng);
      if (!(state_eval(wl, b, n) == state_eval(wr, b, n))) return false;
    }
    detail << options.random_rounds * 2 << " randomized instances, exact equality";
    return true;
  });

  // Sign convention for the 4T element, with chords acting left to right:
  // (ik)(ij) + (jk)(ij) - (ij)(ik) - (ij)(jk). Weights kill it because
  // t_ik t_ij = t_ij t_jk and t_jk t_ij = t_ij t_ik as permutations.
  suite.check("chords/4T-annihilation", [&](std::ostream& detail) {
    std::uniform_int_distribution<int> length(0, 4);
    for (int round = 0; round < options.random_rounds * 2; ++round) {
      const int strands = 3 + static_cast<int>(rng() % 3);
      const ChordWord u = random_chord_word(rng, strands, length(rng));
      const ChordWord v = random_chord_word(rng, strands, length(rng));
      std::vector<int> labels(static_cast<size_t>(strands));
      std::iota(labels.begin(), labels.end(), 1);
      std::shuffle(labels.begin(), labels.end(), rng);
      const int i = labels[0], j = labels[1], k = labels[2];
      const Chord ij = make_chord(i, j, strands);
      const Chord ik = make_chord(i, k, strands);
      const Chord jk = make_chord(j, k, strands);
      DiagramCombination element(strands);
      const GaussianRational one{Rational(1)}, minus_one{Rational(-1)};
      element.add_term(concat(concat(u, ChordWord(strands, {ik, ij})), v), one);
      element.add_term(concat(concat(u, ChordWord(strands, {jk, ij})), v), one);
      element.add_term(concat(concat(u, ChordWord(strands, {ij, ik})), v), minus_one);
      element.add_term(concat(concat(u, ChordWord(strands, {ij, jk})), v), minus_one);
      for (int n = 1; n <= 5; ++n)
        if (!weight_gl_n(element, n).is_zero()) return false;
    }
    detail << options.random_rounds * 2 << " randomized instances, exact zero for n <= 5";
    return true;
  });

  suite.check("chords/state-positivity", [&](std::ostream& detail) {
    std::uniform_int_distribution<int> strands(2, 5);
    for (int round = 0; round < options.random_rounds; ++round) {
      const DiagramCombination a = random_combination(rng, strands(rng), 6, 5, 9);
      for (int n = 1; n <= 5; ++n) {
        const GaussianRational value = state_eval(a, a, n);
        if (!value.is_real() || value.re < 0) return false;
      }
    }
    detail << options.random_rounds << " random combinations, exactly real and non-negative";
    return true;
  });

  suite.check("oracle/tensor-trace", [&](std::ostream& detail) {
    std::uniform_int_distribution<int> strands(2, 5), length(0, 6), n_dist(1, 4);
    for (int round = 0; round < options.random_rounds * 2; ++round) {
      const int s = strands(rng);
      const ChordWord word = random_chord_word(rng, s, length(rng));
      const int n = n_dist(rng);
      if (tensor_trace_weight(word, n) != weight_gl_n(word, n)) return false;
      const Permutation sigma = to_permutation(word);
      const std::uint64_t count = count_fixed_multi_indices(sigma, n);
      std::uint64_t expected = 1;
      for (int c = 0; c < num_cycles(sigma); ++c) expected *= static_cast<std::uint64_t>(n);
      if (count != expected) return false;
      if (count != count_fixed_multi_indices_serial(sigma, n)) return false;
    }
    detail << "fixed-index count equals n^cycles and matches the weight";
    return true;
  });

  suite.check("oracle/jacobi-agreement", [&](std::ostream& detail) {
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    for (int round = 0; round < 10; ++round) {
      const size_t side = 5 + rng() % 40;
      std::vector<double> matrix(side * side);
      for (size_t i = 0; i < side; ++i)
        for (size_t j = i; j < side; ++j) matrix[i * side + j] = matrix[j * side + i] = entry(rng);
      const auto serial = jacobi_eigenvalues_serial(matrix, side);
      const auto parallel = jacobi_eigenvalues(matrix, side);
      for (size_t i = 0; i < side; ++i)
        if (std::abs(serial[i] - parallel[i]) > 1e-9) return false;
    }
    detail << "serial and tournament-parallel sweeps agree within 1e-9";
    return true;
  });

  return suite.results;
}

}  // namespace cayley
