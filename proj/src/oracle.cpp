#include "cayley/oracle.hpp"

#include <stdexcept>
#include <string>

namespace cayley {

DenseSpectrum brute_spectrum(int n, const TemperaturePoint& point, const JacobiOptions& options) {
  if (n < 1) throw std::invalid_argument("brute_spectrum: N must be at least 1");
  if (n > kBruteSpectrumCap)
    throw std::length_error("brute_spectrum: N = " + std::to_string(n) +
                            " exceeds the dense cap " + std::to_string(kBruteSpectrumCap));
  std::vector<double> matrix = kernel_matrix_numeric(n, point.value());
  std::size_t side = 1;
  for (int k = 2; k <= n; ++k) side *= static_cast<std::size_t>(k);
  return DenseSpectrum{jacobi_eigenvalues(std::move(matrix), side, options)};
}

namespace {

template <bool Parallel>
std::uint64_t count_fixed(const Permutation& sigma, int n) {
  const int strands = sigma.size();
  std::uint64_t total_indices = 1;
  for (int k = 0; k < strands; ++k) total_indices *= static_cast<std::uint64_t>(n);
  // sigma's images as 0-based digit positions
  std::vector<int> target(static_cast<size_t>(strands));
  for (int k = 1; k <= strands; ++k) target[static_cast<size_t>(k) - 1] = sigma(k) - 1;

  std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count) if (Parallel)
  for (long long index = 0; index < static_cast<long long>(total_indices); ++index) {
    int digits[32];
    std::uint64_t rest = static_cast<std::uint64_t>(index);
    for (int k = 0; k < strands; ++k) {
      digits[k] = static_cast<int>(rest % static_cast<std::uint64_t>(n));
      rest /= static_cast<std::uint64_t>(n);
    }
    bool fixed = true;
    for (int k = 0; k < strands; ++k) {
      if (digits[k] != digits[target[static_cast<size_t>(k)]]) {
        fixed = false;
        break;
      }
    }
    count += fixed ? 1 : 0;
  }
  return count;
}

}  // namespace

std::uint64_t count_fixed_multi_indices(const Permutation& sigma, int n) {
  return count_fixed<true>(sigma, n);
}

std::uint64_t count_fixed_multi_indices_serial(const Permutation& sigma, int n) {
  return count_fixed<false>(sigma, n);
}

Rational tensor_trace_weight(const ChordWord& word, int n, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("tensor_trace_weight: n must be positive");
  std::uint64_t total = 1;
  for (int k = 0; k < word.n_strands(); ++k) {
    total *= static_cast<std::uint64_t>(n);
    if (total > budget)
      throw std::length_error("tensor_trace_weight: n^N exceeds the budget of " +
                              std::to_string(budget) + " multi-indices");
  }
  if (word.n_strands() > 31)
    throw std::length_error("tensor_trace_weight: too many strands");
  const std::uint64_t trace = count_fixed_multi_indices(to_permutation(word), n);
  Rational result(BigInt(static_cast<unsigned long>(trace)),
                  int_pow(BigInt(n), static_cast<unsigned>(word.n_strands())));
  result.canonicalize();
  return result;
}

}  // namespace cayley
