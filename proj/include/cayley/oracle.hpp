#pragma once

#include <cstdint>
#include <vector>

#include "cayley/chord.hpp"
#include "cayley/jacobi.hpp"
#include "cayley/kernel.hpp"
#include "cayley/numeric.hpp"

namespace cayley {

inline constexpr int kBruteSpectrumCap = 6;            // matrix side 720
inline constexpr std::uint64_t kTensorBudget = 10'000'000;

struct DenseSpectrum {
  std::vector<double> eigenvalues;  // ascending, length N!
};

/// Eigenvalues of the explicit N! x N! kernel matrix via the in-repo Jacobi
/// solver. Independent of the character-formula route it cross-checks.
/// Throws std::length_error for n > 6.
DenseSpectrum brute_spectrum(int n, const TemperaturePoint& point,
                             const JacobiOptions& options = {});

/// Number of multi-indices b in {1..n}^N with b_k = b_{sigma(k)} for all k;
/// the trace of the permutation operator on the N-fold tensor power.
std::uint64_t count_fixed_multi_indices(const Permutation& sigma, int n);
std::uint64_t count_fixed_multi_indices_serial(const Permutation& sigma, int n);

/// Weight of a chord word evaluated as n^{-N} times the tensor trace of its
/// permutation operator, counting fixed multi-indices directly (no matrix is
/// materialized). Must agree with weight_gl_n. Throws std::length_error when
/// n^N exceeds the budget.
Rational tensor_trace_weight(const ChordWord& word, int n,
                             std::uint64_t budget = kTensorBudget);

}  // namespace cayley
