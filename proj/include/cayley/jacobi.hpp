#pragma once

#include <cstddef>
#include <vector>

namespace cayley {

struct JacobiOptions {
  double tolerance = 1e-12;  // off-diagonal Frobenius norm relative to the input norm
  int max_sweeps = 100;
};

/// Eigenvalues of a dense symmetric matrix (row-major, side n) by cyclic
/// Jacobi rotations, ascending. Throws std::runtime_error if the off-diagonal
/// norm has not dropped below tolerance * ||A||_F within max_sweeps.
std::vector<double> jacobi_eigenvalues_serial(std::vector<double> matrix, std::size_t n,
                                              const JacobiOptions& options = {});

/// Same spectrum via tournament-ordered sweeps: each round applies a set of
/// rotations on pairwise-disjoint index pairs, so row and column updates
/// parallelize without contention. Output is deterministic for a fixed n.
std::vector<double> jacobi_eigenvalues(std::vector<double> matrix, std::size_t n,
                                       const JacobiOptions& options = {});

}  // namespace cayley
