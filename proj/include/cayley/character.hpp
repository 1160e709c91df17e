#pragma once

#include <cstddef>
#include <vector>

#include "cayley/numeric.hpp"
#include "cayley/partition.hpp"

namespace cayley {

/// Irreducible character chi^{lambda}(mu) of Sym(N), exact.
///
/// Computed by the Murnaghan-Nakayama recursion over border strips, removing
/// the largest remaining part of mu at each step; results are memoized
/// process-wide behind a shared mutex (duplicate computation is harmless, the
/// value is deterministic). Throws std::invalid_argument when lambda and mu
/// are partitions of different weights.
BigInt character(const Partition& irrep, const Partition& conjugacy_class);

/// Dimension of the irreducible representation labeled by lambda, via the
/// hook length formula. Equals character(lambda, (1^N)).
BigInt dimension(const Partition& irrep);

/// Full character table of Sym(N), rows and columns in enumerate_partitions
/// order (rows index irreps, columns index conjugacy classes).
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  const BigInt& value(std::size_t irrep_index, std::size_t class_index) const {
    return values_[irrep_index][class_index];
  }

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::vector<std::vector<BigInt>> values_;
};

}  // namespace cayley
