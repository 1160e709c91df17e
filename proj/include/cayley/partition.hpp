#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/numeric.hpp"
#include "cayley/permutation.hpp"

namespace cayley {

/// Integer partition: weakly decreasing positive parts. The default-constructed
/// value is the empty partition of 0 (used internally by the character recursion).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int weight() const;
  int rows() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  struct unchecked_tag {};
  Partition(std::vector<int> parts, unchecked_tag) : parts_(std::move(parts)) {}

  std::vector<int> parts_;

  friend std::vector<Partition> enumerate_partitions(int n);
  friend Partition conjugate(const Partition& lambda);
  friend Partition cycle_type(const Permutation& sigma);
  friend class CharacterCache;
};

/// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

/// z_mu = prod_k k^{m_k} m_k! over part multiplicities m_k.
BigInt centralizer_order(const Partition& mu);

/// Size of the conjugacy class with cycle type mu: N!/z_mu.
BigInt class_size(const Partition& mu);

/// Sign of any permutation in the class: (-1)^{N - rows}.
int class_parity(const Partition& mu);

Partition conjugate(const Partition& lambda);

/// Cycle type of sigma as a partition of N.
Partition cycle_type(const Permutation& sigma);

std::string to_string(const Partition& lambda);  // "2+1"
Partition parse_partition(std::string_view text);

}  // namespace cayley
