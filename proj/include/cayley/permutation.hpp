#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cayley {

/// Permutation of {1..N} in one-line notation: entry k-1 holds sigma(k).
/// Immutable after construction; the constructor validates bijectivity.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<size_t>(k) - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  struct unchecked_tag {};
  Permutation(std::vector<int> images, unchecked_tag) : images_(std::move(images)) {}

  std::vector<int> images_;

  friend std::vector<Permutation> enumerate_group(int n, int cap);
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
};

/// result(k) = outer(inner(k)); the right factor acts first.
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& sigma);

/// Number of orbits of sigma on {1..N}, fixed points included.
int num_cycles(const Permutation& sigma);

/// +1 for even permutations, -1 for odd.
int sign(const Permutation& sigma);

/// Minimal number of transpositions t with sigma2 = sigma1 * t1 * ... * tk,
/// i.e. N - num_cycles(inverse(sigma1) * sigma2).
int cayley_distance(const Permutation& sigma1, const Permutation& sigma2);

/// Cycle lengths of sigma, weakly decreasing; cycle_type in the partition
/// layer wraps them.
std::vector<int> cycle_lengths(const Permutation& sigma);

inline constexpr int kDefaultEnumerationCap = 8;

/// Cap actually in effect: CAYLEY_MAX_ENUM env override, else the default.
int enumeration_cap();

/// All N! permutations in lexicographic one-line order. Throws
/// std::length_error when n exceeds the cap.
std::vector<Permutation> enumerate_group(int n, int cap);
std::vector<Permutation> enumerate_group(int n);

std::string to_string(const Permutation& sigma);          // "2,3,1"
Permutation parse_permutation(std::string_view text);

}  // namespace cayley
