#include "cayley/character.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace cayley {

namespace {

// First-column hook lengths beta_i = lambda_i + rows - i. Removing a border
// strip of length t corresponds to lowering one beta number by t without
// colliding with another; the strip height is the number of beta numbers
// jumped over, which fixes the sign.
std::vector<int> beta_set(const std::vector<int>& parts) {
  const int rows = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < rows; ++i) beta[static_cast<size_t>(i)] = parts[static_cast<size_t>(i)] + (rows - 1 - i);
  return beta;
}

std::vector<int> partition_from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int rows = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < rows; ++i) {
    const int part = beta[static_cast<size_t>(i)] - (rows - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

}  // namespace

class CharacterCache {
 public:
  static CharacterCache& instance() {
    static CharacterCache cache;
    return cache;
  }

  BigInt get(const Partition& lambda, const Partition& mu) {
    const Key key{lambda.parts(), mu.parts()};
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    BigInt value = compute(lambda.parts(), mu.parts());
    {
      std::unique_lock lock(mutex_);
      values_.emplace(key, value);
    }
    return value;
  }

 private:
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  BigInt compute(const std::vector<int>& lambda, const std::vector<int>& mu) {
    if (mu.empty()) return 1;
    const int strip = mu.front();
    const std::vector<int> rest(mu.begin() + 1, mu.end());
    const std::vector<int> beta = beta_set(lambda);
    BigInt total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
      const int lowered = beta[i] - strip;
      if (lowered < 0) continue;
      if (std::find(beta.begin(), beta.end(), lowered) != beta.end()) continue;
      int height = 0;
      for (int b : beta)
        if (b > lowered && b < beta[i]) ++height;
      std::vector<int> next_beta = beta;
      next_beta[i] = lowered;
      const Partition next(partition_from_beta(std::move(next_beta)), Partition::unchecked_tag{});
      const Partition remaining(rest, Partition::unchecked_tag{});
      const BigInt sub = get(next, remaining);
      total += (height % 2 == 0) ? sub : -sub;
    }
    return total;
  }

  std::shared_mutex mutex_;
  std::map<Key, BigInt> values_;
};

BigInt character(const Partition& irrep, const Partition& conjugacy_class) {
  if (irrep.weight() != conjugacy_class.weight())
    throw std::invalid_argument("character: irrep and class label different weights");
  return CharacterCache::instance().get(irrep, conjugacy_class);
}

BigInt dimension(const Partition& irrep) {
  if (irrep.empty()) return 1;
  const auto& parts = irrep.parts();
  const Partition conj = conjugate(irrep);
  BigInt hook_product = 1;
  for (size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) {
      const int arm = parts[i] - (j + 1);
      const int leg = conj.parts()[static_cast<size_t>(j)] - (static_cast<int>(i) + 1);
      hook_product *= arm + leg + 1;
    }
  return factorial(static_cast<unsigned>(irrep.weight())) / hook_product;
}

CharacterTable::CharacterTable(int n) : n_(n), partitions_(enumerate_partitions(n)) {
  values_.resize(partitions_.size());
  for (size_t row = 0; row < partitions_.size(); ++row) {
    values_[row].resize(partitions_.size());
    for (size_t col = 0; col < partitions_.size(); ++col)
      values_[row][col] = character(partitions_[row], partitions_[col]);
  }
}

}  // namespace cayley
