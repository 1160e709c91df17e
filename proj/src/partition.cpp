#include "cayley/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cayley {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions: N must be at least 1");
  std::vector<Partition> result;
  std::vector<int> current;
  // Descend on the largest allowed part; this emits reverse lexicographic order.
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      result.push_back(Partition(current, Partition::unchecked_tag{}));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);
  return result;
}

BigInt centralizer_order(const Partition& mu) {
  BigInt z = 1;
  const auto& parts = mu.parts();
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const unsigned multiplicity = static_cast<unsigned>(j - i);
    z *= int_pow(BigInt(parts[i]), multiplicity) * factorial(multiplicity);
    i = j;
  }
  return z;
}

BigInt class_size(const Partition& mu) {
  return factorial(static_cast<unsigned>(mu.weight())) / centralizer_order(mu);
}

int class_parity(const Partition& mu) {
  return (mu.weight() - mu.rows()) % 2 == 0 ? 1 : -1;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  if (!lambda.empty()) {
    parts.resize(static_cast<size_t>(lambda.parts().front()), 0);
    for (int part : lambda.parts())
      for (int j = 0; j < part; ++j) ++parts[static_cast<size_t>(j)];
  }
  return Partition(std::move(parts), Partition::unchecked_tag{});
}

Partition cycle_type(const Permutation& sigma) {
  return Partition(cycle_lengths(sigma), Partition::unchecked_tag{});
}

std::string to_string(const Partition& lambda) {
  std::string text;
  for (size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i > 0) text += '+';
    text += std::to_string(lambda.parts()[i]);
  }
  return text;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t plus = std::min(text.find('+', pos), text.size());
    const std::string token(text.substr(pos, plus - pos));
    if (token.empty()) throw std::invalid_argument("parse_partition: empty part");
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_partition: malformed part '" + token + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("parse_partition: malformed part '" + token + "'");
    parts.push_back(value);
    if (plus == text.size()) break;
    pos = plus + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace cayley
