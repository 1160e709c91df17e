#include "cayley/schur.hpp"

#include <stdexcept>
#include <vector>

#include "cayley/character.hpp"

namespace cayley {

BigInt count_ssyt(const Partition& shape, int max_entry) {
  if (max_entry < 1) throw std::invalid_argument("count_ssyt: max_entry must be positive");
  if (shape.empty()) return 1;
  if (shape.rows() > max_entry) return 0;

  const auto& parts = shape.parts();
  const size_t rows = parts.size();
  std::vector<std::vector<int>> entries(rows);
  for (size_t i = 0; i < rows; ++i) entries[i].assign(static_cast<size_t>(parts[i]), 0);

  // Row-major backtracking; each cell ranges over values compatible with its
  // left and upper neighbours.
  BigInt count = 0;
  auto fill = [&](auto&& self, size_t row, size_t col) -> void {
    if (row == rows) {
      ++count;
      return;
    }
    const size_t next_row = col + 1 < entries[row].size() ? row : row + 1;
    const size_t next_col = col + 1 < entries[row].size() ? col + 1 : 0;
    int low = col > 0 ? entries[row][col - 1] : 1;
    if (row > 0 && col < entries[row - 1].size()) low = std::max(low, entries[row - 1][col] + 1);
    for (int value = low; value <= max_entry; ++value) {
      entries[row][col] = value;
      self(self, next_row, next_col);
    }
  };
  fill(fill, 0, 0);
  return count;
}

Rational schur_frobenius_specialized(const Partition& shape, int max_entry) {
  if (max_entry < 1)
    throw std::invalid_argument("schur_frobenius_specialized: max_entry must be positive");
  const int n = shape.weight();
  BigInt sum = 0;
  for (const Partition& mu : enumerate_partitions(n))
    sum += class_size(mu) * character(shape, mu) *
           int_pow(BigInt(max_entry), static_cast<unsigned>(mu.rows()));
  Rational result(sum, factorial(static_cast<unsigned>(n)));
  result.canonicalize();
  return result;
}

Rational eigenvalue_via_ssyt(const Partition& shape, int n) {
  if (n < 1) throw std::invalid_argument("eigenvalue_via_ssyt: n must be positive");
  const unsigned weight = static_cast<unsigned>(shape.weight());
  Rational result(count_ssyt(shape, n) * factorial(weight),
                  dimension(shape) * int_pow(BigInt(n), weight));
  result.canonicalize();
  return result;
}

}  // namespace cayley
