#include "cayley/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace cayley {

namespace {

void require_same_size(const Permutation& a, const Permutation& b, const char* op) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(op) + ": permutations act on different sets (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("Permutation: N must be at least 1");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<size_t>(v) - 1])
      throw std::invalid_argument("Permutation: images are not a bijection on {1..N}");
    seen[static_cast<size_t>(v) - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity: N must be at least 1");
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images), unchecked_tag{});
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (n < 1) throw std::invalid_argument("transposition: N must be at least 1");
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("transposition: index out of range");
  if (i == j) throw std::invalid_argument("transposition: indices must differ");
  Permutation t = identity(n);
  std::swap(t.images_[static_cast<size_t>(i) - 1], t.images_[static_cast<size_t>(j) - 1]);
  return t;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  require_same_size(outer, inner, "compose");
  std::vector<int> images(inner.images().size());
  for (size_t k = 0; k < images.size(); ++k)
    images[k] = outer.images()[static_cast<size_t>(inner.images()[k]) - 1];
  return Permutation(std::move(images), Permutation::unchecked_tag{});
}

Permutation inverse(const Permutation& sigma) {
  std::vector<int> images(sigma.images().size());
  for (size_t k = 0; k < images.size(); ++k)
    images[static_cast<size_t>(sigma.images()[k]) - 1] = static_cast<int>(k) + 1;
  return Permutation(std::move(images), Permutation::unchecked_tag{});
}

int num_cycles(const Permutation& sigma) {
  std::vector<char> visited(sigma.images().size(), 0);
  int cycles = 0;
  for (int start = 1; start <= sigma.size(); ++start) {
    if (visited[static_cast<size_t>(start) - 1]) continue;
    ++cycles;
    int k = start;
    while (!visited[static_cast<size_t>(k) - 1]) {
      visited[static_cast<size_t>(k) - 1] = 1;
      k = sigma(k);
    }
  }
  return cycles;
}

int sign(const Permutation& sigma) {
  // Parity of N - num_cycles: each cycle of length L contributes L-1 transpositions.
  return (sigma.size() - num_cycles(sigma)) % 2 == 0 ? 1 : -1;
}

int cayley_distance(const Permutation& sigma1, const Permutation& sigma2) {
  require_same_size(sigma1, sigma2, "cayley_distance");
  return sigma1.size() - num_cycles(compose(inverse(sigma1), sigma2));
}

std::vector<int> cycle_lengths(const Permutation& sigma) {
  std::vector<char> visited(sigma.images().size(), 0);
  std::vector<int> lengths;
  for (int start = 1; start <= sigma.size(); ++start) {
    if (visited[static_cast<size_t>(start) - 1]) continue;
    int length = 0;
    int k = start;
    while (!visited[static_cast<size_t>(k) - 1]) {
      visited[static_cast<size_t>(k) - 1] = 1;
      k = sigma(k);
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int enumeration_cap() {
  if (const char* env = std::getenv("CAYLEY_MAX_ENUM")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1) return static_cast<int>(value);
  }
  return kDefaultEnumerationCap;
}

std::vector<Permutation> enumerate_group(int n, int cap) {
  if (n < 1) throw std::invalid_argument("enumerate_group: N must be at least 1");
  if (n > cap)
    throw std::length_error("enumerate_group: N = " + std::to_string(n) +
                            " exceeds the enumeration cap " + std::to_string(cap));
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> group;
  do {
    group.push_back(Permutation(images, Permutation::unchecked_tag{}));
  } while (std::next_permutation(images.begin(), images.end()));
  return group;
}

std::vector<Permutation> enumerate_group(int n) { return enumerate_group(n, enumeration_cap()); }

std::string to_string(const Permutation& sigma) {
  std::string text;
  for (size_t k = 0; k < sigma.images().size(); ++k) {
    if (k > 0) text += ',';
    text += std::to_string(sigma.images()[k]);
  }
  return text;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> images;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token(text.substr(pos, comma - pos));
    if (token.empty()) throw std::invalid_argument("parse_permutation: empty entry");
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_permutation: malformed entry '" + token + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("parse_permutation: malformed entry '" + token + "'");
    images.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return Permutation(std::move(images));
}

}  // namespace cayley
