#include "cayley/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace cayley {

namespace {

double frobenius_norm(const std::vector<double>& a) {
  double sum = 0;
  for (double v : a) sum += v * v;
  return std::sqrt(sum);
}

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += 2 * a[i * n + j] * a[i * n + j];
  return std::sqrt(sum);
}

struct Rotation {
  std::size_t p, q;
  double c, s;
};

Rotation make_rotation(const std::vector<double>& a, std::size_t n, std::size_t p, std::size_t q) {
  const double apq = a[p * n + q];
  const double tau = (a[q * n + q] - a[p * n + p]) / (2 * apq);
  const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
  const double c = 1 / std::sqrt(1 + t * t);
  return {p, q, c, t * c};
}

std::vector<double> sorted_diagonal(const std::vector<double>& a, std::size_t n) {
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[i * n + i];
  std::sort(values.begin(), values.end());
  return values;
}

// Round-robin tournament: n-1 rounds (n padded to even), each pairing every
// index exactly once with pairwise-disjoint pairs.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tournament_rounds(std::size_t n) {
  const std::size_t m = n % 2 == 0 ? n : n + 1;
  std::vector<std::size_t> ring(m);
  for (std::size_t i = 0; i < m; ++i) ring[i] = i;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rounds;
  for (std::size_t r = 0; r + 1 < m; ++r) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m / 2; ++i) {
      std::size_t p = ring[i], q = ring[m - 1 - i];
      if (p >= n || q >= n) continue;  // bye slot when n is odd
      if (p > q) std::swap(p, q);
      pairs.emplace_back(p, q);
    }
    rounds.push_back(std::move(pairs));
    // rotate all but the first entry
    std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
  }
  return rounds;
}

}  // namespace

std::vector<double> jacobi_eigenvalues_serial(std::vector<double> a, std::size_t n,
                                              const JacobiOptions& options) {
  if (a.size() != n * n) throw std::invalid_argument("jacobi: matrix size does not match n");
  if (n == 0) return {};
  const double target = options.tolerance * std::max(1.0, frobenius_norm(a));
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= target) return sorted_diagonal(a, n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p * n + q] == 0) continue;
        const Rotation rot = make_rotation(a, n, p, q);
        const double c = rot.c, s = rot.s;
        const double app = a[p * n + p], aqq = a[q * n + q], apq = a[p * n + q];
        const double t = s / c;
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = a[p * n + k] = c * akp - s * akq;
          a[k * n + q] = a[q * n + k] = s * akp + c * akq;
        }
      }
    }
  }
  if (off_diagonal_norm(a, n) <= target) return sorted_diagonal(a, n);
  throw std::runtime_error("jacobi_eigenvalues_serial: no convergence within sweep budget");
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                       const JacobiOptions& options) {
  if (a.size() != n * n) throw std::invalid_argument("jacobi: matrix size does not match n");
  if (n == 0) return {};
  const double target = options.tolerance * std::max(1.0, frobenius_norm(a));
  const auto rounds = tournament_rounds(n);
  std::vector<Rotation> rotations;
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= target) return sorted_diagonal(a, n);
    for (const auto& round : rounds) {
      rotations.clear();
      for (const auto& [p, q] : round)
        if (a[p * n + q] != 0) rotations.push_back(make_rotation(a, n, p, q));
      // A <- J^T A J with J the direct sum of this round's rotations.
      // Disjoint pairs mean disjoint rows (then disjoint columns), so the two
      // phases are free of write conflicts.
#pragma omp parallel for schedule(static)
      for (long r = 0; r < static_cast<long>(rotations.size()); ++r) {
        const Rotation rot = rotations[static_cast<size_t>(r)];
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[rot.p * n + k], aqk = a[rot.q * n + k];
          a[rot.p * n + k] = rot.c * apk - rot.s * aqk;
          a[rot.q * n + k] = rot.s * apk + rot.c * aqk;
        }
      }
#pragma omp parallel for schedule(static)
      for (long r = 0; r < static_cast<long>(rotations.size()); ++r) {
        const Rotation rot = rotations[static_cast<size_t>(r)];
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + rot.p], akq = a[k * n + rot.q];
          a[k * n + rot.p] = rot.c * akp - rot.s * akq;
          a[k * n + rot.q] = rot.s * akp + rot.c * akq;
        }
      }
    }
  }
  if (off_diagonal_norm(a, n) <= target) return sorted_diagonal(a, n);
  throw std::runtime_error("jacobi_eigenvalues: no convergence within sweep budget");
}

}  // namespace cayley
