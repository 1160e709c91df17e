#include "cayley/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cayley {

TemperaturePoint TemperaturePoint::exact(Rational q) {
  if (q <= 0) throw std::invalid_argument("TemperaturePoint: exp_beta must be positive");
  TemperaturePoint point;
  point.numeric_ = to_double(q);
  point.exact_ = std::move(q);
  return point;
}

TemperaturePoint TemperaturePoint::numeric(double q) {
  if (!std::isfinite(q) || q <= 0)
    throw std::invalid_argument("TemperaturePoint: exp_beta must be positive and finite");
  TemperaturePoint point;
  point.numeric_ = q;
  return point;
}

const Rational& TemperaturePoint::exact_value() const {
  if (!exact_) throw std::logic_error("TemperaturePoint: numeric point has no exact value");
  return *exact_;
}

TemperaturePoint parse_temperature(std::string_view text) {
  if (text.find('.') != std::string_view::npos || text.find('e') != std::string_view::npos ||
      text.find('E') != std::string_view::npos) {
    size_t used = 0;
    double value = 0;
    const std::string owned(text);
    try {
      value = std::stod(owned, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_temperature: malformed value '" + owned + "'");
    }
    if (used != owned.size())
      throw std::invalid_argument("parse_temperature: malformed value '" + owned + "'");
    return TemperaturePoint::numeric(value);
  }
  return TemperaturePoint::exact(parse_rational(text));
}

const SpectrumEntry& KernelSpectrum::min_entry() const {
  if (entries.empty()) throw std::logic_error("KernelSpectrum: empty spectrum");
  const SpectrumEntry* best = &entries.front();
  for (const SpectrumEntry& entry : entries) {
    const bool smaller = exact ? entry.value < best->value : entry.value_num < best->value_num;
    if (smaller) best = &entry;
  }
  return *best;
}

Rational KernelSpectrum::trace() const {
  if (!exact) throw std::logic_error("KernelSpectrum: trace requires exact mode");
  Rational total = 0;
  for (const SpectrumEntry& entry : entries) total += entry.value * Rational(entry.multiplicity);
  return total;
}

const SpectrumEntry* KernelSpectrum::find(const Partition& partition) const {
  for (const SpectrumEntry& entry : entries)
    if (entry.partition == partition) return &entry;
  return nullptr;
}

KernelSpectrum spectrum(int n, const TemperaturePoint& point) {
  if (n < 1) throw std::invalid_argument("spectrum: N must be at least 1");
  const std::vector<Partition> partitions = enumerate_partitions(n);
  KernelSpectrum result;
  result.n_elements = n;
  result.exact = point.is_exact();
  result.entries.reserve(partitions.size());

  std::vector<BigInt> sizes(partitions.size());
  for (size_t c = 0; c < partitions.size(); ++c) sizes[c] = class_size(partitions[c]);

  if (point.is_exact()) {
    const Rational& q = point.exact_value();
    std::vector<Rational> q_pow_rows(partitions.size());
    for (size_t c = 0; c < partitions.size(); ++c)
      q_pow_rows[c] = rat_pow(q, partitions[c].rows());
    const Rational q_pow_minus_n = rat_pow(q, -n);
    for (const Partition& irrep : partitions) {
      const BigInt dim = dimension(irrep);
      Rational sum = 0;
      for (size_t c = 0; c < partitions.size(); ++c)
        sum += Rational(sizes[c] * character(irrep, partitions[c])) * q_pow_rows[c];
      const Rational value = q_pow_minus_n * sum / Rational(dim);
      result.entries.push_back({irrep, value, to_double(value), dim * dim});
    }
  } else {
    const double q = point.value();
    for (const Partition& irrep : partitions) {
      const BigInt dim = dimension(irrep);
      double sum = 0;
      for (size_t c = 0; c < partitions.size(); ++c)
        sum += to_double(BigInt(sizes[c] * character(irrep, partitions[c]))) *
               std::pow(q, partitions[c].rows());
      const double value = std::pow(q, -n) * sum / to_double(dim);
      result.entries.push_back({irrep, Rational(0), value, dim * dim});
    }
  }
  return result;
}

Rational eigenvalue_trivial(int n, const Rational& q) {
  Rational product = 1;
  for (int k = 0; k < n; ++k) product *= q + k;
  return rat_pow(q, -n) * product;
}

Rational eigenvalue_sign(int n, const Rational& q) {
  Rational product = 1;
  for (int k = 0; k < n; ++k) product *= q - k;
  return rat_pow(q, -n) * product;
}

double eigenvalue_trivial(int n, double q) {
  double product = 1;
  for (int k = 0; k < n; ++k) product *= q + k;
  return std::pow(q, -n) * product;
}

double eigenvalue_sign(int n, double q) {
  double product = 1;
  for (int k = 0; k < n; ++k) product *= q - k;
  return std::pow(q, -n) * product;
}

std::vector<std::vector<Rational>> kernel_matrix_exact(int n, const Rational& q) {
  if (q <= 0) throw std::invalid_argument("kernel_matrix_exact: exp_beta must be positive");
  const std::vector<Permutation> group = enumerate_group(n);
  const size_t side = group.size();
  // Distances on Sym(N) take values 0..N-1; precompute the N powers.
  std::vector<Rational> powers(static_cast<size_t>(n));
  for (int d = 0; d < n; ++d) powers[static_cast<size_t>(d)] = rat_pow(q, -d);
  std::vector<std::vector<Rational>> matrix(side, std::vector<Rational>(side));
  for (size_t row = 0; row < side; ++row) {
    const Permutation inv = inverse(group[row]);
    for (size_t col = row; col < side; ++col) {
      const int d = n - num_cycles(compose(inv, group[col]));
      matrix[row][col] = powers[static_cast<size_t>(d)];
      matrix[col][row] = matrix[row][col];
    }
  }
  return matrix;
}

std::vector<double> kernel_matrix_numeric(int n, double q) {
  if (!(q > 0)) throw std::invalid_argument("kernel_matrix_numeric: exp_beta must be positive");
  const std::vector<Permutation> group = enumerate_group(n);
  const size_t side = group.size();
  std::vector<double> powers(static_cast<size_t>(n));
  for (int d = 0; d < n; ++d) powers[static_cast<size_t>(d)] = std::pow(q, -d);
  std::vector<double> matrix(side * side);
#pragma omp parallel for schedule(static)
  for (long row = 0; row < static_cast<long>(side); ++row) {
    const Permutation inv = inverse(group[static_cast<size_t>(row)]);
    for (size_t col = static_cast<size_t>(row); col < side; ++col) {
      const int d = n - num_cycles(compose(inv, group[col]));
      matrix[static_cast<size_t>(row) * side + col] = powers[static_cast<size_t>(d)];
      matrix[col * side + static_cast<size_t>(row)] = powers[static_cast<size_t>(d)];
    }
  }
  return matrix;
}

GershgorinBound gershgorin_bound(int n, const TemperaturePoint& point) {
  if (n < 1) throw std::invalid_argument("gershgorin_bound: N must be at least 1");
  GershgorinBound bound;
  bound.exact = point.is_exact();
  if (point.is_exact()) {
    const Rational& q = point.exact_value();
    bound.radius = eigenvalue_trivial(n, q) - 1;
    bound.radius_value = to_double(bound.radius);
    bound.certified_positive = bound.radius < 1;
    bound.half_radius_certified = bound.radius < 2;
  } else {
    bound.radius_value = eigenvalue_trivial(n, point.value()) - 1.0;
    // Floats can sit on the fence; demand a margin before certifying.
    bound.certified_positive = bound.radius_value < 1.0 - 1e-9;
    bound.half_radius_certified = bound.radius_value < 2.0 - 1e-9;
  }
  bound.threshold_full = n == 1 ? 0.0 : (n - 1) / (std::pow(2.0, 1.0 / n) - 1.0);
  bound.threshold_half = n == 1 ? 0.0 : (n - 1) / (std::pow(3.0, 1.0 / n) - 1.0);
  return bound;
}

namespace {

// prod_{k=0}^{n-1} (x + offset_sign*k) expanded to a coefficient vector.
std::vector<BigInt> product_coefficients(int n, int offset_sign) {
  std::vector<BigInt> coeffs{1};
  for (int k = 0; k < n; ++k) {
    std::vector<BigInt> next(coeffs.size() + 1);
    const BigInt shift = BigInt(offset_sign) * k;
    for (size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] += shift * coeffs[j];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace

PolynomialIdentityReport verify_polynomial_identities(int n) {
  PolynomialIdentityReport report;
  report.n = n;
  report.cycle_coeffs_enumerated.assign(static_cast<size_t>(n) + 1, BigInt(0));
  report.signed_coeffs_enumerated.assign(static_cast<size_t>(n) + 1, BigInt(0));
  for (const Permutation& sigma : enumerate_group(n)) {
    const size_t cycles = static_cast<size_t>(num_cycles(sigma));
    report.cycle_coeffs_enumerated[cycles] += 1;
    report.signed_coeffs_enumerated[cycles] += sign(sigma);
  }
  report.cycle_coeffs_product = product_coefficients(n, +1);
  report.signed_coeffs_product = product_coefficients(n, -1);
  report.unsigned_ok = report.cycle_coeffs_enumerated == report.cycle_coeffs_product;
  report.signed_ok = report.signed_coeffs_enumerated == report.signed_coeffs_product;
  return report;
}

bool polynomial_identities_by_evaluation(int n) {
  const std::vector<Partition> partitions = enumerate_partitions(n);
  std::vector<BigInt> sizes(partitions.size());
  for (size_t c = 0; c < partitions.size(); ++c) sizes[c] = class_size(partitions[c]);
  for (int x = 1; x <= n + 1; ++x) {
    const BigInt big_x(x);
    BigInt lhs_unsigned = 0, lhs_signed = 0;
    for (size_t c = 0; c < partitions.size(); ++c) {
      const BigInt term = sizes[c] * int_pow(big_x, static_cast<unsigned>(partitions[c].rows()));
      lhs_unsigned += term;
      lhs_signed += class_parity(partitions[c]) * term;
    }
    BigInt rhs_unsigned = 1, rhs_signed = 1;
    for (int k = 0; k < n; ++k) {
      rhs_unsigned *= big_x + k;
      rhs_signed *= big_x - k;
    }
    if (lhs_unsigned != rhs_unsigned || lhs_signed != rhs_signed) return false;
  }
  return true;
}

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::Indefinite: return "Indefinite";
    case Phase::PositiveSemiDefinite: return "PositiveSemiDefinite";
    case Phase::PositiveDefinite: return "PositiveDefinite";
    case Phase::Unknown: return "Unknown";
  }
  return "Unknown";
}

const char* to_string(VerdictSource source) {
  switch (source) {
    case VerdictSource::Theorem: return "Theorem";
    case VerdictSource::ComputedExact: return "ComputedExact";
    case VerdictSource::ComputedNumeric: return "ComputedNumeric";
  }
  return "Theorem";
}

namespace {

Phase theorem_phase_exact(int n, const Rational& q) {
  if (q.get_den() == 1) {
    const BigInt& k = q.get_num();
    if (k >= 1 && k <= n - 1) return Phase::PositiveSemiDefinite;
    if (k >= n) return Phase::PositiveDefinite;
  } else if (q > 1 && q < n - 1) {
    return Phase::Indefinite;
  }
  return Phase::Unknown;
}

Phase theorem_phase_numeric(int n, double q) {
  const bool integral = q == std::floor(q);
  if (integral) {
    if (q >= 1 && q <= n - 1) return Phase::PositiveSemiDefinite;
    if (q >= n) return Phase::PositiveDefinite;
  } else if (q > 1 && q < n - 1) {
    return Phase::Indefinite;
  }
  return Phase::Unknown;
}

}  // namespace

PhaseReport classify_phase(int n, const TemperaturePoint& point) {
  PhaseReport report;
  report.theorem.source = VerdictSource::Theorem;
  report.theorem.phase = point.is_exact() ? theorem_phase_exact(n, point.exact_value())
                                          : theorem_phase_numeric(n, point.value());
  if (report.theorem.phase == Phase::Unknown) {
    // Gershgorin certificates: radius < 1, or the half-radius refinement once
    // the two unit-multiplicity eigenvalues are positive (exp_beta > N-1).
    const GershgorinBound bound = gershgorin_bound(n, point);
    const bool above_n_minus_1 =
        point.is_exact() ? point.exact_value() > n - 1 : point.value() > static_cast<double>(n - 1);
    if (bound.certified_positive || (above_n_minus_1 && bound.half_radius_certified))
      report.theorem.phase = Phase::PositiveDefinite;
  }

  const KernelSpectrum spec = spectrum(n, point);
  const SpectrumEntry& min_entry = spec.min_entry();
  report.computed.witness = min_entry.partition;
  report.min_eigenvalue_num = min_entry.value_num;
  if (spec.exact) {
    report.computed.source = VerdictSource::ComputedExact;
    report.min_eigenvalue = min_entry.value;
    if (min_entry.value < 0)
      report.computed.phase = Phase::Indefinite;
    else if (min_entry.value == 0)
      report.computed.phase = Phase::PositiveSemiDefinite;
    else
      report.computed.phase = Phase::PositiveDefinite;
  } else {
    report.computed.source = VerdictSource::ComputedNumeric;
    double max_abs = 0;
    for (const SpectrumEntry& entry : spec.entries)
      max_abs = std::max(max_abs, std::abs(entry.value_num));
    const double zero_band = 1e-9 * std::max(1.0, max_abs);
    if (min_entry.value_num < -zero_band)
      report.computed.phase = Phase::Indefinite;
    else if (min_entry.value_num > zero_band)
      report.computed.phase = Phase::PositiveDefinite;
    else
      report.computed.phase = Phase::Unknown;  // never claim exact zeros from floats
  }

  report.agree = report.theorem.phase == Phase::Unknown ||
                 report.computed.phase == Phase::Unknown ||
                 report.theorem.phase == report.computed.phase;
  return report;
}

SpectrumEvaluator::SpectrumEvaluator(int n) : n_(n), partitions_(enumerate_partitions(n)) {
  const size_t count = partitions_.size();
  dims_.resize(count);
  class_sizes_.resize(count);
  class_rows_.resize(count);
  chars_.assign(count, std::vector<double>(count));
  for (size_t c = 0; c < count; ++c) {
    class_sizes_[c] = to_double(class_size(partitions_[c]));
    class_rows_[c] = partitions_[c].rows();
  }
  for (size_t r = 0; r < count; ++r) {
    dims_[r] = to_double(dimension(partitions_[r]));
    for (size_t c = 0; c < count; ++c)
      chars_[r][c] = to_double(character(partitions_[r], partitions_[c]));
  }
}

std::vector<double> SpectrumEvaluator::eigenvalues(double q) const {
  const size_t count = partitions_.size();
  std::vector<double> q_pow_rows(count);
  for (size_t c = 0; c < count; ++c) q_pow_rows[c] = std::pow(q, class_rows_[c]);
  const double q_pow_minus_n = std::pow(q, -n_);
  std::vector<double> values(count);
  for (size_t r = 0; r < count; ++r) {
    double sum = 0;
    for (size_t c = 0; c < count; ++c) sum += class_sizes_[c] * chars_[r][c] * q_pow_rows[c];
    values[r] = q_pow_minus_n * sum / dims_[r];
  }
  return values;
}

double SpectrumEvaluator::min_eigenvalue(double q) const {
  const std::vector<double> values = eigenvalues(q);
  return *std::min_element(values.begin(), values.end());
}

std::vector<SweepRow> sweep_min_eigenvalue(int n, const std::vector<double>& grid,
                                           int scale_exponent) {
  for (double q : grid)
    if (!(q > 0)) throw std::invalid_argument("sweep_min_eigenvalue: grid values must be positive");
  const int exponent = scale_exponent < 0 ? n - 1 : scale_exponent;
  const SpectrumEvaluator evaluator(n);
  std::vector<SweepRow> rows(grid.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(grid.size()); ++i) {
    const double q = grid[static_cast<size_t>(i)];
    const double min_eig = evaluator.min_eigenvalue(q);
    rows[static_cast<size_t>(i)] = {q, min_eig, min_eig * std::pow(q, exponent)};
  }
  return rows;
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0)) throw std::invalid_argument("make_grid: step must be positive");
  if (stop < start) throw std::invalid_argument("make_grid: stop must be at least start");
  std::vector<double> grid;
  for (long i = 0;; ++i) {
    const double value = start + static_cast<double>(i) * step;
    if (value > stop + step / 2) break;
    grid.push_back(value);
  }
  return grid;
}

}  // namespace cayley
