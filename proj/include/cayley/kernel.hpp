#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/character.hpp"
#include "cayley/numeric.hpp"
#include "cayley/partition.hpp"

namespace cayley {

/// Exponentiated inverse temperature q = e^beta. Exact (rational) points feed
/// the exact spectral pipeline; numeric points the floating-point one. The
/// classification semantics differ (floats never certify semi-definiteness),
/// so the mode is part of the value.
class TemperaturePoint {
 public:
  static TemperaturePoint exact(Rational q);
  static TemperaturePoint numeric(double q);

  bool is_exact() const { return exact_.has_value(); }
  const Rational& exact_value() const;
  double value() const { return numeric_; }

 private:
  TemperaturePoint() = default;
  std::optional<Rational> exact_;
  double numeric_ = 0.0;
};

/// "p/q" or an integer string parse to an exact point; anything with a
/// decimal point or exponent parses to a numeric one.
TemperaturePoint parse_temperature(std::string_view text);

struct SpectrumEntry {
  Partition partition;
  Rational value;        // exact eigenvalue; only meaningful in exact mode
  double value_num;      // double view, valid in both modes
  BigInt multiplicity;   // dimension(partition)^2
};

/// Spectrum of the Cayley distance kernel on Sym(N), indexed by partitions of
/// N in enumerate_partitions order. Entries sum (with multiplicity) to N!.
struct KernelSpectrum {
  int n_elements = 0;
  bool exact = false;
  std::vector<SpectrumEntry> entries;

  const SpectrumEntry& min_entry() const;
  Rational trace() const;  // exact mode only
  const SpectrumEntry* find(const Partition& partition) const;
};

/// Eigenvalues via the character formula collapsed over conjugacy classes:
/// eig_lambda = q^{-N}/dim(lambda) * sum_mu class_size(mu) * q^rows(mu) * chi^lambda(mu).
/// Cost is over partitions of N, so this works far beyond the N! enumeration cap.
KernelSpectrum spectrum(int n, const TemperaturePoint& point);

/// Closed forms for the two unit-multiplicity eigenvalues:
/// q^{-N} * prod_{k=0}^{N-1} (q + k) for the trivial irrep (N), and
/// q^{-N} * prod_{k=0}^{N-1} (q - k) for the sign irrep (1^N).
Rational eigenvalue_trivial(int n, const Rational& q);
Rational eigenvalue_sign(int n, const Rational& q);
double eigenvalue_trivial(int n, double q);
double eigenvalue_sign(int n, double q);

/// Dense kernel matrix over Sym(N) in lexicographic enumeration order:
/// entry (s,t) = q^{-cayley_distance(sigma_s, sigma_t)}. Symmetric, unit
/// diagonal. Subject to the group enumeration cap.
std::vector<std::vector<Rational>> kernel_matrix_exact(int n, const Rational& q);
std::vector<double> kernel_matrix_numeric(int n, double q);  // row-major, side N!

struct GershgorinBound {
  bool exact = false;
  Rational radius;               // exact mode only
  double radius_value = 0.0;     // double view, both modes
  bool certified_positive = false;      // radius < 1: every eigenvalue positive
  bool half_radius_certified = false;   // radius/2 < 1: multiplicity>1 eigenvalues positive
  double threshold_full = 0.0;   // (N-1)/(2^{1/N}-1)
  double threshold_half = 0.0;   // (N-1)/(3^{1/N}-1)
};

/// Gershgorin row radius of the kernel: q^{-N} * prod_{k=0}^{N-1}(q+k) - 1.
/// All eigenvalues lie in [1-r, 1+r].
GershgorinBound gershgorin_bound(int n, const TemperaturePoint& point);

struct PolynomialIdentityReport {
  int n = 0;
  std::vector<BigInt> cycle_coeffs_enumerated;   // coeff of x^j in sum_sigma x^{num_cycles}
  std::vector<BigInt> cycle_coeffs_product;      // prod_{k=0}^{n-1} (x + k)
  std::vector<BigInt> signed_coeffs_enumerated;  // with sign(sigma) weights
  std::vector<BigInt> signed_coeffs_product;     // prod_{k=0}^{n-1} (x - k)
  bool unsigned_ok = false;
  bool signed_ok = false;
  bool ok() const { return unsigned_ok && signed_ok; }
};

/// Exact coefficient-vector comparison of the two cycle-counting polynomial
/// identities, with the left sides gathered by full group enumeration.
/// Subject to the enumeration cap.
PolynomialIdentityReport verify_polynomial_identities(int n);

/// Same identities checked without enumeration: both sides evaluated exactly
/// at the n+1 integer points 1..n+1, the left sides via conjugacy-class
/// collapse. Degree-n polynomials agreeing there are equal.
bool polynomial_identities_by_evaluation(int n);

enum class Phase { Indefinite, PositiveSemiDefinite, PositiveDefinite, Unknown };
enum class VerdictSource { Theorem, ComputedExact, ComputedNumeric };

const char* to_string(Phase phase);
const char* to_string(VerdictSource source);

struct PhaseVerdict {
  Phase phase = Phase::Unknown;
  VerdictSource source = VerdictSource::Theorem;
  std::optional<Partition> witness;  // partition achieving the minimal eigenvalue
};

struct PhaseReport {
  PhaseVerdict theorem;   // Unknown where no covered region applies
  PhaseVerdict computed;  // from the spectrum's minimal eigenvalue
  bool agree = false;     // vacuously true when either side is Unknown
  std::optional<Rational> min_eigenvalue;  // exact mode
  double min_eigenvalue_num = 0.0;
};

/// Region-based verdict where a covered region applies (integer points,
/// the indefinite window, Gershgorin certificates), plus the spectrum-based
/// verdict; both are reported. In numeric mode a minimal eigenvalue within
/// 1e-9 * max(1, |eig|_max) of zero yields Unknown rather than a
/// semi-definiteness claim.
PhaseReport classify_phase(int n, const TemperaturePoint& point);

/// Numeric character-formula spectrum specialized for dense grids: the
/// partition data and character table are converted to doubles once.
class SpectrumEvaluator {
 public:
  explicit SpectrumEvaluator(int n);

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::vector<double> eigenvalues(double q) const;  // enumerate_partitions order
  double min_eigenvalue(double q) const;

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::vector<double> dims_;
  std::vector<double> class_sizes_;
  std::vector<int> class_rows_;
  std::vector<std::vector<double>> chars_;
};

struct SweepRow {
  double exp_beta;
  double min_eigenvalue;
  double scaled;  // min_eigenvalue * exp_beta^scale_exponent
};

/// Minimal eigenvalue over a grid of exp_beta values; points are evaluated in
/// parallel but emitted in grid order. scale_exponent < 0 selects the default
/// N-1.
std::vector<SweepRow> sweep_min_eigenvalue(int n, const std::vector<double>& grid,
                                           int scale_exponent = -1);

/// Inclusive grid a:b:step used by the sweep CLI; endpoints included within
/// step/2.
std::vector<double> make_grid(double start, double stop, double step);

}  // namespace cayley
