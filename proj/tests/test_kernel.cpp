#include "doctest.h"

#include <cmath>

#include "cayley/kernel.hpp"

using namespace cayley;

TEST_CASE("temperature points") {
  CHECK(TemperaturePoint::exact(Rational(2)).is_exact());
  CHECK(TemperaturePoint::exact(Rational(3, 2)).value() == doctest::Approx(1.5));
  CHECK_FALSE(TemperaturePoint::numeric(1.5).is_exact());
  CHECK_THROWS_AS(TemperaturePoint::exact(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(TemperaturePoint::exact(Rational(-2)), std::invalid_argument);
  CHECK_THROWS_AS(TemperaturePoint::numeric(0.0), std::invalid_argument);

  CHECK(parse_temperature("2").is_exact());
  CHECK(parse_temperature("3/2").is_exact());
  CHECK(parse_temperature("3/2").exact_value() == Rational(3, 2));
  CHECK_FALSE(parse_temperature("1.5").is_exact());
  CHECK_FALSE(parse_temperature("2.718e0").is_exact());
  CHECK_THROWS_AS(parse_temperature("zero"), std::invalid_argument);
  CHECK_THROWS_AS(parse_temperature("-1/2"), std::invalid_argument);
}

TEST_CASE("kernel matrix small cases") {
  const auto two = kernel_matrix_exact(2, Rational(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0][0] == Rational(1));
  CHECK(two[0][1] == Rational(1, 2));
  CHECK(two[1][0] == Rational(1, 2));
  CHECK(two[1][1] == Rational(1));

  const auto ones = kernel_matrix_exact(3, Rational(1));
  for (const auto& row : ones)
    for (const auto& entry : row) CHECK(entry == Rational(1));

  const auto three = kernel_matrix_exact(3, Rational(5));
  const auto group = enumerate_group(3);
  for (size_t r = 0; r < group.size(); ++r) {
    CHECK(three[r][r] == Rational(1));
    for (size_t c = 0; c < group.size(); ++c) {
      CHECK(three[r][c] == three[c][r]);
      CHECK(three[r][c] == rat_pow(Rational(5), -cayley_distance(group[r], group[c])));
    }
  }
}

TEST_CASE("spectrum reproduces the closed forms on three elements") {
  for (const Rational& q :
       {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3), Rational(10)}) {
    const KernelSpectrum spec = spectrum(3, TemperaturePoint::exact(q));
    REQUIRE(spec.entries.size() == 3);
    const Rational q2 = q * q;
    CHECK(spec.find(Partition({3}))->value == (q2 + 3 * q + 2) / q2);
    CHECK(spec.find(Partition({1, 1, 1}))->value == (q2 - 3 * q + 2) / q2);
    CHECK(spec.find(Partition({2, 1}))->value == (q2 - 1) / q2);
    CHECK(spec.find(Partition({3}))->multiplicity == 1);
    CHECK(spec.find(Partition({1, 1, 1}))->multiplicity == 1);
    CHECK(spec.find(Partition({2, 1}))->multiplicity == 4);
  }
}

TEST_CASE("spectrum at exp_beta one is rank one") {
  for (int n = 1; n <= 6; ++n) {
    const KernelSpectrum spec = spectrum(n, TemperaturePoint::exact(Rational(1)));
    for (const auto& entry : spec.entries) {
      if (entry.partition == Partition({n}))
        CHECK(entry.value == Rational(factorial(static_cast<unsigned>(n))));
      else
        CHECK(entry.value == 0);
    }
  }
}

TEST_CASE("spectrum on three elements at exp_beta two") {
  // closed forms at q = 2: (4+6+2)/4 = 3, (4-1)/4 = 3/4, (4-6+2)/4 = 0
  const KernelSpectrum spec = spectrum(3, TemperaturePoint::exact(Rational(2)));
  CHECK(spec.find(Partition({3}))->value == Rational(3));
  CHECK(spec.find(Partition({2, 1}))->value == Rational(3, 4));
  CHECK(spec.find(Partition({1, 1, 1}))->value == Rational(0));
  CHECK(spec.min_entry().partition == Partition({1, 1, 1}));
  CHECK(spec.trace() == 6);
}

TEST_CASE("unit multiplicity closed forms") {
  for (int n = 2; n <= 8; ++n) {
    for (int q = 1; q < n; ++q) CHECK(eigenvalue_sign(n, Rational(q)) == 0);
    CHECK(eigenvalue_trivial(n, Rational(1)) == Rational(factorial(static_cast<unsigned>(n))));
    const Rational q(7, 3);
    const KernelSpectrum spec = spectrum(n, TemperaturePoint::exact(q));
    CHECK(spec.find(Partition({n}))->value == eigenvalue_trivial(n, q));
    CHECK(spec.find(Partition(std::vector<int>(static_cast<size_t>(n), 1)))->value ==
          eigenvalue_sign(n, q));
  }
  CHECK(eigenvalue_sign(3, Rational(2)) == 0);
  CHECK(eigenvalue_trivial(3, Rational(3)) == Rational(20, 9));  // 3*4*5/27
}

TEST_CASE("polynomial identities") {
  const auto three = verify_polynomial_identities(3);
  CHECK(three.ok());
  CHECK(three.cycle_coeffs_product == std::vector<BigInt>{0, 2, 3, 1});  // 2x + 3x^2 + x^3

  const auto one = verify_polynomial_identities(1);
  CHECK(one.ok());
  CHECK(one.cycle_coeffs_product == std::vector<BigInt>{0, 1});
  CHECK(one.signed_coeffs_product == std::vector<BigInt>{0, 1});

  const auto four = verify_polynomial_identities(4);
  CHECK(four.ok());
  CHECK(four.signed_coeffs_product == std::vector<BigInt>{0, -6, 11, -6, 1});

  for (int n = 1; n <= 7; ++n) CHECK(verify_polynomial_identities(n).ok());
  for (int n = 1; n <= 12; ++n) CHECK(polynomial_identities_by_evaluation(n));
  CHECK_THROWS_AS(verify_polynomial_identities(9), std::length_error);
}

TEST_CASE("gershgorin radius") {
  const auto bound = gershgorin_bound(3, TemperaturePoint::exact(Rational(3)));
  CHECK(bound.radius == Rational(11, 9));
  CHECK_FALSE(bound.certified_positive);
  CHECK(bound.half_radius_certified);

  const auto trivial_case = gershgorin_bound(1, TemperaturePoint::exact(Rational(2)));
  CHECK(trivial_case.radius == 0);
  CHECK(trivial_case.certified_positive);

  const auto big = gershgorin_bound(3, TemperaturePoint::exact(Rational(20)));
  CHECK(big.certified_positive);

  const auto numeric = gershgorin_bound(3, TemperaturePoint::numeric(3.0));
  CHECK(numeric.radius_value == doctest::Approx(11.0 / 9.0));
  CHECK(numeric.threshold_full == doctest::Approx(2.0 / (std::cbrt(2.0) - 1.0)));
}

TEST_CASE("phase classification matches the region table on three elements") {
  auto report = classify_phase(3, TemperaturePoint::exact(Rational(3, 2)));
  CHECK(report.theorem.phase == Phase::Indefinite);
  CHECK(report.computed.phase == Phase::Indefinite);
  CHECK(report.computed.source == VerdictSource::ComputedExact);
  CHECK(report.agree);

  report = classify_phase(3, TemperaturePoint::exact(Rational(1)));
  CHECK(report.theorem.phase == Phase::PositiveSemiDefinite);
  CHECK(report.computed.phase == Phase::PositiveSemiDefinite);

  report = classify_phase(3, TemperaturePoint::exact(Rational(2)));
  CHECK(report.theorem.phase == Phase::PositiveSemiDefinite);
  CHECK(report.computed.phase == Phase::PositiveSemiDefinite);
  CHECK(report.computed.witness == Partition({1, 1, 1}));
  CHECK(report.min_eigenvalue == Rational(0));

  report = classify_phase(3, TemperaturePoint::exact(Rational(3)));
  CHECK(report.theorem.phase == Phase::PositiveDefinite);
  CHECK(report.computed.phase == Phase::PositiveDefinite);

  report = classify_phase(3, TemperaturePoint::exact(Rational(4)));
  CHECK(report.theorem.phase == Phase::PositiveDefinite);
  CHECK(report.computed.phase == Phase::PositiveDefinite);
  CHECK(report.agree);
}

TEST_CASE("phase classification for four elements at low integers") {
  for (int q = 1; q <= 3; ++q) {
    const auto report = classify_phase(4, TemperaturePoint::exact(Rational(q)));
    CHECK(report.theorem.phase == Phase::PositiveSemiDefinite);
    CHECK(report.computed.phase == Phase::PositiveSemiDefinite);
    CHECK(report.min_eigenvalue == Rational(0));
  }
}

TEST_CASE("numeric classification never claims exact zeros") {
  const auto report = classify_phase(3, TemperaturePoint::numeric(2.0));
  CHECK(report.theorem.phase == Phase::PositiveSemiDefinite);
  CHECK(report.computed.phase == Phase::Unknown);
  CHECK(report.computed.source == VerdictSource::ComputedNumeric);
  CHECK(report.agree);  // vacuous against Unknown

  const auto indefinite = classify_phase(3, TemperaturePoint::numeric(1.5));
  CHECK(indefinite.computed.phase == Phase::Indefinite);
  const auto definite = classify_phase(3, TemperaturePoint::numeric(4.0));
  CHECK(definite.computed.phase == Phase::PositiveDefinite);
}

TEST_CASE("singleton group") {
  const KernelSpectrum spec = spectrum(1, TemperaturePoint::exact(Rational(5, 3)));
  REQUIRE(spec.entries.size() == 1);
  CHECK(spec.entries[0].value == Rational(1));
  CHECK(spec.entries[0].multiplicity == 1);
  const auto report = classify_phase(1, TemperaturePoint::exact(Rational(1)));
  CHECK(report.theorem.phase == Phase::PositiveDefinite);
  CHECK(report.computed.phase == Phase::PositiveDefinite);
  const auto matrix = kernel_matrix_exact(1, Rational(7));
  CHECK(matrix == std::vector<std::vector<Rational>>{{Rational(1)}});
}

TEST_CASE("half-radius certificate covers exp_beta just above N-1") {
  // N = 3, q = 5/2: full radius 38/25 fails r < 1 but r < 2 plus q > N-1
  // settles positive definiteness without touching the spectrum.
  const auto bound = gershgorin_bound(3, TemperaturePoint::exact(Rational(5, 2)));
  CHECK_FALSE(bound.certified_positive);
  CHECK(bound.half_radius_certified);
  const auto report = classify_phase(3, TemperaturePoint::exact(Rational(5, 2)));
  CHECK(report.theorem.phase == Phase::PositiveDefinite);
  CHECK(report.computed.phase == Phase::PositiveDefinite);
  CHECK(report.agree);
}

TEST_CASE("phase in the uncovered window comes from computation only") {
  // exp_beta = 7/2 for N = 4: not integer, not below N-1, Gershgorin radius too big
  const auto report = classify_phase(4, TemperaturePoint::exact(Rational(7, 2)));
  CHECK(report.theorem.phase == Phase::Unknown);
  CHECK(report.computed.phase == Phase::PositiveDefinite);
  CHECK(report.agree);
}

TEST_CASE("grid construction") {
  CHECK(make_grid(1.0, 6.0, 0.05).size() == 101);
  CHECK(make_grid(1.0, 2.0, 0.5) == std::vector<double>{1.0, 1.5, 2.0});
  CHECK(make_grid(2.0, 2.0, 1.0) == std::vector<double>{2.0});
  CHECK_THROWS_AS(make_grid(1.0, 2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(2.0, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("sweep rows") {
  const auto rows = sweep_min_eigenvalue(2, {2.0});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].min_eigenvalue == doctest::Approx(0.5));
  CHECK(rows[0].scaled == doctest::Approx(1.0));  // exponent defaults to N-1 = 1

  const auto sym4 = sweep_min_eigenvalue(4, {1.0, 2.0, 3.0});
  for (const auto& row : sym4) CHECK(std::abs(row.scaled) < 1e-9);

  const auto custom = sweep_min_eigenvalue(2, {2.0}, 0);
  CHECK(custom[0].scaled == doctest::Approx(0.5));

  CHECK_THROWS_AS(sweep_min_eigenvalue(3, {0.0}), std::invalid_argument);
}

TEST_CASE("sweep matches exact spot values") {
  const auto rows = sweep_min_eigenvalue(4, make_grid(1.0, 6.0, 0.05));
  REQUIRE(rows.size() == 101);
  for (const auto& row : rows) {
    const KernelSpectrum spec = spectrum(4, TemperaturePoint::numeric(row.exp_beta));
    CHECK(spec.min_entry().value_num == doctest::Approx(row.min_eigenvalue).epsilon(1e-12));
  }
}
