#pragma once

#include "cayley/numeric.hpp"
#include "cayley/partition.hpp"

namespace cayley {

/// Number of semistandard Young tableaux of the given shape with entries in
/// {1..max_entry}: rows weakly increasing, columns strictly increasing. This
/// is the principal specialization s_lambda(1,...,1) with max_entry ones, and
/// vanishes exactly when the shape has more than max_entry rows.
BigInt count_ssyt(const Partition& shape, int max_entry);

/// The same specialization through the Frobenius character formula:
/// (1/N!) * sum_mu class_size(mu) * chi^lambda(mu) * max_entry^rows(mu).
/// Integral, and equal to count_ssyt.
Rational schur_frobenius_specialized(const Partition& shape, int max_entry);

/// Combinatorial certificate for the kernel eigenvalue at exp_beta = n:
/// count_ssyt(lambda, n) * N! / (dimension(lambda) * n^N). Non-negative by
/// construction and equal to the character-formula eigenvalue.
Rational eigenvalue_via_ssyt(const Partition& shape, int n);

}  // namespace cayley
