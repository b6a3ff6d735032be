#pragma once

#include <optional>
#include <span>

#include "qec/min_root.hpp"

namespace qec {

/// QEC of a star-product factor and its size n = |V| - 1 (possibly infinite).
struct FactorSummary {
  double q;
  ExtCount n;

  /// Throws InvalidParameterError unless q <= 0 and n >= 1.
  FactorSummary(double q, ExtCount n);
};

/// Lambda: minimal solution of sum_j n_j / (-Q_j n_j - Q_j - lambda) = 1/lambda,
/// i.e. min_root with a = -Q and d = n. The QEC upper bound is -Lambda.
/// Throws InvalidParameterError if some q = 0 (see zero_rule) or the list is empty.
double lambda_upper(std::span<const FactorSummary> factors);

struct Sandwich {
  double lower;  // max Q_j
  double upper;  // -Lambda
};

Sandwich qec_sandwich(std::span<const FactorSummary> factors);

/// 0 when some factor has Q_j = 0, otherwise nullopt.
std::optional<double> zero_rule(std::span<const FactorSummary> factors);

/// (1/Q_1 + ... + 1/Q_r)^-1 for r >= 2 and every Q_j < 0.
double harmonic_corollary(std::span<const FactorSummary> factors);

/// Two-factor bound Q_12, computed through closed_form_r2 (a = -Q, d = n).
double q12(double q1, double q2, ExtCount n1, ExtCount n2);

/// Q_12 from the textbook radical
///   2 Q1 Q2 / (Q1 + Q2 - sqrt((Q1 + Q2)^2 - 4 (n1 + n2 + 1)/((n1 + 1)(n2 + 1)) Q1 Q2))
/// with the n -> infinity limits taken in the coefficient. Loses precision
/// when Q1 ~ Q2 and n is large; kept as an independent cross-check of q12.
double q12_radical(double q1, double q2, ExtCount n1, ExtCount n2);

}  // namespace qec
