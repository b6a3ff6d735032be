#include "qec/star_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qec/errors.hpp"

namespace qec {

FactorSummary::FactorSummary(double q_, ExtCount n_) : q(q_), n(n_) {
  if (!(q <= 0.0) || !std::isfinite(q)) throw InvalidParameterError("factor QEC must be <= 0");
  if (n.is_finite() && n.value() < 1.0) throw InvalidParameterError("factor size n must be >= 1");
}

namespace {

void require_negative(std::span<const FactorSummary> factors) {
  if (factors.empty()) throw InvalidParameterError("need at least one factor");
  for (const auto& f : factors) {
    if (f.q == 0.0) {
      throw InvalidParameterError("a factor has Q_j = 0; the zero rule applies instead");
    }
  }
}

}  // namespace

double lambda_upper(std::span<const FactorSummary> factors) {
  require_negative(factors);
  std::vector<double> a;
  std::vector<ExtCount> d;
  for (const auto& f : factors) {
    a.push_back(-f.q);
    d.push_back(f.n);
  }
  return min_root(ParamPair(std::move(a), std::move(d))).lambda;
}

Sandwich qec_sandwich(std::span<const FactorSummary> factors) {
  require_negative(factors);
  double lower = factors.front().q;
  for (const auto& f : factors) lower = std::max(lower, f.q);
  return Sandwich{lower, -lambda_upper(factors)};
}

std::optional<double> zero_rule(std::span<const FactorSummary> factors) {
  if (factors.empty()) throw InvalidParameterError("need at least one factor");
  const bool any_zero =
      std::any_of(factors.begin(), factors.end(), [](const FactorSummary& f) { return f.q == 0.0; });
  if (any_zero) return 0.0;
  return std::nullopt;
}

double harmonic_corollary(std::span<const FactorSummary> factors) {
  if (factors.size() < 2) throw InvalidParameterError("harmonic bound needs r >= 2");
  require_negative(factors);
  double s = 0.0;
  for (const auto& f : factors) s += 1.0 / f.q;
  return 1.0 / s;
}

double q12(double q1, double q2, ExtCount n1, ExtCount n2) {
  if (!(q1 < 0.0) || !(q2 < 0.0)) throw InvalidParameterError("Q_12 needs Q1, Q2 < 0");
  return -closed_form_r2(-q1, -q2, n1, n2);
}

double q12_radical(double q1, double q2, ExtCount n1, ExtCount n2) {
  if (!(q1 < 0.0) || !(q2 < 0.0)) throw InvalidParameterError("Q_12 needs Q1, Q2 < 0");
  // (n1 + n2 + 1) / ((n1 + 1)(n2 + 1)) and its limits.
  double coeff = 0.0;
  if (n1.is_finite() && n2.is_finite()) {
    const double a = n1.value();
    const double b = n2.value();
    coeff = (a + b + 1.0) / ((a + 1.0) * (b + 1.0));
  } else if (n1.is_finite()) {
    coeff = 1.0 / (n1.value() + 1.0);
  } else if (n2.is_finite()) {
    coeff = 1.0 / (n2.value() + 1.0);
  }
  const double s = q1 + q2;
  return 2.0 * q1 * q2 / (s - std::sqrt(s * s - 4.0 * coeff * q1 * q2));
}

}  // namespace qec
