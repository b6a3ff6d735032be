#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qec {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;
using SeriesCoeffs = std::vector<ExactInt>;

// Exact identities behind the path-graph lower bound. Everything here is
// integer or rational arithmetic; no floating point.

enum class Lemma61 { min_weighted = 1, squared_alternating = 2, quartic = 3 };

/// Brute-force left-hand sides, summing i, j over 1..n:
///   1: sum min(i, j) i(n-i) j(n-j) (-1)^(i+j)
///   2: sum i(n-i) j(n-j) (-1)^(i+j)
///   3: sum i^2 (n-i)^2
ExactRational lemma61_lhs(Lemma61 which, std::size_t n);

/// Closed forms n(2n^4 + 20n^2 - 7 + 15(-1)^n)/240, (1 + (-1)^n) n^2 / 8,
/// (n^5 - n)/30.
ExactRational lemma61_closed(Lemma61 which, std::size_t n);

/// Identity 1 with the summand as typeset, min(i, j) i(n-j) j(n-j) (-1)^(i+j).
/// It does not match the closed form; kept so that the mismatch is testable.
ExactRational lemma61_lhs_as_typeset(std::size_t n);

/// a_n = n (2n^4 + 20n^2 - 7 + 15(-1)^n) / 240. Throws std::logic_error if
/// the division is not exact.
ExactInt a_closed(std::size_t n);

/// Coefficients 0..N of z^2 (1 + z^2)^2 / ((1 + z)^2 (1 - z)^6), by exact
/// power-series division.
SeriesCoeffs a_series(std::size_t N);

/// ceil(n^2 / 2).
ExactInt b_ceil(std::size_t n);

/// sum_{k=0}^{n} b_k b_{n-k}.
ExactInt convolution_check(std::size_t n);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Throws std::invalid_argument for a non-square matrix.
ExactInt bareiss_determinant(std::vector<std::vector<ExactInt>> m);

/// A_n(u): [4 min(i, j) - 1 - delta_ij] with the (n, n) entry replaced by u.
std::vector<std::vector<ExactInt>> matrix_Anu(std::size_t n, const ExactInt& u);

/// A_n = A_n(4n - 2).
std::vector<std::vector<ExactInt>> matrix_An(std::size_t n);

/// det A_n by Bareiss elimination (expected n + 1). Requires n >= 1.
ExactInt det_An(std::size_t n);

/// det A_n(u) by Bareiss elimination (expected n u - (n - 1)(4n + 1)).
ExactInt det_Anu(std::size_t n, const ExactInt& u);

/// Brute-force sum_{i=1}^{n} i^p (-1)^i for p in {1, 2, 3}.
ExactRational alternating_power_sum(unsigned p, std::size_t n);

/// Closed forms of the alternating power sums:
///   p = 1: (2n(-1)^n + (-1)^n - 1)/4
///   p = 2: n(n+1)(-1)^n / 2
///   p = 3: (4n^3(-1)^n + 6n^2(-1)^n - (-1)^n + 1)/8
ExactRational alternating_power_sum_closed(unsigned p, std::size_t n);

/// The sixteen leading terms a_0..a_15 as listed with the sequence.
const std::vector<long long>& published_a_terms();

}  // namespace qec
