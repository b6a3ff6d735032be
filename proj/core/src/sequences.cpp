#include "qec/sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qec/errors.hpp"

namespace qec {

namespace {

int parity_sign(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

// Multiplies two integer polynomials given by coefficient lists.
std::vector<ExactInt> poly_mul(const std::vector<ExactInt>& p, const std::vector<ExactInt>& q) {
  std::vector<ExactInt> out(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

std::vector<ExactInt> poly_pow(const std::vector<ExactInt>& p, unsigned k) {
  std::vector<ExactInt> out{1};
  for (unsigned i = 0; i < k; ++i) out = poly_mul(out, p);
  return out;
}

}  // namespace

ExactRational lemma61_lhs(Lemma61 which, std::size_t n) {
  ExactInt total = 0;
  switch (which) {
    case Lemma61::min_weighted:
      for (std::size_t i = 1; i <= n; ++i) {
        const ExactInt wi = ExactInt(i) * (n - i) * parity_sign(i);
        if (wi == 0) continue;
        for (std::size_t j = 1; j <= n; ++j) {
          const ExactInt wj = ExactInt(j) * (n - j) * parity_sign(j);
          total += wi * wj * std::min(i, j);
        }
      }
      break;
    case Lemma61::squared_alternating:
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
          total += ExactInt(i) * (n - i) * j * (n - j) * parity_sign(i + j);
      break;
    case Lemma61::quartic:
      for (std::size_t i = 1; i <= n; ++i) {
        const ExactInt t = ExactInt(i) * (n - i);
        total += t * t;
      }
      break;
    default:
      throw InvalidParameterError("identity index must be 1, 2 or 3");
  }
  return ExactRational(total);
}

ExactRational lemma61_lhs_as_typeset(std::size_t n) {
  ExactInt total = 0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      total += ExactInt(std::min(i, j)) * i * (n - j) * j * (n - j) * parity_sign(i + j);
  return ExactRational(total);
}

ExactRational lemma61_closed(Lemma61 which, std::size_t n) {
  const ExactInt nn = n;
  const int s = parity_sign(n);
  switch (which) {
    case Lemma61::min_weighted:
      return ExactRational(nn * (2 * nn * nn * nn * nn + 20 * nn * nn - 7 + 15 * s), 240);
    case Lemma61::squared_alternating:
      return ExactRational((1 + s) * nn * nn, 8);
    case Lemma61::quartic:
      return ExactRational(nn * nn * nn * nn * nn - nn, 30);
  }
  throw InvalidParameterError("identity index must be 1, 2 or 3");
}

ExactInt a_closed(std::size_t n) {
  const ExactInt nn = n;
  const ExactInt num = nn * (2 * nn * nn * nn * nn + 20 * nn * nn - 7 + 15 * parity_sign(n));
  if (num % 240 != 0) {
    throw std::logic_error("a_" + std::to_string(n) + ": numerator not divisible by 240");
  }
  return num / 240;
}

SeriesCoeffs a_series(std::size_t N) {
  // Denominator (1 + z)^2 (1 - z)^6, numerator z^2 + 2 z^4 + z^6.
  const auto den = poly_mul(poly_pow({1, 1}, 2), poly_pow({1, -1}, 6));
  const std::vector<ExactInt> num{0, 0, 1, 0, 2, 0, 1};
  SeriesCoeffs a(N + 1);
  for (std::size_t k = 0; k <= N; ++k) {
    ExactInt acc = (k < num.size()) ? num[k] : ExactInt(0);
    for (std::size_t i = 1; i < den.size() && i <= k; ++i) acc -= den[i] * a[k - i];
    a[k] = acc;  // den[0] == 1
  }
  return a;
}

ExactInt b_ceil(std::size_t n) {
  const ExactInt sq = ExactInt(n) * n;
  return (sq + 1) / 2;
}

ExactInt convolution_check(std::size_t n) {
  ExactInt total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += b_ceil(k) * b_ceil(n - k);
  return total;
}

ExactInt bareiss_determinant(std::vector<std::vector<ExactInt>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  }
  if (n == 0) return 1;
  int sign = 1;
  ExactInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<std::vector<ExactInt>> matrix_Anu(std::size_t n, const ExactInt& u) {
  if (n < 1) throw InvalidParameterError("A_n needs n >= 1");
  std::vector<std::vector<ExactInt>> m(n, std::vector<ExactInt>(n));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      m[i - 1][j - 1] = 4 * ExactInt(std::min(i, j)) - 1 - (i == j ? 1 : 0);
  m[n - 1][n - 1] = u;
  return m;
}

std::vector<std::vector<ExactInt>> matrix_An(std::size_t n) {
  return matrix_Anu(n, 4 * ExactInt(n) - 2);
}

ExactInt det_An(std::size_t n) { return bareiss_determinant(matrix_An(n)); }

ExactInt det_Anu(std::size_t n, const ExactInt& u) { return bareiss_determinant(matrix_Anu(n, u)); }

ExactRational alternating_power_sum(unsigned p, std::size_t n) {
  if (p < 1 || p > 3) throw InvalidParameterError("power must be 1, 2 or 3");
  ExactInt total = 0;
  for (std::size_t i = 1; i <= n; ++i) total += pow(ExactInt(i), p) * parity_sign(i);
  return ExactRational(total);
}

ExactRational alternating_power_sum_closed(unsigned p, std::size_t n) {
  const ExactInt nn = n;
  const int s = parity_sign(n);
  switch (p) {
    case 1: return ExactRational(2 * nn * s + s - 1, 4);
    case 2: return ExactRational(nn * (nn + 1) * s, 2);
    case 3: return ExactRational(4 * nn * nn * nn * s + 6 * nn * nn * s - s + 1, 8);
    default: throw InvalidParameterError("power must be 1, 2 or 3");
  }
}

const std::vector<long long>& published_a_terms() {
  static const std::vector<long long> terms{0,   0,   1,   4,    14,   36,   83,   168,
                                            316, 552, 917, 1452, 2218, 3276, 4711, 6608};
  return terms;
}

}  // namespace qec
