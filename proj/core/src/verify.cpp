#include "qec/verify.hpp"

#include <algorithm>
#include <random>

#include "qec/sequences.hpp"

namespace qec {

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "lemma61") return Suite::lemma61;
  if (name == "detA") return Suite::detA;
  if (name == "series") return Suite::series;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

namespace {

// Records one case; keeps only the first counterexample.
void record(CheckOutcome& c, bool ok, const std::string& detail) {
  ++c.cases;
  if (!ok && c.passed) {
    c.passed = false;
    c.counterexample = detail;
  }
}

std::string str(const ExactRational& r) { return r.str(); }
std::string str(const ExactInt& r) { return r.str(); }

void lemma61_checks(const VerifyOptions& opt, std::vector<CheckOutcome>& out) {
  const std::pair<Lemma61, const char*> ids[] = {
      {Lemma61::min_weighted, "lemma61.identity1"},
      {Lemma61::squared_alternating, "lemma61.identity2"},
      {Lemma61::quartic, "lemma61.identity3"}};
  for (const auto& [which, name] : ids) {
    CheckOutcome c{name};
    for (std::size_t n = 0; n <= opt.lemma_max_n; ++n) {
      const auto lhs = lemma61_lhs(which, n);
      const auto rhs = lemma61_closed(which, n);
      record(c, lhs == rhs, "n=" + std::to_string(n) + " lhs=" + str(lhs) + " rhs=" + str(rhs));
    }
    out.push_back(std::move(c));
  }
  for (unsigned p = 1; p <= 3; ++p) {
    CheckOutcome c{"alternating_power_sum.p" + std::to_string(p)};
    for (std::size_t n = 0; n <= opt.lemma_max_n; ++n) {
      const auto lhs = alternating_power_sum(p, n);
      const auto rhs = alternating_power_sum_closed(p, n);
      record(c, lhs == rhs, "n=" + std::to_string(n) + " lhs=" + str(lhs) + " rhs=" + str(rhs));
    }
    out.push_back(std::move(c));
  }
}

void det_checks(const VerifyOptions& opt, std::vector<CheckOutcome>& out) {
  CheckOutcome det{"detA.n_plus_one"};
  CheckOutcome pd{"detA.leading_minors_positive"};
  CheckOutcome consistency{"detA.An_equals_An(4n-2)"};
  for (std::size_t n = 1; n <= opt.det_max_n; ++n) {
    const ExactInt d = det_An(n);
    record(det, d == ExactInt(n) + 1, "n=" + std::to_string(n) + " det=" + str(d));
    record(pd, d > 0, "k=" + std::to_string(n) + " minor=" + str(d));
    record(consistency, matrix_An(n) == matrix_Anu(n, 4 * ExactInt(n) - 2),
           "n=" + std::to_string(n));
  }
  out.push_back(std::move(det));
  out.push_back(std::move(pd));
  out.push_back(std::move(consistency));

  CheckOutcome aux{"detA.auxiliary_formula"};
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick_n(1, opt.random_det_max_n);
  std::uniform_int_distribution<long long> pick_u(-opt.random_det_max_abs_u, opt.random_det_max_abs_u);
  for (std::size_t k = 0; k < opt.random_det_pairs; ++k) {
    const std::size_t n = pick_n(rng);
    const ExactInt u = pick_u(rng);
    const ExactInt got = det_Anu(n, u);
    const ExactInt want = ExactInt(n) * u - ExactInt(n - 1) * (4 * ExactInt(n) + 1);
    record(aux, got == want,
           "n=" + std::to_string(n) + " u=" + str(u) + " det=" + str(got) + " formula=" + str(want));
  }
  out.push_back(std::move(aux));
}

void series_checks(const VerifyOptions& opt, std::vector<CheckOutcome>& out) {
  CheckOutcome listing{"series.published_terms"};
  const auto& terms = published_a_terms();
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const ExactInt a = a_closed(n);
    record(listing, a == terms[n],
           "n=" + std::to_string(n) + " a=" + str(a) + " listed=" + std::to_string(terms[n]));
  }
  out.push_back(std::move(listing));

  CheckOutcome gen{"series.generating_function"};
  CheckOutcome conv{"series.convolution"};
  const auto coeffs = a_series(opt.series_max_n);
  for (std::size_t n = 0; n <= opt.series_max_n; ++n) {
    const ExactInt a = a_closed(n);
    record(gen, coeffs[n] == a,
           "n=" + std::to_string(n) + " series=" + str(coeffs[n]) + " closed=" + str(a));
    const ExactInt c = convolution_check(n);
    record(conv, c == a, "n=" + std::to_string(n) + " b*b=" + str(c) + " closed=" + str(a));
  }
  out.push_back(std::move(gen));
  out.push_back(std::move(conv));
}

}  // namespace

SuiteReport run_suite(Suite suite, const VerifyOptions& options) {
  SuiteReport report;
  if (suite == Suite::lemma61 || suite == Suite::all) lemma61_checks(options, report.checks);
  if (suite == Suite::detA || suite == Suite::all) det_checks(options, report.checks);
  if (suite == Suite::series || suite == Suite::all) series_checks(options, report.checks);
  return report;
}

}  // namespace qec
