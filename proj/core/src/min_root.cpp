#include "qec/min_root.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qec/errors.hpp"

namespace qec {

ExtCount::ExtCount(double value) : value_(value), infinite_(false) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidParameterError("count must be positive and finite (use ExtCount::infinity())");
  }
}

double ExtCount::value() const {
  if (infinite_) throw InvalidParameterError("value() called on an infinite count");
  return value_;
}

double ExtCount::ratio() const { return infinite_ ? 1.0 : value_ / (value_ + 1.0); }

ExtCount ExtCount::clamp(double n) const {
  if (infinite_ || n < value_) return ExtCount(n);
  return *this;
}

ExtCount parse_ext_count(std::string_view token) {
  if (token == "inf" || token == "infinity" || token == "Inf" || token == "INF") {
    return ExtCount::infinity();
  }
  const std::string s(token);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InvalidParameterError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw InvalidParameterError("not a number: '" + s + "'");
  return ExtCount(v);
}

ParamPair::ParamPair(std::vector<double> a, std::vector<ExtCount> d)
    : a_(std::move(a)), d_(std::move(d)) {
  if (a_.empty()) throw InvalidParameterError("parameter vectors must be nonempty");
  if (a_.size() != d_.size()) {
    throw InvalidParameterError("a and d must have the same length (" + std::to_string(a_.size()) +
                                " vs " + std::to_string(d_.size()) + ")");
  }
  for (double aj : a_) {
    if (!(aj > 0.0) || !std::isfinite(aj)) {
      throw InvalidParameterError("every a_j must be positive and finite");
    }
  }
}

bool ParamPair::all_infinite() const {
  return std::all_of(d_.begin(), d_.end(), [](const ExtCount& x) { return x.is_infinite(); });
}

bool ParamPair::any_infinite() const {
  return std::any_of(d_.begin(), d_.end(), [](const ExtCount& x) { return x.is_infinite(); });
}

ExtCount ParamPair::breakpoint(std::size_t j) const {
  if (d_[j].is_infinite()) return ExtCount::infinity();
  return ExtCount(a_[j] * d_[j].value() + a_[j]);
}

std::string_view to_string(RootMethod m) {
  switch (m) {
    case RootMethod::bisection: return "bisection";
    case RootMethod::closed_form_r1: return "closed_form_r1";
    case RootMethod::closed_form_r2: return "closed_form_r2";
    case RootMethod::limit: return "limit";
  }
  return "unknown";
}

double eval_f(const ParamPair& p, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw PoleError("f is only defined for finite lambda > 0");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double aj = p.a()[j];
    const ExtCount& dj = p.d()[j];
    if (dj.is_infinite()) {
      sum += 1.0 / aj;
      continue;
    }
    const double c = aj * dj.value() + aj;
    if (lambda == c) throw PoleError("f evaluated at the breakpoint " + std::to_string(c));
    sum += dj.value() / (c - lambda);
  }
  return sum - 1.0 / lambda;
}

std::vector<Breakpoint> breakpoints(const ParamPair& p) {
  std::vector<std::pair<double, double>> finite;  // (c_j, d_j)
  double infinite_weight = 0.0;
  bool has_infinite = false;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double aj = p.a()[j];
    if (p.d()[j].is_infinite()) {
      has_infinite = true;
      infinite_weight += 1.0 / aj;
    } else {
      const double dj = p.d()[j].value();
      finite.emplace_back(aj * dj + aj, dj);
    }
  }
  std::sort(finite.begin(), finite.end());

  std::vector<Breakpoint> out;
  for (const auto& [c, dj] : finite) {
    if (!out.empty()) {
      const double prev = out.back().position.value();
      if (c - prev <= kBreakpointMergeTolerance * c) {
        out.back().weight += dj;
        continue;
      }
    }
    out.push_back(Breakpoint{ExtCount(c), dj});
  }
  if (has_infinite) out.push_back(Breakpoint{ExtCount::infinity(), infinite_weight});
  return out;
}

namespace {

void check_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw InvalidParameterError("tolerance must be positive and finite");
  }
}

double harmonic_value(std::span<const double> a) {
  double s = 0.0;
  for (double aj : a) s += 1.0 / aj;
  return 1.0 / s;
}

// Bisection for the increasing branch of f on the open interval (lo, hi).
// Endpoints are never evaluated, so they may be poles.
RootSolution bisect(const ParamPair& p, double lo, double hi, double tol) {
  RootSolution sol;
  sol.method = RootMethod::bisection;
  int it = 0;
  for (; it < kMaxBisectionIterations; ++it) {
    if (hi - lo <= tol * std::abs(hi)) break;
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double fm = eval_f(p, mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    (fm < 0.0 ? lo : hi) = mid;
  }
  sol.lo = lo;
  sol.hi = hi;
  sol.lambda = lo + 0.5 * (hi - lo);
  sol.iterations = it;
  sol.residual = std::abs(eval_f(p, sol.lambda));
  return sol;
}

RootSolution exact_solution(const ParamPair& p, double lambda, RootMethod method) {
  RootSolution sol;
  sol.lambda = sol.lo = sol.hi = lambda;
  sol.method = method;
  sol.residual = (method == RootMethod::limit) ? 0.0 : std::abs(eval_f(p, lambda));
  return sol;
}

}  // namespace

RootSolution min_root(const ParamPair& p, double tol) {
  check_tolerance(tol);
  if (p.all_infinite()) return exact_solution(p, harmonic_value(p.a()), RootMethod::limit);
  if (p.size() == 1) return exact_solution(p, p.a()[0], RootMethod::closed_form_r1);
  const double lo = harmonic_value(p.a());
  const double hi = *std::min_element(p.a().begin(), p.a().end());
  return bisect(p, lo, hi, tol);
}

std::vector<RootSolution> all_roots(const ParamPair& p, double tol) {
  check_tolerance(tol);
  const auto bps = breakpoints(p);
  std::vector<RootSolution> roots;
  if (p.size() == 1 && p.d()[0].is_finite()) {
    roots.push_back(exact_solution(p, p.a()[0], RootMethod::closed_form_r1));
    return roots;
  }
  double prev = 0.0;
  for (const auto& bp : bps) {
    if (bp.position.is_finite()) {
      roots.push_back(bisect(p, prev, bp.position.value(), tol));
      prev = bp.position.value();
      continue;
    }
    if (prev == 0.0) {
      roots.push_back(exact_solution(p, harmonic_value(p.a()), RootMethod::limit));
      break;
    }
    // Last gap (c_{s-1}, infinity): f increases towards sum 1/a_j > 0 over the
    // infinite terms, so doubling finds a point with f > 0.
    double hi = 2.0 * prev;
    int grow = 0;
    while (eval_f(p, hi) <= 0.0) {
      hi *= 2.0;
      if (++grow > 2000) throw InvalidParameterError("failed to bracket the unbounded root");
    }
    roots.push_back(bisect(p, prev, hi, tol));
  }
  return roots;
}

double closed_form_r2(double a1, double a2, ExtCount d1, ExtCount d2) {
  if (!(a1 > 0.0) || !(a2 > 0.0)) throw InvalidParameterError("a1, a2 must be positive");
  const double t = d1.ratio() * d2.ratio();
  const double diff = a1 - a2;
  return 2.0 * a1 * a2 / (a1 + a2 + std::sqrt(diff * diff + 4.0 * t * a1 * a2));
}

RootSolution closed_form_solution(const ParamPair& p) {
  if (p.size() != 2) throw InvalidParameterError("closed form requires exactly two terms");
  const double lambda = closed_form_r2(p.a()[0], p.a()[1], p.d()[0], p.d()[1]);
  RootSolution sol;
  sol.lambda = sol.lo = sol.hi = lambda;
  sol.method = RootMethod::closed_form_r2;
  sol.residual = p.all_infinite() ? 0.0 : std::abs(eval_f(p, lambda));
  return sol;
}

BasicBounds bounds_basic(const ParamPair& p) {
  if (p.size() < 2) throw InvalidParameterError("basic bounds require r >= 2");
  return BasicBounds{harmonic_value(p.a()), *std::min_element(p.a().begin(), p.a().end())};
}

SharpBounds bounds_sharp(const ParamPair& p) {
  if (p.all_infinite()) throw InvalidParameterError("sharp bounds require some finite d_j");
  SharpBounds b{};
  b.harmonic = harmonic_value(p.a());
  b.c1 = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p.d()[j].is_finite()) b.c1 = std::min(b.c1, p.breakpoint(j).value());
  }
  double s = 0.0;
  double t = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double aj = p.a()[j];
    const ExtCount& dj = p.d()[j];
    if (dj.is_infinite()) {
      s += 1.0 / aj;
      t += (b.c1 - b.harmonic) / aj;
    } else {
      const double d = dj.value();
      s += d / (d * aj + aj);
      t += d * (b.c1 - b.harmonic) / (d * aj + aj - b.harmonic);
    }
  }
  b.est1_lower = 1.0 / (1.0 / b.c1 + s);
  b.est1_upper = 1.0 / s;
  b.est2_lower = b.c1 / (1.0 + t);
  return b;
}

bool breakpoints_all_equal(const ParamPair& p) {
  if (p.any_infinite()) return false;
  return breakpoints(p).size() == 1;
}

ParamPair truncated(const ParamPair& p, std::size_t n) {
  if (n < 1) throw InvalidParameterError("truncation level must be >= 1");
  std::vector<ExtCount> d;
  d.reserve(p.size());
  for (const auto& dj : p.d()) d.push_back(dj.clamp(static_cast<double>(n)));
  return ParamPair(std::vector<double>(p.a().begin(), p.a().end()), std::move(d));
}

}  // namespace qec
