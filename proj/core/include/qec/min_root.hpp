#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace qec {

/// A positive real or the symbolic value infinity.
///
/// Infinity is a distinct state, never a large finite sentinel: every formula
/// that consumes an ExtCount takes the d -> infinity limit explicitly.
class ExtCount {
 public:
  /// Throws InvalidParameterError unless value > 0 and finite.
  explicit ExtCount(double value);

  static ExtCount infinity() { return ExtCount(); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Finite value; throws InvalidParameterError when infinite.
  double value() const;

  /// d / (d + 1), equal to 1 at infinity.
  double ratio() const;

  /// min(*this, n).
  ExtCount clamp(double n) const;

  friend bool operator==(const ExtCount&, const ExtCount&) = default;

 private:
  ExtCount() : value_(0.0), infinite_(true) {}
  double value_;
  bool infinite_;
};

/// Parses "inf" / "infinity" or a positive decimal number.
ExtCount parse_ext_count(std::string_view token);

/// Parameter vectors (a, d) of the key equation
///   sum_j d_j / (a_j d_j + a_j - lambda) = 1 / lambda.
class ParamPair {
 public:
  /// Throws InvalidParameterError for empty or mismatched lists or a_j <= 0.
  ParamPair(std::vector<double> a, std::vector<ExtCount> d);

  std::size_t size() const { return a_.size(); }
  std::span<const double> a() const { return a_; }
  std::span<const ExtCount> d() const { return d_; }

  bool all_infinite() const;
  bool any_infinite() const;

  /// a_j d_j + a_j, or infinity.
  ExtCount breakpoint(std::size_t j) const;

 private:
  std::vector<double> a_;
  std::vector<ExtCount> d_;
};

/// One distinct value c_i of {a_j d_j + a_j} together with the merged weight
/// of the terms that share it: sum of d_j for a finite c_i, sum of 1/a_j for
/// c_i = infinity (the constant those terms contribute to f).
struct Breakpoint {
  ExtCount position;
  double weight;
};

enum class RootMethod { bisection, closed_form_r1, closed_form_r2, limit };

std::string_view to_string(RootMethod m);

struct RootSolution {
  double lambda = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double residual = 0.0;  // |f(lambda)|
  RootMethod method = RootMethod::bisection;
  int iterations = 0;
};

inline constexpr double kDefaultRootTolerance = 1e-12;
inline constexpr int kMaxBisectionIterations = 200;
inline constexpr double kBreakpointMergeTolerance = 1e-14;

/// f(lambda) = sum_j d_j/(a_j d_j + a_j - lambda) - 1/lambda, with an
/// infinite d_j contributing 1/a_j. Throws PoleError for lambda <= 0 or
/// lambda at a finite breakpoint.
double eval_f(const ParamPair& p, double lambda);

/// Sorted distinct breakpoints c_1 < ... < c_s (infinity last if present).
/// Values within a relative 1e-14 of each other are merged.
std::vector<Breakpoint> breakpoints(const ParamPair& p);

/// Minimal solution lambda_1(d, a).
///
/// Bisection on [(sum 1/a_j)^-1, min a_j], where f is increasing, until the
/// bracket is narrower than tol * hi (or stops shrinking). r = 1 returns a_1;
/// all d_j infinite returns the harmonic value with method limit.
RootSolution min_root(const ParamPair& p, double tol = kDefaultRootTolerance);

/// Every solution, one per breakpoint gap (c_{i-1}, c_i) with c_0 = 0.
std::vector<RootSolution> all_roots(const ParamPair& p, double tol = kDefaultRootTolerance);

/// Stable form of the r = 2 closed expression
///   2 a1 a2 / (a1 + a2 + sqrt((a1 - a2)^2 + 4 t1 t2 a1 a2)),  t = d/(d+1).
double closed_form_r2(double a1, double a2, ExtCount d1, ExtCount d2);

/// closed_form_r2 packaged as a RootSolution for a two-term ParamPair.
RootSolution closed_form_solution(const ParamPair& p);

struct BasicBounds {
  double lower;  // (sum 1/a_j)^-1, attained iff all d_j are infinite
  double upper;  // min a_j, strict
};

/// Requires r >= 2.
BasicBounds bounds_basic(const ParamPair& p);

struct SharpBounds {
  double c1;          // smallest finite breakpoint
  double harmonic;    // (sum 1/a_j)^-1
  double est1_lower;  // (1/c1 + sum d_j/(d_j a_j + a_j))^-1
  double est1_upper;  // (sum d_j/(d_j a_j + a_j))^-1, strict
  double est2_lower;  // c1 (1 + sum d_j (c1 - h)/(d_j a_j + a_j - h))^-1, h = harmonic
};

/// Requires at least one finite d_j.
SharpBounds bounds_sharp(const ParamPair& p);

/// True when every a_j d_j + a_j is finite and they all coincide (within the
/// breakpoint merge tolerance); the sharp lower bounds are then exact.
bool breakpoints_all_equal(const ParamPair& p);

/// d_j -> min(d_j, n); requires n >= 1.
ParamPair truncated(const ParamPair& p, std::size_t n);

}  // namespace qec
