#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qec/cond_min.hpp"
#include "qec/embedding_constant.hpp"
#include "qec/errors.hpp"
#include "qec/graph.hpp"
#include "qec/min_root.hpp"
#include "qec/sequences.hpp"
#include "qec/star_bounds.hpp"
#include "qec/verify.hpp"

namespace qec::cli {

namespace {

using nlohmann::json;

// Thrown for malformed flag values that CLI11 itself accepts as strings.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty element in list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split_list(text)) out.push_back(parse_double(s));
  return out;
}

std::vector<ExtCount> parse_counts(const std::string& text) {
  std::vector<ExtCount> out;
  for (const auto& s : split_list(text)) {
    if (s == "inf" || s == "infinity") {
      out.push_back(ExtCount::infinity());
    } else {
      // Range problems (d <= 0) are domain errors, reported by ExtCount.
      out.emplace_back(parse_double(s));
    }
  }
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& s : split_list(text)) {
    if (s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("expected a nonnegative integer, got '" + s + "'");
    }
    out.push_back(std::stoull(s));
  }
  return out;
}

std::string join(const Eigen::VectorXd& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += num(v(i));
  }
  return out;
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_edge_list(in);
}

// "K3", "P4@1", "C5", "S4" or "<file>[@root]".
RootedGraph parse_factor(const std::string& token) {
  std::string body = token;
  Vertex root = 0;
  const auto at = token.rfind('@');
  if (at != std::string::npos) {
    body = token.substr(0, at);
    const auto root_text = token.substr(at + 1);
    if (root_text.empty() || root_text.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad root in factor '" + token + "'");
    }
    root = std::stoull(root_text);
  }
  static const std::map<char, GraphKind> kinds{{'K', GraphKind::complete},
                                               {'P', GraphKind::path},
                                               {'C', GraphKind::cycle},
                                               {'S', GraphKind::star}};
  if (body.size() >= 2 && kinds.count(body[0]) &&
      body.find_first_not_of("0123456789", 1) == std::string::npos) {
    return RootedGraph{named_graph(kinds.at(body[0]), std::stoull(body.substr(1))), root};
  }
  return RootedGraph{load_graph(body), root};
}

std::string rows_to_text(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out;
  for (std::size_t i = 0; i < kv.size(); ++i) {
    if (i) out += ' ';
    out += kv[i].first + "=" + kv[i].second;
  }
  return out + "\n";
}

// ---- subcommands ---------------------------------------------------------

struct QecArgs {
  std::string file;
};

std::string cmd_qec(const QecArgs& a, bool as_json) {
  const auto r = qec_exact(load_graph(a.file));
  if (as_json) {
    return json{{"value", r.value},
                {"optimizer", to_std(r.optimizer)},
                {"method", std::string(to_string(r.method))},
                {"residual", r.residual}}
               .dump() +
           "\n";
  }
  return rows_to_text({{"value", num(r.value)},
                       {"optimizer", join(r.optimizer)},
                       {"method", std::string(to_string(r.method))},
                       {"residual", num(r.residual)}});
}

struct StarArgs {
  std::vector<std::string> factors;
  std::string out_path;
};

std::string cmd_star(const StarArgs& a, bool as_json) {
  std::vector<RootedGraph> factors;
  for (const auto& f : a.factors) factors.push_back(parse_factor(f));
  const auto product = star_product(StarSpec(std::move(factors)));
  std::string payload;
  if (as_json) {
    json edges = json::array();
    for (const auto& [u, v] : product.graph.edges()) edges.push_back({u, v});
    payload = json{{"vertex_count", product.graph.vertex_count()},
                   {"edges", edges},
                   {"vertex_maps", product.vertex_maps}}
                  .dump() +
              "\n";
  } else {
    std::ostringstream os;
    write_edge_list(os, product.graph);
    payload = os.str();
  }
  if (a.out_path.empty()) return payload;
  std::ofstream out(a.out_path);
  if (!out) throw Error("cannot write '" + a.out_path + "'");
  out << payload;
  return "";
}

struct MinrootArgs {
  std::string a, d;
  double tol = kDefaultRootTolerance;
  bool all = false;
  bool bounds = false;
};

std::string cmd_minroot(const MinrootArgs& args, bool as_json) {
  const ParamPair p(parse_doubles(args.a), parse_counts(args.d));
  const auto sol = min_root(p, args.tol);
  std::vector<std::pair<std::string, std::string>> kv{{"lambda", num(sol.lambda)},
                                                      {"lo", num(sol.lo)},
                                                      {"hi", num(sol.hi)},
                                                      {"residual", num(sol.residual)},
                                                      {"method", std::string(to_string(sol.method))}};
  json j{{"lambda", sol.lambda},
         {"lo", sol.lo},
         {"hi", sol.hi},
         {"residual", sol.residual},
         {"method", std::string(to_string(sol.method))}};
  if (args.all) {
    const auto roots = all_roots(p, args.tol);
    std::string list;
    json arr = json::array();
    for (const auto& r : roots) {
      if (!list.empty()) list += ',';
      list += num(r.lambda);
      arr.push_back(r.lambda);
    }
    kv.emplace_back("roots", list);
    j["roots"] = arr;
  }
  if (args.bounds) {
    json b = json::object();
    if (p.size() >= 2) {
      const auto basic = bounds_basic(p);
      kv.emplace_back("harmonic", num(basic.lower));
      kv.emplace_back("min_a", num(basic.upper));
      b["harmonic"] = basic.lower;
      b["min_a"] = basic.upper;
    }
    if (!p.all_infinite()) {
      const auto sharp = bounds_sharp(p);
      kv.emplace_back("est1_lower", num(sharp.est1_lower));
      kv.emplace_back("est2_lower", num(sharp.est2_lower));
      kv.emplace_back("est1_upper", num(sharp.est1_upper));
      b["est1_lower"] = sharp.est1_lower;
      b["est2_lower"] = sharp.est2_lower;
      b["est1_upper"] = sharp.est1_upper;
    }
    if (p.size() == 2) {
      const double cf = closed_form_r2(p.a()[0], p.a()[1], p.d()[0], p.d()[1]);
      kv.emplace_back("closed_form_r2", num(cf));
      b["closed_form_r2"] = cf;
    }
    j["bounds"] = b;
  }
  return as_json ? j.dump() + "\n" : rows_to_text(kv);
}

struct CondminArgs {
  std::string a, d;
};

std::string cmd_condmin(const CondminArgs& args, bool as_json) {
  const auto a = parse_doubles(args.a);
  const auto d = parse_sizes(args.d);
  const PhiInstance inst(a, d);
  const auto res = cond_min(inst);
  const double resid = stationarity_residual(inst, res.argmin.x0, res.argmin.xs, res.value);
  std::vector<ExtCount> dc;
  for (auto dj : d) dc.emplace_back(static_cast<double>(dj));
  const double lambda = min_root(ParamPair(a, dc)).lambda;
  const Eigen::VectorXd z = res.argmin.flatten();
  if (as_json) {
    return json{{"value", res.value},
                {"argmin", to_std(z)},
                {"stationarity_residual", resid},
                {"min_root", lambda},
                {"delta", res.value - lambda}}
               .dump() +
           "\n";
  }
  return rows_to_text({{"value", num(res.value)},
                       {"argmin", join(z)},
                       {"stationarity_residual", num(resid)},
                       {"min_root", num(lambda)},
                       {"delta", num(res.value - lambda)}});
}

struct BoundsArgs {
  std::string q, n;
};

std::string cmd_bounds(const BoundsArgs& args, bool as_json) {
  const auto qs = parse_doubles(args.q);
  const auto ns = parse_counts(args.n);
  if (qs.size() != ns.size()) throw UsageError("--q and --n must have the same length");
  std::vector<FactorSummary> factors;
  for (std::size_t j = 0; j < qs.size(); ++j) factors.emplace_back(qs[j], ns[j]);

  json j = json::object();
  std::vector<std::pair<std::string, std::string>> kv;
  if (const auto zero = zero_rule(factors)) {
    j = json{{"lower", *zero}, {"upper", *zero}, {"zero_rule", true}};
    kv = {{"lower", num(*zero)}, {"upper", num(*zero)}, {"zero_rule", "true"}};
  } else {
    const auto s = qec_sandwich(factors);
    j = json{{"lower", s.lower}, {"lambda", -s.upper}, {"upper", s.upper}};
    kv = {{"lower", num(s.lower)}, {"lambda", num(-s.upper)}, {"upper", num(s.upper)}};
    if (factors.size() == 2) {
      const double v = q12(qs[0], qs[1], ns[0], ns[1]);
      j["q12"] = v;
      kv.emplace_back("q12", num(v));
    }
    if (factors.size() >= 2) {
      const double h = harmonic_corollary(factors);
      j["harmonic"] = h;
      kv.emplace_back("harmonic", num(h));
    }
  }
  return as_json ? j.dump() + "\n" : rows_to_text(kv);
}

struct PathsArgs {
  std::size_t max_n = 20;
};

std::string cmd_paths(const PathsArgs& args, bool as_json) {
  if (args.max_n < 2) throw UsageError("--max-n must be >= 2");
  json rows = json::array();
  std::string text = "n qec thm56_lower upper\n";
  for (std::size_t n = 2; n <= args.max_n; ++n) {
    const double q = qec_exact(named_graph(GraphKind::path, n)).value;
    const auto b = thm56_bounds(n);
    rows.push_back({{"n", n}, {"qec", q}, {"thm56_lower", b.lower}, {"upper", b.upper}});
    text += std::to_string(n) + " " + num(q) + " " + num(b.lower) + " " + num(b.upper) + "\n";
  }
  return as_json ? rows.dump() + "\n" : text;
}

struct SeqArgs {
  std::size_t terms = 16;
};

std::string cmd_seq(const SeqArgs& args, bool as_json) {
  if (args.terms == 0) throw UsageError("--terms must be >= 1");
  const auto series = a_series(args.terms - 1);
  json rows = json::array();
  std::string text = "n a b convolution series consistent\n";
  for (std::size_t n = 0; n < args.terms; ++n) {
    const auto a = a_closed(n);
    const auto b = b_ceil(n);
    const auto c = convolution_check(n);
    const bool ok = (a == c) && (a == series[n]);
    rows.push_back({{"n", n},
                    {"a", a.str()},
                    {"b", b.str()},
                    {"convolution", c.str()},
                    {"series", series[n].str()},
                    {"consistent", ok}});
    text += std::to_string(n) + " " + a.str() + " " + b.str() + " " + c.str() + " " +
            series[n].str() + " " + (ok ? "true" : "false") + "\n";
  }
  return as_json ? json{{"terms", rows}}.dump() + "\n" : text;
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 0;
};

std::pair<std::string, bool> cmd_verify(const VerifyArgs& args, bool as_json) {
  const auto suite = parse_suite(args.suite);
  if (!suite) throw UsageError("unknown suite '" + args.suite + "'");
  VerifyOptions opt;
  opt.seed = args.seed;
  const auto report = run_suite(*suite, opt);
  std::size_t passed = 0;
  json checks = json::array();
  std::string text;
  for (const auto& c : report.checks) {
    passed += c.passed ? 1 : 0;
    json item{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (c.counterexample) item["counterexample"] = *c.counterexample;
    checks.push_back(item);
    text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + " cases=" +
            std::to_string(c.cases) + (c.counterexample ? " first_counterexample: " + *c.counterexample : "") +
            "\n";
  }
  text += "summary: " + std::to_string(passed) + "/" + std::to_string(report.checks.size()) +
          " checks passed\n";
  const std::string out =
      as_json ? json{{"suite", args.suite}, {"checks", checks}, {"passed", report.passed()}}.dump() + "\n"
              : text;
  return {out, report.passed()};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Quadratic embedding constants of graphs and star products", "qectool"};
  app.require_subcommand(1);
  bool as_json = false;

  QecArgs qa;
  auto* qec_cmd = app.add_subcommand("qec", "QEC of a graph given as an edge-list file");
  qec_cmd->add_option("edges-file", qa.file, "Edge-list file")->required();
  qec_cmd->add_flag("--json", as_json, "Emit JSON");

  StarArgs sa;
  auto* star_cmd = app.add_subcommand("star", "Build a star product and print its edge list");
  star_cmd->add_option("--factor,-f", sa.factors, "Factor: K<n>, P<n>, C<n>, S<n> or a file, with optional @root")
      ->required();
  star_cmd->add_option("--out,-o", sa.out_path, "Write to this file instead of stdout");
  star_cmd->add_flag("--json", as_json, "Emit JSON");

  MinrootArgs ma;
  auto* minroot_cmd = app.add_subcommand("minroot", "Minimal solution lambda_1(d, a)");
  minroot_cmd->add_option("--a", ma.a, "Comma-separated positive reals")->required();
  minroot_cmd->add_option("--d", ma.d, "Comma-separated positive reals or 'inf'")->required();
  minroot_cmd->add_option("--tol", ma.tol, "Relative bisection tolerance");
  minroot_cmd->add_flag("--all-roots", ma.all, "Also list every solution");
  minroot_cmd->add_flag("--bounds", ma.bounds, "Also print the bound chain");
  minroot_cmd->add_flag("--json", as_json, "Emit JSON");

  CondminArgs ca;
  auto* condmin_cmd = app.add_subcommand("condmin", "Conditional minimum M(d, a) of phi");
  condmin_cmd->add_option("--a", ca.a, "Comma-separated positive reals")->required();
  condmin_cmd->add_option("--d", ca.d, "Comma-separated positive integers")->required();
  condmin_cmd->add_flag("--json", as_json, "Emit JSON");

  BoundsArgs ba;
  auto* bounds_cmd = app.add_subcommand("bounds", "Star-product QEC bounds from factor data");
  bounds_cmd->add_option("--q", ba.q, "Comma-separated factor QECs (<= 0)")->required();
  bounds_cmd->add_option("--n", ba.n, "Comma-separated factor sizes |V|-1 or 'inf'")->required();
  bounds_cmd->add_flag("--json", as_json, "Emit JSON");

  PathsArgs pa;
  auto* paths_cmd = app.add_subcommand("paths", "QEC(P_n) table with the two-sided bound");
  paths_cmd->add_option("--max-n", pa.max_n, "Largest n");
  paths_cmd->add_flag("--json", as_json, "Emit JSON");

  SeqArgs qa2;
  auto* seq_cmd = app.add_subcommand("seq", "Terms of a_n, b_n and their consistency");
  seq_cmd->add_option("--terms", qa2.terms, "Number of terms starting at n = 0");
  seq_cmd->add_flag("--json", as_json, "Emit JSON");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run exact identity suites");
  verify_cmd->add_option("--suite", va.suite, "lemma61, detA, series or all")
      ->check(CLI::IsMember({"lemma61", "detA", "series", "all"}));
  verify_cmd->add_option("--seed", va.seed, "Seed for randomized cases");
  verify_cmd->add_flag("--json", as_json, "Emit JSON");

  CommandResult result;
  std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"qectool"} : args;
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = (code == 0) ? kExitOk : kExitUsage;
    if (code != 0 && result.err.find("Usage") == std::string::npos) {
      result.err += app.help();
    }
    return result;
  }

  try {
    if (qec_cmd->parsed()) {
      result.out = cmd_qec(qa, as_json);
    } else if (star_cmd->parsed()) {
      result.out = cmd_star(sa, as_json);
    } else if (minroot_cmd->parsed()) {
      result.out = cmd_minroot(ma, as_json);
    } else if (condmin_cmd->parsed()) {
      result.out = cmd_condmin(ca, as_json);
    } else if (bounds_cmd->parsed()) {
      result.out = cmd_bounds(ba, as_json);
    } else if (paths_cmd->parsed()) {
      result.out = cmd_paths(pa, as_json);
    } else if (seq_cmd->parsed()) {
      result.out = cmd_seq(qa2, as_json);
    } else if (verify_cmd->parsed()) {
      auto [out, ok] = cmd_verify(va, as_json);
      result.out = std::move(out);
      if (!ok) result.exit_code = kExitDomainError;
    }
  } catch (const UsageError& e) {
    result.exit_code = kExitUsage;
    result.err = std::string("usage error: ") + e.what() + "\n" + app.help();
  } catch (const Error& e) {
    result.exit_code = kExitDomainError;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace qec::cli
