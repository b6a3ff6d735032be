#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cli.hpp"
#include "qec/graph.hpp"

using qec::cli::run;
using nlohmann::json;

namespace {

const std::string data_dir = QEC_TEST_DATA_DIR;

qec::cli::CommandResult call(std::vector<std::string> args) {
  args.insert(args.begin(), "qectool");
  return run(args);
}

std::string field(const std::string& line, const std::string& key) {
  std::istringstream in(line);
  std::string tok;
  while (in >> tok)
    if (tok.rfind(key + "=", 0) == 0) return tok.substr(key.size() + 1);
  return {};
}

// Every number in the document must survive a print/parse round trip.
void check_numbers_round_trip(const json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    REQUIRE(json::parse(json(v).dump()).get<double>() == v);
  } else if (j.is_structured()) {
    for (const auto& x : j) check_numbers_round_trip(x);
  }
}

}  // namespace

TEST_CASE("qec subcommand") {
  auto r = call({"qec", data_dir + "/p4.edges"});
  REQUIRE(r.exit_code == 0);
  CHECK(std::stod(field(r.out, "value")) == doctest::Approx(-0.58578643762690495).epsilon(1e-12));
  CHECK(field(r.out, "method") == "projected_eigen");

  r = call({"qec", data_dir + "/p4.edges", "--json"});
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("value").get<double>() == doctest::Approx(-0.58578643762690495).epsilon(1e-12));
  CHECK(j.at("optimizer").size() == 4);
  CHECK(j.contains("method"));
  CHECK(j.contains("residual"));
  check_numbers_round_trip(j);
}

TEST_CASE("qec subcommand errors") {
  auto r = call({"qec", data_dir + "/disconnected.edges"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("error:") == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  r = call({"qec", data_dir + "/duplicate.edges"});
  CHECK(r.exit_code == 1);
  r = call({"qec", data_dir + "/missing.edges"});
  CHECK(r.exit_code == 1);
  r = call({"qec"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("usage errors") {
  auto r = call({});
  CHECK(r.exit_code == 2);
  r = call({"frobnicate"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  r = call({"minroot", "--a", "1,x", "--d", "1,1"});
  CHECK(r.exit_code == 2);
  r = call({"minroot", "--a", "1,,2", "--d", "1,1"});
  CHECK(r.exit_code == 2);
  r = call({"paths", "--max-n", "abc"});
  CHECK(r.exit_code == 2);
  r = call({"verify", "--suite", "bogus"});
  CHECK(r.exit_code == 2);
  r = call({"bounds", "--q", "-1,-1", "--n", "2"});
  CHECK(r.exit_code == 2);
  r = call({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("minroot") != std::string::npos);
}

TEST_CASE("minroot subcommand") {
  auto r = call({"minroot", "--a", "1,1", "--d", "2,2"});
  REQUIRE(r.exit_code == 0);
  CHECK(std::stod(field(r.out, "lambda")) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);

  r = call({"minroot", "--a", "1,2", "--d", "3,inf", "--bounds", "--all-roots", "--json"});
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("roots").size() == 2);
  CHECK(j.at("bounds").at("harmonic").get<double>() <= j.at("lambda").get<double>());
  CHECK(j.at("lambda").get<double>() < j.at("bounds").at("est1_upper").get<double>());
  check_numbers_round_trip(j);

  r = call({"minroot", "--a", "1", "--d", "0"});
  CHECK(r.exit_code == 1);
  r = call({"minroot", "--a", "-1", "--d", "1"});
  CHECK(r.exit_code == 1);
}

TEST_CASE("condmin subcommand") {
  auto r = call({"condmin", "--a", "1,1", "--d", "2,2", "--json"});
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("value").get<double>() == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(std::abs(j.at("delta").get<double>()) < 1e-10);
  CHECK(j.at("stationarity_residual").get<double>() < 1e-8);
  CHECK(j.at("argmin").size() == 5);
  r = call({"condmin", "--a", "1", "--d", "inf"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("bounds subcommand") {
  auto r = call({"bounds", "--q", "-1,-0.6666666666666666", "--n", "2,2", "--json"});
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("upper").get<double>() == doctest::Approx(-12.0 / (15.0 + std::sqrt(105.0))).epsilon(1e-12));
  CHECK(j.at("lambda").get<double>() == -j.at("upper").get<double>());
  CHECK(j.at("q12").get<double>() == doctest::Approx(j.at("upper").get<double>()).epsilon(1e-12));
  CHECK(j.at("harmonic").get<double>() == doctest::Approx(-0.4));
  CHECK(j.at("lower").get<double>() == doctest::Approx(-2.0 / 3.0));

  r = call({"bounds", "--q", "-1,-1,-1", "--n", "1,1,inf", "--json"});
  REQUIRE(r.exit_code == 0);
  j = json::parse(r.out);
  CHECK_FALSE(j.contains("q12"));

  r = call({"bounds", "--q", "-1,0", "--n", "1,3", "--json"});
  REQUIRE(r.exit_code == 0);
  j = json::parse(r.out);
  CHECK(j.at("upper").get<double>() == 0.0);
  CHECK(j.at("zero_rule").get<bool>());

  r = call({"bounds", "--q", "0.5", "--n", "1"});
  CHECK(r.exit_code == 1);
}

TEST_CASE("star subcommand") {
  auto r = call({"star", "--factor", "K3", "--factor", "K3"});
  REQUIRE(r.exit_code == 0);
  const auto prod = qec::parse_edge_list(r.out);
  CHECK(prod.vertex_count() == 5);
  CHECK(prod.edge_count() == 6);

  const std::string out_path = "star_test_output.edges";
  r = call({"star", "-f", data_dir + "/p4.edges@1", "-f", "C4", "--out", out_path});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out_path);
  const auto g = qec::read_edge_list(in);
  CHECK(g.vertex_count() == 7);
  std::remove(out_path.c_str());

  r = call({"star", "-f", "K3@7"});
  CHECK(r.exit_code == 1);
  r = call({"star", "-f", "K3@x"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("paths subcommand") {
  auto r = call({"paths", "--max-n", "10", "--json"});
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j.size() == 9);
  CHECK(j[2].at("n") == 4);
  CHECK(j[2].at("qec").get<double>() == doctest::Approx(-(2.0 - std::sqrt(2.0))).epsilon(1e-12));
  for (const auto& row : j) {
    CHECK(row.at("thm56_lower").get<double>() <= row.at("qec").get<double>() + 1e-12);
    CHECK(row.at("upper").get<double>() == -0.5);
  }
}

TEST_CASE("seq subcommand") {
  auto r = call({"seq", "--terms", "16", "--json"});
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  const std::vector<std::string> listed{"0",   "0",   "1",   "4",    "14",   "36",   "83",   "168",
                                        "316", "552", "917", "1452", "2218", "3276", "4711", "6608"};
  REQUIRE(j.at("terms").size() == 16);
  for (std::size_t n = 0; n < 16; ++n) {
    CHECK(j.at("terms")[n].at("a").get<std::string>() == listed[n]);
    CHECK(j.at("terms")[n].at("consistent").get<bool>());
  }
  r = call({"seq", "--terms", "0"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify subcommand") {
  auto r = call({"verify", "--suite", "all"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("summary: 13/13 checks passed") != std::string::npos);
  r = call({"verify", "--suite", "detA", "--seed", "9", "--json"});
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("passed").get<bool>());
  CHECK(j.at("checks").size() == 4);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> cmds{
      {"qec", data_dir + "/k3.edges", "--json"},
      {"minroot", "--a", "1,2,3", "--d", "1,inf,4", "--bounds", "--all-roots"},
      {"condmin", "--a", "0.5,2", "--d", "3,1"},
      {"paths", "--max-n", "12"},
  };
  for (const auto& c : cmds) {
    const auto first = call(c);
    const auto second = call(c);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
  }
}
