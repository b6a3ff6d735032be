#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "qec/errors.hpp"
#include "qec/graph.hpp"

namespace qec {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool parse_index(std::istringstream& ss, std::size_t& out) {
  std::string tok;
  if (!(ss >> tok)) return false;
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    out = std::stoull(tok);
  } catch (const std::out_of_range&) {
    return false;
  }
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    std::istringstream ss(body);
    std::string first;
    if (!(ss >> first)) continue;
    ss.clear();
    ss.seekg(0);
    if (!have_header) {
      std::string tag;
      ss >> tag;
      if (tag != "n" || !parse_index(ss, n)) fail("expected header 'n <vertex_count>'");
      have_header = true;
    } else {
      std::size_t u = 0, v = 0;
      if (!parse_index(ss, u) || !parse_index(ss, v)) fail("expected 'u v'");
      const Edge key{std::min(u, v), std::max(u, v)};
      if (!seen.insert(key).second) {
        throw DuplicateEdgeError("line " + std::to_string(line_no) + ": duplicate edge {" +
                                 std::to_string(u) + ", " + std::to_string(v) + "}");
      }
      edges.emplace_back(u, v);
    }
    std::string extra;
    if (ss >> extra) fail("unexpected trailing token '" + extra + "'");
  }
  if (!have_header) throw ParseError("missing header 'n <vertex_count>'");
  return build_graph(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace qec
