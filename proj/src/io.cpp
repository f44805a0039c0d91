#include "stkl/io.hpp"

#include <fstream>
#include <sstream>

namespace stkl {

Tree read_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int max_id = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v))
      throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
    std::string rest;
    if (ls >> rest)
      throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    if (u < 0 || v < 0)
      throw ParseError("line " + std::to_string(lineno) + ": negative vertex id");
    if (u > 1000000 || v > 1000000)
      throw ParseError("line " + std::to_string(lineno) + ": vertex id too large");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
  }
  if (edges.empty()) return Tree();
  return Tree(max_id + 1, edges);
}

Tree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Tree& t) {
  for (auto [u, v] : t.edges()) out << u << " " << v << "\n";
}

std::string edge_list_string(const Tree& t) {
  std::ostringstream ss;
  write_edge_list(ss, t);
  return ss.str();
}

}  // namespace stkl
