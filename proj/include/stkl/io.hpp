#pragma once

#include <iosfwd>
#include <string>

#include "stkl/tree.hpp"

namespace stkl {

// Edge-list text format: lines of "u v" with nonnegative ids, '#' comments
// and blank lines ignored, order n = 1 + max id. An empty list is the
// one-vertex tree.
Tree read_edge_list(std::istream& in);
Tree read_tree_file(const std::string& path);

void write_edge_list(std::ostream& out, const Tree& t);
std::string edge_list_string(const Tree& t);

}  // namespace stkl
