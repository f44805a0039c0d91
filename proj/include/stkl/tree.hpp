#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stkl/errors.hpp"

namespace stkl {

// Strictly increasing sequence of vertex ids, all valid for the tree at hand.
using VertexSet = std::vector<int>;

// Immutable free tree on dense vertex ids 0..n-1. Adjacency lists are kept
// sorted, so the value is independent of edge insertion order. All
// operations on Tree are pure; values are safe to share across threads.
class Tree {
 public:
  Tree() = default;  // the one-vertex tree
  Tree(int n, const std::vector<std::pair<int, int>>& edge_list);

  int order() const { return n_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Tree& other) const { return adj_ == other.adj_; }

 private:
  int n_ = 1;
  std::vector<std::vector<int>> adj_ = {{}};
};

Tree build_tree(int n, const std::vector<std::pair<int, int>>& edges);

void validate_vertex_set(const Tree& t, const VertexSet& s);

std::vector<int> distances_from(const Tree& t, int v);
int eccentricity(const Tree& t, int v);
int set_eccentricity(const Tree& t, int v, const VertexSet& x);
int diameter(const Tree& t);
int radius(const Tree& t);

struct DiametricalPath {
  int a = 0, b = 0;           // endpoints, a < b
  std::vector<int> vertices;  // the a..b vertex sequence
};

// Every path of maximum length, one entry per unordered endpoint pair,
// ordered by (a, b).
std::vector<DiametricalPath> diametrical_paths(const Tree& t);

// Vertex sequence of the unique a..b path (inclusive).
std::vector<int> path_between(const Tree& t, int a, int b);

// Vertex set of the minimal connected subtree containing s.
VertexSet spanning_subtree(const Tree& t, const VertexSet& s);

VertexSet leaves(const Tree& t);
int max_degree(const Tree& t);

// Isomorphism-invariant code: equal codes iff isomorphic trees. Rooted at
// the centroid; with two centroids the lexicographically smaller of the two
// rooted encodings wins.
std::string canonical_code(const Tree& t);

enum class ShapeTag { path, star, broom, starlike, caterpillar, general };

std::string shape_tag_name(ShapeTag tag);

struct ShapeClass {
  ShapeTag tag = ShapeTag::general;
  // Arm lengths (non-increasing) for starlike/broom; spine attachment
  // counts for caterpillar. Absent otherwise.
  std::optional<std::vector<int>> signature;
};

// path/star take precedence over starlike; a starlike tree with at most one
// arm longer than a single edge is a broom; starlike takes precedence over
// caterpillar.
ShapeClass classify_shape(const Tree& t);

// (d, attachment counts p_1..p_{d-1}) if deleting all leaves of t yields a
// path, else nullopt. Counts are reported in the lexicographically smaller
// spine direction. Paths are caterpillars with all-zero attachments.
std::optional<std::pair<int, std::vector<int>>> caterpillar_attachments(
    const Tree& t);

}  // namespace stkl
