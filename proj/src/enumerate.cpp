#include "stkl/enumerate.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace stkl {

namespace {

// Beyer-Hedetniemi successor on canonical rooted level sequences
// (root level 1). Sequences run from the path (1,2,...,n) down to the
// star (1,2,2,...,2) in decreasing lexicographic order.
bool next_level_seq(std::vector<int>& s) {
  int n = static_cast<int>(s.size());
  int p = n - 1;
  while (p >= 0 && s[p] <= 2) --p;
  if (p <= 0) return false;
  int q = p - 1;
  while (s[q] != s[p] - 1) --q;
  for (int i = p; i < n; ++i) s[i] = s[i - (p - q)];
  return true;
}

Tree level_seq_to_tree(const std::vector<int>& s) {
  int n = static_cast<int>(s.size());
  std::vector<std::pair<int, int>> edges;
  std::vector<int> latest(n + 2, -1);
  for (int i = 0; i < n; ++i) {
    latest[s[i]] = i;
    if (s[i] > 1) edges.emplace_back(latest[s[i] - 1], i);
  }
  return Tree(n, edges);
}

}  // namespace

std::vector<Tree> enumerate_trees(int n) {
  if (n < 1) throw BadRangeError("order must be positive");
  if (n > 18) throw BadRangeError("exhaustive enumeration capped at order 18");
  if (n == 1) return {Tree()};
  std::vector<Tree> out;
  std::set<std::string> seen;
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  do {
    Tree t = level_seq_to_tree(s);
    if (seen.insert(canonical_code(t)).second) out.push_back(std::move(t));
  } while (next_level_seq(s));
  return out;
}

Tree prufer_decode(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(n, 1);
  for (int a : seq) {
    if (a < 0 || a >= n) throw BadRangeError("prufer entry out of range");
    ++deg[a];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaf_q;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaf_q.push(v);
  std::vector<std::pair<int, int>> edges;
  for (int a : seq) {
    int leaf = leaf_q.top();
    leaf_q.pop();
    edges.emplace_back(leaf, a);
    if (--deg[a] == 1) leaf_q.push(a);
  }
  int u = leaf_q.top();
  leaf_q.pop();
  int v = leaf_q.top();
  edges.emplace_back(u, v);
  return Tree(n, edges);
}

void for_each_labeled_tree(int n, const std::function<void(const Tree&)>& fn) {
  if (n < 2 || n > 9) throw BadRangeError("labeled enumeration needs 2 <= n <= 9");
  if (n == 2) {
    fn(Tree(2, {{0, 1}}));
    return;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    fn(prufer_decode(seq));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

}  // namespace stkl
