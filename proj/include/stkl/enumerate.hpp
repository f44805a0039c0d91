#pragma once

#include <functional>
#include <vector>

#include "stkl/tree.hpp"

namespace stkl {

// One representative per isomorphism class, in the order the canonical
// level-sequence successor first reaches each class. Deterministic.
std::vector<Tree> enumerate_trees(int n);

// Decode a Prüfer sequence of length n-2 over {0..n-1} into a labeled tree.
Tree prufer_decode(const std::vector<int>& seq);

// All n^(n-2) labeled trees via the Prüfer bijection; 2 <= n <= 9.
void for_each_labeled_tree(int n, const std::function<void(const Tree&)>& fn);

}  // namespace stkl
