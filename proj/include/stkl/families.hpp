#pragma once

#include <vector>

#include "stkl/tree.hpp"

namespace stkl {

// Canonical labelings: path 0-1-...-(n-1); star center 0; starlike center 0
// with arm vertices in arm order; caterpillar spine 0..d then leaves in
// spine order.
Tree path(int n);
Tree star(int n);

// Center of degree p, arm i a pendant path contributing arms[i] vertices.
// Arm lengths must be positive and non-increasing, p >= 2 (p = 2 is a path).
Tree starlike(const std::vector<int>& arms);

// Starlike on n vertices whose p arm lengths pairwise differ by at most one.
Tree balanced_starlike(int n, int p);

// Starlike with one arm of n - delta edges and delta - 1 single-edge arms:
// order n, maximum degree delta, delta leaves.
Tree broom(int n, int delta);

struct CaterpillarSignature {
  int d = 2;
  std::vector<int> attach;  // p_1..p_{d-1}, extra leaves per inner spine vertex
};

Tree caterpillar(int n, const CaterpillarSignature& sig);

// All extra leaves at the spine center; for odd d, s of them at the lower
// center and the rest at the upper one. For even d, s is ignored.
Tree central_caterpillar(int n, int d, int s);

// s extra leaves at the second spine vertex, the rest at the second-to-last.
Tree double_comet(int n, int d, int s);

// True iff y is majorized by x: both non-increasing, equal totals and every
// prefix sum of x dominates the one of y.
bool majorization_prec(const std::vector<int>& x, const std::vector<int>& y);

// Dominance order on caterpillar attachment tuples: equal totals, and both
// the left and the right prefix sums of x dominate those of y for every
// 1 <= j < floor(d/2), where d - 1 is the tuple length.
bool caterpillar_order(const std::vector<int>& x, const std::vector<int>& y);

}  // namespace stkl
