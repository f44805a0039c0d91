#pragma once

#include <functional>

#include "stkl/rational.hpp"
#include "stkl/tree.hpp"

namespace stkl {

struct KLParams {
  int k = 2;
  int l = 0;  // 0 <= l <= k, k >= 2
};

void validate_kl(const Tree& t, KLParams p);

// An eccentricity witness: a k-set containing the query set S whose Steiner
// distance attains the maximum, together with its spanning subtree and the
// k-l added (eccentric) vertices.
struct EccResult {
  int value = 0;
  VertexSet witness;
  VertexSet witness_subtree;
  VertexSet eccentric_vertices;
};

// Edge count of the minimal connected subtree containing s.
int steiner_distance(const Tree& t, const VertexSet& s);

// Maximum Steiner distance over all k-supersets of the l-set s, by greedy
// farthest-vertex augmentation (ties broken toward the smallest id). For
// l = 0 the witness is seeded with a diametrical pair. The greedy value is
// exact on trees; the enumeration oracle below guards that claim in tests.
EccResult steiner_kl_eccentricity(const Tree& t, const VertexSet& s, KLParams p);

// Same value by exhausting all C(n-l, k-l) supersets. Intended for small n.
int steiner_kl_eccentricity_oracle(const Tree& t, const VertexSet& s,
                                   KLParams p);

// Exact arithmetic mean over all l-subsets. For l = 0 this is the Steiner
// k-diameter as a rational.
Rational avg_steiner_kl_ecc(const Tree& t, KLParams p);

// Sum of Steiner distances over all k-subsets, via per-edge counting.
// Equals C(n,k) times the (k,k) average exactly.
BigInt steiner_wiener(const Tree& t, int k);

int steiner_k_diameter(const Tree& t, int k);
int steiner_kl_radius(const Tree& t, KLParams p);

// Closed-form averages for the path and the star. The path case k-l = 1
// with k = 2 uses the exact value floor(n(3n-2)/4)/n; see the closed-forms
// verification suite for the cross-checks.
Rational closed_form_path(int n, KLParams p);
Rational closed_form_star(int n, KLParams p);

// All r-subsets of {0..n-1} in lexicographic order.
void for_each_subset(int n, int r,
                     const std::function<void(const VertexSet&)>& fn);

}  // namespace stkl
