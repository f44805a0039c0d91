#include "stkl/steiner.hpp"

#include <algorithm>

#include "doctest.h"
#include "stkl/enumerate.hpp"
#include "stkl/families.hpp"

using namespace stkl;

TEST_CASE("steiner distance") {
  CHECK(steiner_distance(path(5), {0, 4}) == 4);
  CHECK(steiner_distance(star(4), {1, 2, 3}) == 3);
  CHECK(steiner_distance(path(5), {1, 3}) == 2);
  // spine 0..5, two leaves at vertex 2 (ids 6,7), three at vertex 3
  Tree cat = central_caterpillar(11, 5, 2);
  CHECK(steiner_distance(cat, {0, 5, 6}) == 6);
  CHECK_THROWS_AS(steiner_distance(path(5), {}), EmptySetError);
}

TEST_CASE("greedy (k,l)-eccentricity on pinned cases") {
  auto r = steiner_kl_eccentricity(star(4), {0}, {3, 1});
  CHECK(r.value == 2);
  CHECK(r.witness.size() == 3);
  CHECK(r.eccentric_vertices.size() == 2);
  CHECK(steiner_kl_eccentricity(path(4), {1, 2}, {3, 2}).value == 2);
  // k = l degenerates to the steiner distance
  CHECK(steiner_kl_eccentricity(path(6), {0, 3, 5}, {3, 3}).value ==
        steiner_distance(path(6), {0, 3, 5}));
  CHECK_THROWS_AS(steiner_kl_eccentricity(path(4), {0}, {3, 2}),
                  BadSetSizeError);
  CHECK_THROWS_AS(steiner_kl_eccentricity(path(4), {0}, {9, 1}),
                  KTooLargeError);
}

TEST_CASE("witness invariants") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : enumerate_trees(n))
      for (int k = 2; k <= n; ++k)
        for (int l = 0; l <= k; ++l)
          for_each_subset(n, l, [&](const VertexSet& s) {
            auto r = steiner_kl_eccentricity(t, s, {k, l});
            CHECK(static_cast<int>(r.witness.size()) == k);
            CHECK(std::includes(r.witness.begin(), r.witness.end(), s.begin(),
                                s.end()));
            CHECK(steiner_distance(t, r.witness) == r.value);
            CHECK(r.witness_subtree == spanning_subtree(t, r.witness));
            CHECK(static_cast<int>(r.eccentric_vertices.size()) == k - l);
          });
}

TEST_CASE("enumeration oracle on pinned cases") {
  CHECK(steiner_kl_eccentricity_oracle(path(4), {0}, {2, 1}) == 3);
  CHECK(steiner_kl_eccentricity_oracle(star(4), {1}, {3, 1}) == 3);
  CHECK(steiner_kl_eccentricity_oracle(path(6), {2, 3}, {4, 2}) == 5);
}

TEST_CASE("greedy equals the oracle on every tree up to order 7") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : enumerate_trees(n))
      for (int k = 2; k <= n; ++k)
        for (int l = 0; l <= k; ++l)
          for_each_subset(n, l, [&](const VertexSet& s) {
            CHECK(steiner_kl_eccentricity(t, s, {k, l}).value ==
                  steiner_kl_eccentricity_oracle(t, s, {k, l}));
          });
}

TEST_CASE("value grows with k and stays within bounds") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& t : enumerate_trees(n))
      for (int l = 1; l <= 2; ++l)
        for_each_subset(n, l, [&](const VertexSet& s) {
          int prev = -1;
          for (int k = std::max(2, l); k <= n; ++k) {
            int v = steiner_kl_eccentricity(t, s, {k, l}).value;
            CHECK(v >= prev);
            CHECK(v >= l - 1);
            CHECK(v >= steiner_distance(t, s));
            CHECK(v <= n - 1);
            prev = v;
          }
        });
}

TEST_CASE("some optimal witness extends by leaves whenever enough exist") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& t : enumerate_trees(n)) {
      auto lv = leaves(t);
      for (int k = 2; k <= n; ++k)
        for (int l = 1; l < k; ++l)
          for_each_subset(n, l, [&](const VertexSet& s) {
            int outside = 0;
            for (int x : lv)
              if (!std::binary_search(s.begin(), s.end(), x)) ++outside;
            if (outside < k - l) return;
            int best = steiner_kl_eccentricity_oracle(t, s, {k, l});
            // try the all-leaf extensions only
            VertexSet pool;
            for (int x : lv)
              if (!std::binary_search(s.begin(), s.end(), x))
                pool.push_back(x);
            bool found = false;
            for_each_subset(static_cast<int>(pool.size()), k - l,
                            [&](const VertexSet& idx) {
                              VertexSet full = s;
                              for (int i : idx) full.push_back(pool[i]);
                              std::sort(full.begin(), full.end());
                              if (steiner_distance(t, full) == best)
                                found = true;
                            });
            CHECK(found);
          });
    }
}

TEST_CASE("average eccentricity on pinned cases") {
  CHECK(avg_steiner_kl_ecc(star(4), {2, 1}) == Rational(7, 4));
  CHECK(avg_steiner_kl_ecc(path(4), {3, 2}) == Rational(17, 6));
  CHECK(avg_steiner_kl_ecc(path(6), {4, 2}) == Rational(5));
  CHECK(avg_steiner_kl_ecc(star(4), {3, 1}) == Rational(11, 4));
}

TEST_CASE("average denominators divide the subset count") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& t : enumerate_trees(n))
      for (int k = 2; k <= n; ++k)
        for (int l = 0; l <= k; ++l) {
          Rational v = avg_steiner_kl_ecc(t, {k, l});
          CHECK(binomial(n, l) % denominator(v) == 0);
        }
}

TEST_CASE("steiner wiener index") {
  CHECK(steiner_wiener(path(4), 2) == 10);
  CHECK(steiner_wiener(star(4), 2) == 9);
  CHECK(steiner_wiener(path(5), 3) == 30);
  CHECK(steiner_wiener(path(5), 5) == 4);  // k = n spans everything
  CHECK_THROWS_AS(steiner_wiener(path(4), 5), KTooLargeError);
}

TEST_CASE("edge-count route matches the subset route") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : enumerate_trees(n))
      for (int k = 2; k <= n; ++k)
        CHECK(Rational(steiner_wiener(t, k)) ==
              Rational(binomial(n, k)) * avg_steiner_kl_ecc(t, {k, k}));
}

TEST_CASE("k-diameter and (k,l)-radius") {
  CHECK(steiner_k_diameter(path(5), 2) == 4);
  CHECK(steiner_k_diameter(star(4), 3) == 3);
  CHECK(steiner_kl_radius(star(4), {3, 1}) == 2);
  CHECK(steiner_kl_radius(path(5), {2, 0}) == 4);  // single empty set
}

TEST_CASE("leaf-scarce trees max out every eccentricity") {
  for (int n = 3; n <= 7; ++n)
    for (const auto& t : enumerate_trees(n)) {
      int p = static_cast<int>(leaves(t).size());
      for (int k = 2; k <= n - 1; ++k)
        for (int l = 0; l <= k; ++l) {
          if (k - l < p) continue;
          CHECK(avg_steiner_kl_ecc(t, {k, l}) == Rational(n - 1));
        }
    }
}

TEST_CASE("path closed form") {
  CHECK(closed_form_path(4, {2, 2}) == Rational(5, 3));
  CHECK(closed_form_path(4, {3, 2}) == Rational(17, 6));
  CHECK(closed_form_path(5, {2, 1}) == Rational(16, 5));
  CHECK(closed_form_path(9, {5, 2}) == Rational(8));
  CHECK_THROWS_AS(closed_form_path(4, {4, 2}), BadRangeError);
}

TEST_CASE("star closed form") {
  CHECK(closed_form_star(4, {2, 1}) == Rational(7, 4));
  CHECK(closed_form_star(5, {5, 2}) == Rational(4));
  CHECK(closed_form_star(5, {3, 3}) == Rational(12, 5));
  CHECK_THROWS_AS(closed_form_star(4, {5, 1}), BadRangeError);
}

TEST_CASE("closed forms match enumeration on small orders") {
  for (int n = 3; n <= 8; ++n) {
    Tree pt = path(n), st = star(n);
    for (int k = 2; k <= n; ++k)
      for (int l = 0; l <= k; ++l) {
        if (k < n) CHECK(closed_form_path(n, {k, l}) ==
                         avg_steiner_kl_ecc(pt, {k, l}));
        CHECK(closed_form_star(n, {k, l}) == avg_steiner_kl_ecc(st, {k, l}));
      }
  }
}
