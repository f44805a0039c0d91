#include "stkl/tree.hpp"

#include <sstream>

#include "doctest.h"
#include "stkl/enumerate.hpp"
#include "stkl/families.hpp"
#include "stkl/io.hpp"

using namespace stkl;

namespace {

Tree p5() { return path(5); }
Tree k13() { return Tree(4, {{0, 1}, {1, 2}, {1, 3}}); }  // center 1

}  // namespace

TEST_CASE("build_tree validates") {
  CHECK(Tree(2, {{0, 1}}).order() == 2);
  CHECK(k13().degree(1) == 3);
  CHECK_THROWS_AS(Tree(4, {{0, 1}, {1, 2}, {2, 0}}), NotATreeError);  // cycle
  CHECK_THROWS_AS(Tree(4, {{0, 1}, {2, 3}}), NotATreeError);  // wrong count
  CHECK_THROWS_AS(Tree(4, {{0, 1}, {0, 1}, {2, 3}}), NotATreeError);
  CHECK_THROWS_AS(Tree(3, {{0, 0}, {1, 2}}), NotATreeError);
  CHECK_THROWS_AS(Tree(3, {{0, 5}, {1, 2}}), NotATreeError);
  CHECK(Tree().order() == 1);
}

TEST_CASE("distances and eccentricities") {
  CHECK(distances_from(p5(), 0) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(distances_from(p5(), 2) == std::vector<int>{2, 1, 0, 1, 2});
  CHECK(distances_from(k13(), 1) == std::vector<int>{1, 0, 1, 1});
  CHECK(eccentricity(p5(), 0) == 4);
  CHECK(eccentricity(p5(), 2) == 2);
  CHECK(eccentricity(k13(), 1) == 1);
}

TEST_CASE("set eccentricity") {
  CHECK(set_eccentricity(p5(), 0, {2, 3, 4}) == 4);
  CHECK(set_eccentricity(p5(), 2, {2}) == 0);
  CHECK(set_eccentricity(k13(), 0, {2, 3}) == 2);
  CHECK_THROWS_AS(set_eccentricity(p5(), 0, {}), EmptySetError);
}

TEST_CASE("diameter, radius, diametrical paths") {
  CHECK(diameter(p5()) == 4);
  CHECK(radius(p5()) == 2);
  CHECK(diametrical_paths(p5()).size() == 1);
  CHECK(diameter(k13()) == 2);
  CHECK(radius(k13()) == 1);
  CHECK(diametrical_paths(k13()).size() == 3);
  CHECK(diameter(broom(9, 6)) == 4);
  auto dps = diametrical_paths(p5());
  CHECK(dps[0].a == 0);
  CHECK(dps[0].b == 4);
  CHECK(dps[0].vertices == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("eccentricity sandwich holds on every small tree") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : enumerate_trees(n)) {
      int r = radius(t), d = diameter(t);
      CHECK(d <= 2 * r);
      for (int v = 0; v < n; ++v) {
        int e = eccentricity(t, v);
        CHECK(r <= e);
        CHECK(e <= d);
      }
    }
}

TEST_CASE("spanning subtree") {
  CHECK(spanning_subtree(p5(), {0, 4}) == VertexSet{0, 1, 2, 3, 4});
  CHECK(spanning_subtree(k13(), {0, 2, 3}) == VertexSet{0, 1, 2, 3});
  CHECK(spanning_subtree(p5(), {1, 3}) == VertexSet{1, 2, 3});
  CHECK_THROWS_AS(spanning_subtree(p5(), {}), EmptySetError);
}

TEST_CASE("every leaf of a spanning subtree belongs to the query set") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : enumerate_trees(n))
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          VertexSet s{a, b};
          auto sub = spanning_subtree(t, s);
          // induced edge count
          int edges = 0;
          std::vector<char> in_sub(n, 0);
          for (int v : sub) in_sub[v] = 1;
          for (int v : sub)
            for (int u : t.neighbors(v))
              if (in_sub[u] && u > v) ++edges;
          CHECK(edges == static_cast<int>(sub.size()) - 1);
          for (int v : sub) {
            int deg_in = 0;
            for (int u : t.neighbors(v)) deg_in += in_sub[u];
            if (deg_in <= 1 && sub.size() > 1)
              CHECK((v == a || v == b));
          }
        }
}

TEST_CASE("leaves and degrees") {
  CHECK(leaves(p5()) == VertexSet{0, 4});
  CHECK(max_degree(p5()) == 2);
  CHECK(leaves(k13()).size() == 3);
  CHECK(max_degree(k13()) == 3);
  Tree bs = balanced_starlike(7, 4);
  CHECK(leaves(bs).size() == 4);
  CHECK(max_degree(bs) == 4);
}

TEST_CASE("canonical code is a full isomorphism invariant") {
  Tree a = k13();
  Tree b(4, {{2, 0}, {0, 3}, {0, 1}});  // relabeled star
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(canonical_code(path(4)) != canonical_code(a));
  CHECK(canonical_code(Tree()) == "()");
}

TEST_CASE("canonical code survives random relabelings") {
  unsigned state = 12345;
  auto next = [&state]() {
    state = state * 1664525u + 1013904223u;
    return state >> 16;
  };
  for (int n = 2; n <= 8; ++n)
    for (const auto& t : enumerate_trees(n)) {
      std::string code = canonical_code(t);
      for (int rep = 0; rep < 5; ++rep) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i)
          std::swap(perm[i], perm[next() % (i + 1)]);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : t.edges()) edges.emplace_back(perm[u], perm[v]);
        CHECK(canonical_code(Tree(n, edges)) == code);
      }
    }
}

TEST_CASE("shape classification") {
  CHECK(classify_shape(path(7)).tag == ShapeTag::path);
  CHECK(classify_shape(path(2)).tag == ShapeTag::path);
  CHECK(classify_shape(star(5)).tag == ShapeTag::star);
  auto b = classify_shape(broom(9, 6));
  CHECK(b.tag == ShapeTag::broom);
  REQUIRE(b.signature.has_value());
  CHECK(*b.signature == std::vector<int>{3, 1, 1, 1, 1, 1});
  auto c = classify_shape(central_caterpillar(11, 5, 2));
  CHECK(c.tag == ShapeTag::caterpillar);
  REQUIRE(c.signature.has_value());
  CHECK(*c.signature == std::vector<int>{0, 2, 3, 0});
  auto s = classify_shape(starlike({2, 2, 1}));
  CHECK(s.tag == ShapeTag::starlike);
  CHECK(*s.signature == std::vector<int>{2, 2, 1});
  // spider with three long legs: neither starlike-free nor caterpillar
  Tree spider = starlike({2, 2, 2});
  CHECK(classify_shape(spider).tag == ShapeTag::starlike);
  CHECK(!caterpillar_attachments(spider).has_value());
  // two branching vertices, caterpillar
  Tree cat(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}});
  CHECK(classify_shape(cat).tag == ShapeTag::caterpillar);
}

TEST_CASE("starlike signatures sum to n-1 and brooms stay starlike") {
  for (int n = 5; n <= 8; ++n)
    for (const auto& t : enumerate_trees(n)) {
      auto sc = classify_shape(t);
      if (sc.tag == ShapeTag::broom || sc.tag == ShapeTag::starlike) {
        int sum = 0;
        for (int a : *sc.signature) sum += a;
        CHECK(sum == n - 1);
      }
    }
}

TEST_CASE("edge list io") {
  std::istringstream in("# a comment\n0 1\n\n1 2   # trailing\n 1 3\n");
  Tree t = read_edge_list(in);
  CHECK(t.order() == 4);
  CHECK(canonical_code(t) == canonical_code(k13()));
  CHECK(edge_list_string(t) == "0 1\n1 2\n1 3\n");

  std::istringstream round(edge_list_string(t));
  CHECK(read_edge_list(round) == t);

  std::istringstream bad1("0\n");
  CHECK_THROWS_AS(read_edge_list(bad1), ParseError);
  std::istringstream bad2("0 1 2\n");
  CHECK_THROWS_AS(read_edge_list(bad2), ParseError);
  std::istringstream bad3("0 1\n0 1\n2 3\n");
  CHECK_THROWS_AS(read_edge_list(bad3), NotATreeError);
  std::istringstream empty("# nothing\n");
  CHECK(read_edge_list(empty).order() == 1);
}
