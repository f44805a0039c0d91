#include "stkl/tree.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace stkl {

Tree::Tree(int n, const std::vector<std::pair<int, int>>& edge_list) {
  if (n < 1) throw NotATreeError("tree order must be positive");
  if (static_cast<int>(edge_list.size()) != n - 1)
    throw NotATreeError("a tree of order " + std::to_string(n) + " needs " +
                        std::to_string(n - 1) + " edges, got " +
                        std::to_string(edge_list.size()));
  n_ = n;
  adj_.assign(n, {});
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw NotATreeError("vertex id out of range");
    if (u == v) throw NotATreeError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw NotATreeError("duplicate edge");
  }
  // n-1 edges + connected => acyclic
  std::vector<char> seen(n, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : adj_[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        q.push_back(u);
      }
  }
  if (reached != n) throw NotATreeError("disconnected edge list");
}

std::vector<std::pair<int, int>> Tree::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(n_ > 0 ? n_ - 1 : 0);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Tree build_tree(int n, const std::vector<std::pair<int, int>>& edges) {
  return Tree(n, edges);
}

void validate_vertex_set(const Tree& t, const VertexSet& s) {
  int prev = -1;
  for (int v : s) {
    if (v <= prev) throw BadRangeError("vertex set must be strictly increasing");
    if (v >= t.order()) throw BadRangeError("vertex id out of range in set");
    prev = v;
  }
}

std::vector<int> distances_from(const Tree& t, int v) {
  if (v < 0 || v >= t.order()) throw BadRangeError("source vertex out of range");
  std::vector<int> dist(t.order(), -1);
  std::deque<int> q{v};
  dist[v] = 0;
  while (!q.empty()) {
    int w = q.front();
    q.pop_front();
    for (int u : t.neighbors(w))
      if (dist[u] < 0) {
        dist[u] = dist[w] + 1;
        q.push_back(u);
      }
  }
  return dist;
}

int eccentricity(const Tree& t, int v) {
  auto d = distances_from(t, v);
  return *std::max_element(d.begin(), d.end());
}

int set_eccentricity(const Tree& t, int v, const VertexSet& x) {
  if (x.empty()) throw EmptySetError("set eccentricity of an empty set");
  validate_vertex_set(t, x);
  auto d = distances_from(t, v);
  int best = 0;
  for (int u : x) best = std::max(best, d[u]);
  return best;
}

int diameter(const Tree& t) {
  // farthest vertex from any vertex is a diameter endpoint
  auto d0 = distances_from(t, 0);
  int a = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto da = distances_from(t, a);
  return *std::max_element(da.begin(), da.end());
}

int radius(const Tree& t) {
  int best = t.order();
  for (int v = 0; v < t.order(); ++v) best = std::min(best, eccentricity(t, v));
  return best;
}

std::vector<int> path_between(const Tree& t, int a, int b) {
  std::vector<int> parent(t.order(), -1);
  std::deque<int> q{a};
  parent[a] = a;
  while (!q.empty()) {
    int w = q.front();
    q.pop_front();
    if (w == b) break;
    for (int u : t.neighbors(w))
      if (parent[u] < 0) {
        parent[u] = w;
        q.push_back(u);
      }
  }
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<DiametricalPath> diametrical_paths(const Tree& t) {
  int n = t.order();
  int diam = diameter(t);
  std::vector<DiametricalPath> out;
  if (diam == 0) return out;
  for (int a = 0; a < n; ++a) {
    auto d = distances_from(t, a);
    for (int b = a + 1; b < n; ++b)
      if (d[b] == diam) out.push_back({a, b, path_between(t, a, b)});
  }
  return out;
}

VertexSet spanning_subtree(const Tree& t, const VertexSet& s) {
  if (s.empty()) throw EmptySetError("spanning subtree of an empty set");
  validate_vertex_set(t, s);
  int n = t.order();
  std::vector<char> keep(n, 1), in_s(n, 0);
  for (int v : s) in_s[v] = 1;
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
  std::deque<int> q;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1 && !in_s[v]) q.push_back(v);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    keep[v] = 0;
    for (int u : t.neighbors(v))
      if (keep[u] && --deg[u] == 1 && !in_s[u]) q.push_back(u);
  }
  VertexSet out;
  for (int v = 0; v < n; ++v)
    if (keep[v]) out.push_back(v);
  return out;
}

VertexSet leaves(const Tree& t) {
  VertexSet out;
  for (int v = 0; v < t.order(); ++v)
    if (t.degree(v) == 1) out.push_back(v);
  return out;
}

int max_degree(const Tree& t) {
  int best = 0;
  for (int v = 0; v < t.order(); ++v) best = std::max(best, t.degree(v));
  return best;
}

namespace {

std::vector<int> centroids(const Tree& t) {
  int n = t.order();
  if (n == 1) return {0};
  std::vector<int> size(n, 1), parent(n, -1), order;
  order.reserve(n);
  order.push_back(0);
  parent[0] = n;  // sentinel, never a vertex id
  for (size_t i = 0; i < order.size(); ++i)
    for (int u : t.neighbors(order[i]))
      if (parent[u] < 0) {
        parent[u] = order[i];
        order.push_back(u);
      }
  for (size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
  int best = n;
  std::vector<int> cs;
  for (int v = 0; v < n; ++v) {
    int heaviest = v == 0 ? 0 : n - size[v];
    for (int u : t.neighbors(v))
      if (u != parent[v]) heaviest = std::max(heaviest, size[u]);
    if (heaviest < best) {
      best = heaviest;
      cs = {v};
    } else if (heaviest == best) {
      cs.push_back(v);
    }
  }
  return cs;
}

std::string rooted_code(const Tree& t, int root) {
  std::function<std::string(int, int)> enc = [&](int v, int from) {
    std::vector<std::string> kids;
    for (int u : t.neighbors(v))
      if (u != from) kids.push_back(enc(u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ")";
    return s;
  };
  return enc(root, -1);
}

}  // namespace

std::string canonical_code(const Tree& t) {
  auto cs = centroids(t);
  std::string code = rooted_code(t, cs[0]);
  if (cs.size() == 2) code = std::min(code, rooted_code(t, cs[1]));
  return code;
}

std::string shape_tag_name(ShapeTag tag) {
  switch (tag) {
    case ShapeTag::path: return "path";
    case ShapeTag::star: return "star";
    case ShapeTag::broom: return "broom";
    case ShapeTag::starlike: return "starlike";
    case ShapeTag::caterpillar: return "caterpillar";
    case ShapeTag::general: return "general";
  }
  return "general";
}

std::optional<std::pair<int, std::vector<int>>> caterpillar_attachments(
    const Tree& t) {
  int n = t.order();
  if (n <= 2 || max_degree(t) <= 2) {
    // a bare path: spine only
    return std::make_pair(n - 1, std::vector<int>(std::max(0, n - 2), 0));
  }
  // the derived tree after deleting all leaves must be a path
  std::vector<char> inner(n, 0);
  for (int v = 0; v < n; ++v) inner[v] = t.degree(v) >= 2;
  std::vector<int> inner_deg(n, 0);
  int inner_count = 0, start = -1;
  for (int v = 0; v < n; ++v) {
    if (!inner[v]) continue;
    ++inner_count;
    for (int u : t.neighbors(v)) inner_deg[v] += inner[u];
    if (inner_deg[v] > 2) return std::nullopt;
  }
  std::vector<int> spine;
  if (inner_count == 1) {
    for (int v = 0; v < n; ++v)
      if (inner[v]) spine = {v};
  } else {
    for (int v = 0; v < n && start < 0; ++v)
      if (inner[v] && inner_deg[v] == 1) start = v;
    spine.push_back(start);
    int prev = -1, cur = start;
    while (true) {
      int next = -1;
      for (int u : t.neighbors(cur))
        if (inner[u] && u != prev) next = u;
      if (next < 0) break;
      spine.push_back(next);
      prev = cur;
      cur = next;
    }
    if (static_cast<int>(spine.size()) != inner_count) return std::nullopt;
  }
  int d = static_cast<int>(spine.size()) + 1;
  std::vector<int> attach(spine.size());
  for (size_t i = 0; i < spine.size(); ++i) {
    int leaf_nbrs = t.degree(spine[i]) - inner_deg[spine[i]];
    attach[i] = leaf_nbrs;
  }
  // one leaf at each spine end plays the role of the diametrical endpoint
  attach.front() -= 1;
  attach.back() -= 1;
  std::vector<int> rev(attach.rbegin(), attach.rend());
  if (rev < attach) attach = rev;
  return std::make_pair(d, attach);
}

ShapeClass classify_shape(const Tree& t) {
  int n = t.order();
  if (n <= 2 || max_degree(t) <= 2) return {ShapeTag::path, std::nullopt};
  if (diameter(t) == 2) return {ShapeTag::star, std::nullopt};
  int branching = 0, center = -1;
  for (int v = 0; v < n; ++v)
    if (t.degree(v) >= 3) {
      ++branching;
      center = v;
    }
  if (branching == 1) {
    // all branches at the unique branching vertex are bare chains
    std::vector<int> arms;
    for (int u : t.neighbors(center)) {
      int len = 1, prev = center, cur = u;
      while (t.degree(cur) == 2) {
        int next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1]
                                               : t.neighbors(cur)[0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.rbegin(), arms.rend());
    int long_arms = 0;
    for (int a : arms) long_arms += a > 1;
    return {long_arms <= 1 ? ShapeTag::broom : ShapeTag::starlike, arms};
  }
  if (auto cat = caterpillar_attachments(t))
    return {ShapeTag::caterpillar, cat->second};
  return {ShapeTag::general, std::nullopt};
}

}  // namespace stkl
