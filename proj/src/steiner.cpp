#include "stkl/steiner.hpp"

#include <algorithm>
#include <deque>

namespace stkl {

void validate_kl(const Tree& t, KLParams p) {
  if (p.k < 2) throw BadRangeError("k must be at least 2");
  if (p.l < 0 || p.l > p.k) throw BadRangeError("l must satisfy 0 <= l <= k");
  if (p.k > t.order())
    throw KTooLargeError("k = " + std::to_string(p.k) +
                         " exceeds tree order " + std::to_string(t.order()));
}

int steiner_distance(const Tree& t, const VertexSet& s) {
  return static_cast<int>(spanning_subtree(t, s).size()) - 1;
}

namespace {

// Distances and parents toward the nearest marked vertex.
void bfs_from_marked(const Tree& t, const std::vector<char>& marked,
                     std::vector<int>& dist, std::vector<int>& parent) {
  int n = t.order();
  dist.assign(n, -1);
  parent.assign(n, -1);
  std::deque<int> q;
  for (int v = 0; v < n; ++v)
    if (marked[v]) {
      dist[v] = 0;
      parent[v] = v;
      q.push_back(v);
    }
  while (!q.empty()) {
    int w = q.front();
    q.pop_front();
    for (int u : t.neighbors(w))
      if (dist[u] < 0) {
        dist[u] = dist[w] + 1;
        parent[u] = w;
        q.push_back(u);
      }
  }
}

int farthest_min_id(const std::vector<int>& dist) {
  int best = 0;
  for (size_t v = 1; v < dist.size(); ++v)
    if (dist[v] > dist[best]) best = static_cast<int>(v);
  return best;
}

}  // namespace

EccResult steiner_kl_eccentricity(const Tree& t, const VertexSet& s,
                                  KLParams p) {
  validate_kl(t, p);
  validate_vertex_set(t, s);
  if (static_cast<int>(s.size()) != p.l)
    throw BadSetSizeError("expected an l-set of size " + std::to_string(p.l) +
                          ", got " + std::to_string(s.size()));
  int n = t.order();
  std::vector<char> in_wit(n, 0), in_sub(n, 0);
  VertexSet witness = s;
  for (int v : s) in_wit[v] = 1;
  if (p.l > 0) {
    for (int v : spanning_subtree(t, s)) in_sub[v] = 1;
  } else {
    // seed with a diametrical pair
    auto d0 = distances_from(t, 0);
    int a = farthest_min_id(d0);
    auto da = distances_from(t, a);
    int b = farthest_min_id(da);
    witness = {std::min(a, b), std::max(a, b)};
    for (int v : witness) in_wit[v] = 1;
    for (int v : path_between(t, a, b)) in_sub[v] = 1;
  }
  std::vector<int> dist, parent;
  while (static_cast<int>(witness.size()) < p.k) {
    bfs_from_marked(t, in_sub, dist, parent);
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!in_wit[v] && (pick < 0 || dist[v] > dist[pick])) pick = v;
    witness.push_back(pick);
    in_wit[pick] = 1;
    for (int u = pick; !in_sub[u]; u = parent[u]) in_sub[u] = 1;
  }
  EccResult r;
  std::sort(witness.begin(), witness.end());
  r.witness = witness;
  for (int v = 0; v < n; ++v)
    if (in_sub[v]) r.witness_subtree.push_back(v);
  r.value = static_cast<int>(r.witness_subtree.size()) - 1;
  std::set_difference(witness.begin(), witness.end(), s.begin(), s.end(),
                      std::back_inserter(r.eccentric_vertices));
  return r;
}

int steiner_kl_eccentricity_oracle(const Tree& t, const VertexSet& s,
                                   KLParams p) {
  validate_kl(t, p);
  validate_vertex_set(t, s);
  if (static_cast<int>(s.size()) != p.l)
    throw BadSetSizeError("expected an l-set of size " + std::to_string(p.l));
  int n = t.order();
  std::vector<char> in_s(n, 0);
  for (int v : s) in_s[v] = 1;
  VertexSet rest;
  for (int v = 0; v < n; ++v)
    if (!in_s[v]) rest.push_back(v);
  if (p.k == p.l) return steiner_distance(t, s);
  int best = 0;
  for_each_subset(static_cast<int>(rest.size()), p.k - p.l,
                  [&](const VertexSet& idx) {
                    VertexSet full = s;
                    for (int i : idx) full.push_back(rest[i]);
                    std::sort(full.begin(), full.end());
                    best = std::max(best, steiner_distance(t, full));
                  });
  return best;
}

Rational avg_steiner_kl_ecc(const Tree& t, KLParams p) {
  validate_kl(t, p);
  int n = t.order();
  BigInt total = 0;
  for_each_subset(n, p.l, [&](const VertexSet& s) {
    total += steiner_kl_eccentricity(t, s, p).value;
  });
  return Rational(total, binomial(n, p.l));
}

BigInt steiner_wiener(const Tree& t, int k) {
  int n = t.order();
  if (k < 2) throw BadRangeError("k must be at least 2");
  if (k > n) throw KTooLargeError("k exceeds tree order");
  // an edge lies in the subtree of S iff S meets both sides of the split
  std::vector<int> size(n, 1), parent(n, -1), order;
  order.push_back(0);
  parent[0] = n;
  for (size_t i = 0; i < order.size(); ++i)
    for (int u : t.neighbors(order[i]))
      if (parent[u] < 0) {
        parent[u] = order[i];
        order.push_back(u);
      }
  for (size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
  BigInt all = binomial(n, k), total = 0;
  for (size_t i = 1; i < order.size(); ++i) {
    int c = size[order[i]];
    total += all - binomial(c, k) - binomial(n - c, k);
  }
  return total;
}

int steiner_k_diameter(const Tree& t, int k) {
  return steiner_kl_eccentricity(t, {}, {k, 0}).value;
}

int steiner_kl_radius(const Tree& t, KLParams p) {
  validate_kl(t, p);
  int best = t.order();
  for_each_subset(t.order(), p.l, [&](const VertexSet& s) {
    best = std::min(best, steiner_kl_eccentricity(t, s, p).value);
  });
  return best;
}

Rational closed_form_path(int n, KLParams p) {
  int k = p.k, l = p.l;
  if (k < 2 || l < 0 || l > k) throw BadRangeError("bad (k, l)");
  if (n <= k) throw BadRangeError("path closed form needs n > k");
  if (k == l) return Rational(BigInt(k - 1) * (n + 1), BigInt(k + 1));
  if (k - l == 1) {
    if (k == 2) {
      // exact eccentricity sum over the ends-heavy profile
      BigInt sum = BigInt(n) * (3 * n - 2) / 4;
      return Rational(sum, n);
    }
    BigInt twice_sum = 0;
    for (int d = k - 2; d <= n - 1; ++d) {
      int h = (n - 1 - d + 1) / 2;  // ceil((n-1-d)/2)
      BigInt term = BigInt(n) * n - n - BigInt(d) * d + d +
                    BigInt(2) * h * (n - d - h);
      twice_sum += binomial(d - 1, k - 3) * term;
    }
    return Rational(twice_sum, 2 * binomial(n, k - 1));
  }
  return Rational(n - 1);
}

Rational closed_form_star(int n, KLParams p) {
  int k = p.k, l = p.l;
  if (k < 2 || l < 0 || l > k) throw BadRangeError("bad (k, l)");
  if (n < 2 || k > n) throw BadRangeError("star closed form needs 2 <= k <= n");
  if (k == n) return Rational(n - 1);
  return Rational(BigInt(k) * n - l, BigInt(n));
}

void for_each_subset(int n, int r,
                     const std::function<void(const VertexSet&)>& fn) {
  if (r < 0 || r > n) return;
  if (r == 0) {
    fn({});
    return;
  }
  VertexSet c(r);
  for (int i = 0; i < r; ++i) c[i] = i;
  while (true) {
    fn(c);
    int i = r - 1;
    while (i >= 0 && c[i] == n - r + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace stkl
