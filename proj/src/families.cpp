#include "stkl/families.hpp"

#include <algorithm>
#include <numeric>

namespace stkl {

Tree path(int n) {
  if (n < 1) throw BadRangeError("path order must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Tree(n, edges);
}

Tree star(int n) {
  if (n < 2) throw BadRangeError("star order must be at least 2");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Tree(n, edges);
}

Tree starlike(const std::vector<int>& arms) {
  if (arms.size() < 2) throw BadSignatureError("starlike needs at least 2 arms");
  for (size_t i = 0; i < arms.size(); ++i) {
    if (arms[i] < 1) throw BadSignatureError("arm lengths must be positive");
    if (i > 0 && arms[i] > arms[i - 1])
      throw BadSignatureError("arm lengths must be non-increasing");
  }
  int n = 1 + std::accumulate(arms.begin(), arms.end(), 0);
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int len : arms) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree(n, edges);
}

Tree balanced_starlike(int n, int p) {
  if (p < 2 || p > n - 1) throw BadRangeError("need 2 <= p <= n - 1");
  int q = (n - 1) / p, r = (n - 1) % p;
  std::vector<int> arms(p, q);
  for (int i = 0; i < r; ++i) ++arms[i];
  return starlike(arms);
}

Tree broom(int n, int delta) {
  if (delta < 3 || delta > n - 1) throw BadRangeError("need 3 <= delta <= n - 1");
  std::vector<int> arms(delta, 1);
  arms[0] = n - delta;
  return starlike(arms);
}

Tree caterpillar(int n, const CaterpillarSignature& sig) {
  if (sig.d < 2) throw BadSignatureError("caterpillar diameter must be >= 2");
  if (static_cast<int>(sig.attach.size()) != sig.d - 1)
    throw BadSignatureError("attachment tuple must have d - 1 entries");
  int total = 0;
  for (int p : sig.attach) {
    if (p < 0) throw BadSignatureError("attachment counts must be nonnegative");
    total += p;
  }
  if (total != n - sig.d - 1)
    throw BadSignatureError("attachment counts must sum to n - d - 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= sig.d; ++v) edges.emplace_back(v - 1, v);
  int next = sig.d + 1;
  for (int i = 1; i <= sig.d - 1; ++i)
    for (int j = 0; j < sig.attach[i - 1]; ++j) edges.emplace_back(i, next++);
  Tree t(n, edges);
  if (diameter(t) != sig.d)
    throw DiameterChangedError("attachments altered the diameter");
  return t;
}

Tree central_caterpillar(int n, int d, int s) {
  if (d < 2 || d > n - 1) throw BadRangeError("need 2 <= d <= n - 1");
  int extra = n - d - 1;
  if (s < 0 || s > extra) throw BadRangeError("need 0 <= s <= n - d - 1");
  CaterpillarSignature sig{d, std::vector<int>(d - 1, 0)};
  if (d % 2 == 0) {
    sig.attach[d / 2 - 1] = extra;
  } else {
    sig.attach[d / 2 - 1] = s;
    sig.attach[d / 2] = extra - s;
  }
  return caterpillar(n, sig);
}

Tree double_comet(int n, int d, int s) {
  if (d < 2 || d > n - 1) throw BadRangeError("need 2 <= d <= n - 1");
  int extra = n - d - 1;
  if (s < 0 || s > extra) throw BadRangeError("need 0 <= s <= n - d - 1");
  CaterpillarSignature sig{d, std::vector<int>(d - 1, 0)};
  sig.attach.front() += s;
  sig.attach.back() += extra - s;
  return caterpillar(n, sig);
}

bool majorization_prec(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size())
    throw LengthMismatchError("tuples must have equal length");
  if (x.size() < 2) throw LengthMismatchError("tuples must have length >= 2");
  long long sx = 0, sy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (i > 0 && (x[i] > x[i - 1] || y[i] > y[i - 1])) return false;
    sx += x[i];
    sy += y[i];
    if (i + 1 < x.size() && sx < sy) return false;
  }
  return sx == sy;
}

bool caterpillar_order(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size())
    throw LengthMismatchError("tuples must have equal length");
  int d = static_cast<int>(x.size()) + 1;
  long long sx = std::accumulate(x.begin(), x.end(), 0LL);
  long long sy = std::accumulate(y.begin(), y.end(), 0LL);
  if (sx != sy) return false;
  long long lx = 0, ly = 0, rx = 0, ry = 0;
  for (int j = 1; j < d / 2; ++j) {
    lx += x[j - 1];
    ly += y[j - 1];
    rx += x[d - 1 - j];
    ry += y[d - 1 - j];
    if (lx < ly || rx < ry) return false;
  }
  return true;
}

}  // namespace stkl
