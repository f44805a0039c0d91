#include "stkl/transforms.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <sstream>

namespace stkl {

std::string sigma_variant_name(SigmaVariant v) {
  switch (v) {
    case SigmaVariant::plain: return "plain";
    case SigmaVariant::diametrical: return "diametrical";
    case SigmaVariant::leaf: return "leaf";
    case SigmaVariant::degree: return "degree";
  }
  return "plain";
}

namespace {

// Component of start when the edge (start, blocked) is cut, with the
// eccentricity of start inside it.
struct SideInfo {
  std::vector<char> in_side;
  int ecc = 0;
  int size = 0;
};

SideInfo side_of(const Tree& t, int start, int blocked) {
  SideInfo s;
  s.in_side.assign(t.order(), 0);
  s.in_side[start] = 1;
  s.size = 1;
  std::deque<std::pair<int, int>> q{{start, 0}};
  while (!q.empty()) {
    auto [v, d] = q.front();
    q.pop_front();
    s.ecc = std::max(s.ecc, d);
    for (int u : t.neighbors(v)) {
      if (v == start && u == blocked) continue;
      if (!s.in_side[u]) {
        s.in_side[u] = 1;
        ++s.size;
        q.emplace_back(u, d + 1);
      }
    }
  }
  return s;
}

// Components hanging at center, excluding the side toward `away`.
struct BranchSet {
  std::vector<int> roots;  // ascending
  std::vector<std::vector<int>> verts;
  std::vector<int> depth;  // max distance from center within the branch
  std::vector<int> size;
  std::vector<char> is_chain;  // every branch vertex has tree degree <= 2
};

BranchSet branches_at(const Tree& t, int center, int away) {
  BranchSet b;
  for (int r : t.neighbors(center)) {
    if (r == away) continue;
    std::vector<int> verts;
    std::vector<char> seen(t.order(), 0);
    seen[center] = 1;
    std::deque<std::pair<int, int>> q{{r, 1}};
    seen[r] = 1;
    int depth = 1;
    bool chain = true;
    while (!q.empty()) {
      auto [v, d] = q.front();
      q.pop_front();
      verts.push_back(v);
      depth = std::max(depth, d);
      chain = chain && t.degree(v) <= 2;
      for (int u : t.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          q.emplace_back(u, d + 1);
        }
    }
    std::sort(verts.begin(), verts.end());
    b.roots.push_back(r);
    b.verts.push_back(std::move(verts));
    b.depth.push_back(depth);
    b.size.push_back(static_cast<int>(b.verts.back().size()));
    b.is_chain.push_back(chain);
  }
  return b;
}

bool path_interior_clean(const Tree& t, const std::vector<int>& path) {
  for (size_t i = 1; i + 1 < path.size(); ++i)
    if (t.degree(path[i]) != 2) return false;
  return true;
}

// Assemble and validate one decomposition. Returns nullopt when any
// condition fails; when relaxed_allowed, a size violation only flags the
// form as relaxed. dpairs may be null (computed on demand).
std::optional<SigmaForm> build_form(
    const Tree& t, int v0, int vs, const std::vector<int>& z_roots,
    bool inverse, SigmaVariant variant, bool relaxed_allowed,
    const std::vector<std::pair<int, int>>* dpairs) {
  int n = t.order();
  if (v0 < 0 || v0 >= n || vs < 0 || vs >= n || v0 == vs) return std::nullopt;
  if (z_roots.empty()) return std::nullopt;
  for (size_t i = 0; i + 1 < z_roots.size(); ++i)
    if (z_roots[i] >= z_roots[i + 1]) return std::nullopt;
  auto path = path_between(t, v0, vs);
  if (path.size() < 2 || !path_interior_clean(t, path)) return std::nullopt;
  int toward_vs = path[1];
  int toward_v0 = path[path.size() - 2];

  SigmaForm f;
  f.tree = t;
  f.v0 = v0;
  f.vs = vs;
  f.path_vertices = path;
  f.variant = variant;
  f.inverse = inverse;
  f.z_roots = z_roots;
  f.part.assign(n, SigmaPart::P);

  int anchor = inverse ? v0 : vs;
  int anchor_away = inverse ? toward_vs : toward_v0;
  BranchSet br = branches_at(t, anchor, anchor_away);
  std::vector<char> in_z(br.roots.size(), 0);
  for (int r : z_roots) {
    auto it = std::find(br.roots.begin(), br.roots.end(), r);
    if (it == br.roots.end()) return std::nullopt;
    in_z[it - br.roots.begin()] = 1;
  }

  if (!inverse) {
    SideInfo y = side_of(t, v0, toward_vs);
    f.eps_y = y.ecc;
    f.size_y = y.size;
    for (int v = 0; v < n; ++v)
      if (y.in_side[v]) f.part[v] = SigmaPart::Y;
    f.part[vs] = SigmaPart::X;
    f.eps_x = 0;
    f.size_x = 1;
    int x_branches = 0;
    bool x_chains = true;
    for (size_t i = 0; i < br.roots.size(); ++i) {
      SigmaPart lab = in_z[i] ? SigmaPart::Z : SigmaPart::X;
      for (int v : br.verts[i]) f.part[v] = lab;
      if (in_z[i]) {
        f.eps_z = std::max(f.eps_z, br.depth[i]);
      } else {
        f.eps_x = std::max(f.eps_x, br.depth[i]);
        f.size_x += br.size[i];
        f.x_roots.push_back(br.roots[i]);
        ++x_branches;
        x_chains = x_chains && br.is_chain[i];
      }
    }
    if (variant == SigmaVariant::leaf && x_branches == 0) return std::nullopt;
    // X must stay a pendant path at vs (vs an endpoint), otherwise the move
    // could lower the maximum degree
    if (variant == SigmaVariant::degree && !(x_branches <= 1 && x_chains))
      return std::nullopt;
  } else {
    SideInfo x = side_of(t, vs, toward_v0);
    f.eps_x = x.ecc;
    f.size_x = x.size;
    for (int v = 0; v < n; ++v)
      if (x.in_side[v]) f.part[v] = SigmaPart::X;
    for (int r : t.neighbors(vs))
      if (r != toward_v0) f.x_roots.push_back(r);
    f.part[v0] = SigmaPart::Y;
    f.eps_y = 0;
    f.size_y = 1;
    for (size_t i = 0; i < br.roots.size(); ++i) {
      SigmaPart lab = in_z[i] ? SigmaPart::Z : SigmaPart::Y;
      for (int v : br.verts[i]) f.part[v] = lab;
      if (in_z[i]) {
        f.eps_z = std::max(f.eps_z, br.depth[i]);
      } else {
        f.eps_y = std::max(f.eps_y, br.depth[i]);
        f.size_y += br.size[i];
      }
    }
    if (variant == SigmaVariant::leaf && x.size == 1) return std::nullopt;
    if (variant == SigmaVariant::degree) {
      // X must be a pendant path ending at vs
      for (int v = 0; v < n; ++v)
        if (x.in_side[v] && t.degree(v) > 2) return std::nullopt;
    }
  }

  if (f.eps_y < std::max(f.eps_x, f.eps_z)) return std::nullopt;
  f.relaxed = f.size_y < f.size_x;
  if (f.relaxed && !relaxed_allowed) return std::nullopt;

  if (variant == SigmaVariant::diametrical) {
    std::vector<std::pair<int, int>> local;
    if (!dpairs) {
      for (const auto& dp : diametrical_paths(t)) local.emplace_back(dp.a, dp.b);
      dpairs = &local;
    }
    bool ok = false;
    for (auto [a, b] : *dpairs) {
      bool a_y = f.part[a] == SigmaPart::Y;
      bool b_y = f.part[b] == SigmaPart::Y;
      bool a_xz = f.part[a] == SigmaPart::X || f.part[a] == SigmaPart::Z;
      bool b_xz = f.part[b] == SigmaPart::X || f.part[b] == SigmaPart::Z;
      if ((a_y && b_xz) || (b_y && a_xz)) {
        ok = true;
        break;
      }
    }
    if (!ok) return std::nullopt;
  }
  return f;
}

bool form_order(const SigmaForm& a, const SigmaForm& b) {
  if (a.v0 != b.v0) return a.v0 < b.v0;
  if (a.vs != b.vs) return a.vs < b.vs;
  return a.z_roots < b.z_roots;
}

std::vector<SigmaForm> enumerate_forms(const Tree& t, SigmaVariant variant,
                                       bool relaxed, bool inverse) {
  std::vector<SigmaForm> out;
  int n = t.order();
  if (n < 3) return out;
  std::vector<std::pair<int, int>> dpairs;
  if (variant == SigmaVariant::diametrical)
    for (const auto& dp : diametrical_paths(t)) dpairs.emplace_back(dp.a, dp.b);
  for (int v0 = 0; v0 < n; ++v0)
    for (int vs = 0; vs < n; ++vs) {
      if (v0 == vs) continue;
      auto path = path_between(t, v0, vs);
      if (!path_interior_clean(t, path)) continue;
      int anchor = inverse ? v0 : vs;
      int away = inverse ? path[1] : path[path.size() - 2];
      std::vector<int> roots;
      for (int r : t.neighbors(anchor))
        if (r != away) roots.push_back(r);
      int m = static_cast<int>(roots.size());
      if (m == 0) continue;
      for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> zr;
        for (int i = 0; i < m; ++i)
          if (mask & (1 << i)) zr.push_back(roots[i]);
        auto f = build_form(t, v0, vs, zr, inverse, variant, relaxed, &dpairs);
        if (f) out.push_back(std::move(*f));
      }
    }
  std::sort(out.begin(), out.end(), form_order);
  return out;
}

Tree move_branches(const Tree& t, int from, int to,
                   const std::vector<int>& roots) {
  std::set<std::pair<int, int>> es;
  for (auto e : t.edges()) es.insert(e);
  for (int r : roots) {
    es.erase({std::min(from, r), std::max(from, r)});
    es.insert({std::min(to, r), std::max(to, r)});
  }
  return Tree(t.order(), {es.begin(), es.end()});
}

void validate_form(const SigmaForm& f, bool expect_inverse) {
  if (f.inverse != expect_inverse)
    throw InvalidFormError(expect_inverse
                               ? "forward form passed to apply_sigma_inverse"
                               : "inverse form passed to apply_sigma");
  auto rebuilt = build_form(f.tree, f.v0, f.vs, f.z_roots, f.inverse,
                            f.variant, true, nullptr);
  if (!rebuilt) throw InvalidFormError("sigma form conditions do not hold");
  if (rebuilt->relaxed && !f.relaxed)
    throw InvalidFormError("size condition |Y| >= |X| violated");
  if (f.path_vertices != rebuilt->path_vertices || f.part != rebuilt->part)
    throw InvalidFormError("form labeling inconsistent with its tree");
}

}  // namespace

std::vector<SigmaForm> find_sigma_forms(const Tree& t, SigmaVariant variant,
                                        bool relaxed) {
  return enumerate_forms(t, variant, relaxed, false);
}

std::vector<SigmaForm> find_sigma_inverse_forms(const Tree& t,
                                                SigmaVariant variant,
                                                bool relaxed) {
  return enumerate_forms(t, variant, relaxed, true);
}

Tree apply_sigma(const SigmaForm& f) {
  validate_form(f, false);
  return move_branches(f.tree, f.vs, f.v0, f.z_roots);
}

Tree apply_sigma_inverse(const SigmaForm& f) {
  validate_form(f, true);
  return move_branches(f.tree, f.v0, f.vs, f.z_roots);
}

std::string sigma_form_descriptor(const SigmaForm& f) {
  std::ostringstream ss;
  ss << "sigma";
  switch (f.variant) {
    case SigmaVariant::plain: break;
    case SigmaVariant::diametrical: ss << "_d"; break;
    case SigmaVariant::leaf: ss << "_l"; break;
    case SigmaVariant::degree: ss << "_delta"; break;
  }
  if (f.inverse) ss << "^-1";
  ss << "(v0=" << f.v0 << ",vs=" << f.vs << ",Z={";
  for (size_t i = 0; i < f.z_roots.size(); ++i) {
    if (i) ss << ",";
    ss << f.z_roots[i];
  }
  ss << "})";
  return ss.str();
}

std::vector<PQSite> find_pq_sites(const Tree& t) {
  std::vector<PQSite> out;
  int n = t.order();
  if (n < 3) return out;
  if (max_degree(t) <= 2) {
    // a bare path: one canonical site at the center
    auto ls = leaves(t);
    auto seq = path_between(t, ls[0], ls[1]);
    int idx = (n - 1) / 2;
    PQSite site;
    site.tree = t;
    site.w = seq[idx];
    for (int i = idx - 1; i >= 0; --i) site.arm_p.push_back(seq[i]);
    for (int i = idx + 1; i < n; ++i) site.arm_q.push_back(seq[i]);
    site.base_nontrivial = false;
    out.push_back(std::move(site));
    return out;
  }
  for (int w = 0; w < n; ++w) {
    if (t.degree(w) < 3) continue;
    std::vector<std::vector<int>> arms;
    for (int r : t.neighbors(w)) {
      std::vector<int> arm{r};
      int prev = w, cur = r;
      while (t.degree(cur) == 2) {
        int next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1]
                                               : t.neighbors(cur)[0];
        prev = cur;
        cur = next;
        arm.push_back(cur);
      }
      if (t.degree(cur) == 1) arms.push_back(std::move(arm));
    }
    for (size_t i = 0; i < arms.size(); ++i)
      for (size_t j = i + 1; j < arms.size(); ++j)
        out.push_back({t, w, arms[i], arms[j], true});
  }
  return out;
}

namespace {

void validate_arm(const Tree& t, int w, const std::vector<int>& arm) {
  if (arm.empty()) throw InvalidSiteError("empty arm");
  int prev = w;
  for (size_t i = 0; i < arm.size(); ++i) {
    int v = arm[i];
    if (v < 0 || v >= t.order() || v == w)
      throw InvalidSiteError("arm vertex out of range");
    const auto& nb = t.neighbors(prev);
    if (!std::binary_search(nb.begin(), nb.end(), v))
      throw InvalidSiteError("arm is not a path from w");
    bool last = i + 1 == arm.size();
    if (last ? t.degree(v) != 1 : t.degree(v) != 2)
      throw InvalidSiteError("arm is not a pendant path");
    prev = v;
  }
}

}  // namespace

Tree apply_pq(const PQSite& site) {
  const Tree& t = site.tree;
  if (site.w < 0 || site.w >= t.order())
    throw InvalidSiteError("site vertex out of range");
  validate_arm(t, site.w, site.arm_p);
  validate_arm(t, site.w, site.arm_q);
  std::set<int> pa(site.arm_p.begin(), site.arm_p.end());
  for (int v : site.arm_q)
    if (pa.count(v)) throw InvalidSiteError("arms overlap");
  int tip = site.arm_q.back();
  int from = site.arm_q.size() >= 2 ? site.arm_q[site.arm_q.size() - 2] : site.w;
  int to = site.arm_p.back();
  std::set<std::pair<int, int>> es;
  for (auto e : t.edges()) es.insert(e);
  es.erase({std::min(from, tip), std::max(from, tip)});
  es.insert({std::min(to, tip), std::max(to, tip)});
  return Tree(t.order(), {es.begin(), es.end()});
}

bool is_path_tree(const Tree& t) { return max_degree(t) <= 2; }

bool is_star_tree(const Tree& t) {
  return t.order() <= 2 || max_degree(t) == t.order() - 1;
}

namespace {

RewriteTrace normalize(const Tree& t, KLParams p, bool to_path) {
  validate_kl(t, p);
  RewriteTrace tr;
  Tree cur = t;
  std::set<std::vector<std::pair<int, int>>> seen{cur.edges()};
  int guard = 10 * t.order() * t.order() + 20;
  while (to_path ? !is_path_tree(cur) : !is_star_tree(cur)) {
    auto forms = to_path
                     ? find_sigma_inverse_forms(cur, SigmaVariant::diametrical)
                     : find_sigma_forms(cur, SigmaVariant::diametrical, false);
    bool advanced = false;
    for (const auto& f : forms) {
      Tree next = to_path ? apply_sigma_inverse(f) : apply_sigma(f);
      if (!seen.insert(next.edges()).second) continue;  // already visited
      tr.steps.push_back({sigma_form_descriptor(f), canonical_code(next),
                          avg_steiner_kl_ecc(next, p)});
      tr.states.push_back(next);
      cur = std::move(next);
      advanced = true;
      break;
    }
    if (!advanced || --guard < 0)
      throw InvalidFormError("normalization made no progress");
  }
  tr.terminal = cur;
  return tr;
}

}  // namespace

RewriteTrace normalize_to_star(const Tree& t, KLParams p) {
  return normalize(t, p, false);
}

RewriteTrace normalize_to_path(const Tree& t, KLParams p) {
  return normalize(t, p, true);
}

}  // namespace stkl
