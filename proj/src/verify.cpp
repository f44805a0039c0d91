#include "stkl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <thread>
#include <tuple>

#include "stkl/enumerate.hpp"
#include "stkl/families.hpp"
#include "stkl/steiner.hpp"
#include "stkl/transforms.hpp"

namespace stkl {

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::sandwich: return "sandwich";
    case Suite::sigma: return "sigma";
    case Suite::pq: return "pq";
    case Suite::leaves: return "leaves";
    case Suite::maxdeg: return "maxdeg";
    case Suite::diameter: return "diameter";
    case Suite::caterpillar: return "caterpillar";
    case Suite::starlike: return "starlike";
    case Suite::broom_chain: return "broom-chain";
    case Suite::closed_forms: return "closed-forms";
    case Suite::sw: return "sw";
  }
  return "";
}

std::optional<Suite> suite_from_name(const std::string& name) {
  for (Suite s : all_suites())
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

std::vector<Suite> all_suites() {
  return {Suite::sandwich,    Suite::sigma,       Suite::pq,
          Suite::leaves,      Suite::maxdeg,      Suite::diameter,
          Suite::caterpillar, Suite::starlike,    Suite::broom_chain,
          Suite::closed_forms, Suite::sw};
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::finding: return "finding";
  }
  return "pass";
}

namespace {

using KL = std::pair<int, int>;

// Exact average table, keyed by canonical code so isomorphic intermediate
// trees share entries. One instance per worker; values are exact, so any
// duplication across workers is invisible in the output.
class EbarCache {
 public:
  const Rational& get(const Tree& t, const std::string& code, int k, int l) {
    auto& m = tbl_[code];
    auto it = m.find(KL{k, l});
    if (it == m.end())
      it = m.emplace(KL{k, l}, avg_steiner_kl_ecc(t, {k, l})).first;
    return it->second;
  }
  const Rational& get(const Tree& t, int k, int l) {
    return get(t, canonical_code(t), k, l);
  }

 private:
  std::map<std::string, std::map<KL, Rational>> tbl_;
};

struct Violation {
  int k = 0, l = 0;
  CheckStatus status = CheckStatus::fail;
  Counterexample cx;
};

using VioList = std::vector<Violation>;

// Run job(i, cache) over 0..count-1; results land in slot i, so the fold is
// identical for every worker count.
template <class R, class Job>
std::vector<R> sweep_collect(int count, int workers, Job job) {
  std::vector<R> out(count);
  if (workers <= 1 || count <= 1) {
    EbarCache cache;
    for (int i = 0; i < count; ++i) out[i] = job(i, cache);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  int w = std::min(workers, count);
  for (int ti = 0; ti < w; ++ti)
    pool.emplace_back([&]() {
      EbarCache cache;
      int i;
      while ((i = next.fetch_add(1)) < count) out[i] = job(i, cache);
    });
  for (auto& th : pool) th.join();
  return out;
}

std::vector<KL> kl_grid(const SweepSpec& spec, int n, int k_hi, int l_min) {
  std::vector<KL> g;
  int hi = std::min(k_hi, n);
  if (spec.k_cap > 0) hi = std::min(hi, spec.k_cap);
  for (int k = 2; k <= hi; ++k) {
    if (spec.only_k && *spec.only_k != k) continue;
    for (int l = l_min; l <= k; ++l) {
      if (spec.only_l && *spec.only_l != l) continue;
      g.emplace_back(k, l);
    }
  }
  return g;
}

class RowTable {
 public:
  void add_grid(int n, const std::vector<KL>& grid) {
    for (auto [k, l] : grid) {
      if (index_.count({n, k, l})) continue;
      index_[{n, k, l}] = rows_.size();
      rows_.push_back({n, k, l, CheckStatus::pass, std::nullopt});
    }
  }
  // Call in enumeration order: the first failure per row wins, and a
  // failure displaces an earlier finding.
  void apply(int n, const Violation& v) {
    auto it = index_.find({n, v.k, v.l});
    if (it == index_.end()) return;
    CheckRow& r = rows_[it->second];
    if (v.status == CheckStatus::fail) {
      if (r.status != CheckStatus::fail) {
        r.status = CheckStatus::fail;
        r.cx = v.cx;
      }
    } else if (r.status == CheckStatus::pass) {
      r.status = CheckStatus::finding;
      r.cx = v.cx;
    }
  }
  void apply_all(int n, const std::vector<VioList>& results) {
    for (const auto& vs : results)
      for (const auto& v : vs) apply(n, v);
  }
  std::vector<CheckRow> take() { return std::move(rows_); }

 private:
  std::vector<CheckRow> rows_;
  std::map<std::tuple<int, int, int>, size_t> index_;
};

Counterexample make_cx(const Tree& t, const Rational& lhs, const Rational& rhs,
                       std::string relation) {
  return {t.edges(), fraction_str(lhs), fraction_str(rhs),
          std::move(relation)};
}

CheckStatus worst_status(const std::vector<CheckRow>& rows) {
  CheckStatus s = CheckStatus::pass;
  for (const auto& r : rows) {
    if (r.status == CheckStatus::fail) return CheckStatus::fail;
    if (r.status == CheckStatus::finding) s = CheckStatus::finding;
  }
  return s;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

VerificationReport finish(const std::string& suite, const SweepSpec& spec,
                          RowTable&& tbl, const Timer& tm) {
  VerificationReport rep;
  rep.suite = suite;
  rep.spec = spec;
  rep.rows = tbl.take();
  rep.status = worst_status(rep.rows);
  rep.elapsed_ms = tm.ms();
  return rep;
}

// Nonnegative tuples of the given length and sum, lexicographic order.
std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts <= 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(parts, 0);
  std::function<void(int, int)> rec = [&](int idx, int rem) {
    if (idx == parts - 1) {
      cur[idx] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[idx] = v;
      rec(idx + 1, rem - v);
    }
  };
  rec(0, total);
  return out;
}

// Non-increasing positive tuples of the given length and sum.
std::vector<std::vector<int>> partitions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int, int)> rec = [&](int rem, int left, int maxv) {
    if (left == 1) {
      if (rem >= 1 && rem <= maxv) {
        cur.push_back(rem);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    int lo = (rem + left - 1) / left;  // first part at least the average
    for (int v = std::min(maxv, rem - (left - 1)); v >= lo; --v) {
      cur.push_back(v);
      rec(rem - v, left - 1, v);
      cur.pop_back();
    }
  };
  if (parts >= 1 && total >= parts) rec(total, parts, total);
  return out;
}

}  // namespace

VerificationReport check_sandwich(const SweepSpec& spec) {
  Timer tm;
  RowTable tbl;
  for (int n = std::max(2, spec.min_n); n <= spec.max_n; ++n) {
    auto grid = kl_grid(spec, n, n, spec.include_l0 ? 0 : 1);
    if (grid.empty()) continue;
    tbl.add_grid(n, grid);
    auto trees = enumerate_trees(n);
    EbarCache bc;
    Tree star_t = star(n), path_t = path(n);
    std::map<KL, std::pair<Rational, Rational>> bound;
    for (auto [k, l] : grid)
      bound[{k, l}] = {bc.get(star_t, k, l), bc.get(path_t, k, l)};
    auto results = sweep_collect<VioList>(
        static_cast<int>(trees.size()), spec.workers,
        [&](int i, EbarCache& cache) {
          VioList v;
          const Tree& t = trees[i];
          auto code = canonical_code(t);
          for (auto [k, l] : grid) {
            const Rational& val = cache.get(t, code, k, l);
            const auto& b = bound.at({k, l});
            if (val < b.first)
              v.push_back({k, l, CheckStatus::fail,
                           make_cx(t, b.first, val,
                                   "avg_ecc(star) <= avg_ecc(T)")});
            if (val > b.second)
              v.push_back({k, l, CheckStatus::fail,
                           make_cx(t, val, b.second,
                                   "avg_ecc(T) <= avg_ecc(path)")});
          }
          return v;
        });
    tbl.apply_all(n, results);
  }
  return finish("sandwich", spec, std::move(tbl), tm);
}

VerificationReport check_sigma(const SweepSpec& spec) {
  Timer tm;
  RowTable tbl;
  const SigmaVariant variants[] = {SigmaVariant::plain, SigmaVariant::diametrical,
                                   SigmaVariant::leaf, SigmaVariant::degree};
  for (int n = std::max(3, spec.min_n); n <= spec.max_n; ++n) {
    auto grid = kl_grid(spec, n, n, 1);
    if (grid.empty()) continue;
    tbl.add_grid(n, grid);
    auto trees = enumerate_trees(n);
    auto results = sweep_collect<VioList>(
        static_cast<int>(trees.size()), spec.workers,
        [&](int i, EbarCache& cache) {
          VioList out;
          const Tree& t = trees[i];
          auto code = canonical_code(t);
          for (SigmaVariant variant : variants) {
            for (bool inv : {false, true}) {
              auto forms =
                  inv ? find_sigma_inverse_forms(t, variant,
                                                 spec.include_relaxed)
                      : find_sigma_forms(t, variant, spec.include_relaxed);
              for (const auto& f : forms) {
                Tree t2 = inv ? apply_sigma_inverse(f) : apply_sigma(f);
                auto code2 = canonical_code(t2);
                std::string desc = sigma_form_descriptor(f);
                for (auto [k, l] : grid) {
                  if (f.relaxed && k <= l) continue;
                  const Rational& before = cache.get(t, code, k, l);
                  const Rational& after = cache.get(t2, code2, k, l);
                  bool bad = inv ? after < before : after > before;
                  if (bad)
                    out.push_back(
                        {k, l, CheckStatus::fail,
                         make_cx(t, before, after,
                                 desc + (inv ? ": avg_ecc must not decrease"
                                             : ": avg_ecc must not increase"))});
                  if (f.eps_x == f.eps_y && k > l && after != before)
                    out.push_back(
                        {k, l, CheckStatus::fail,
                         make_cx(t, before, after,
                                 desc +
                                     ": equal X/Y depth move must preserve "
                                     "avg_ecc")});
                }
              }
            }
          }
          return out;
        });
    tbl.apply_all(n, results);
  }
  return finish("sigma", spec, std::move(tbl), tm);
}

VerificationReport check_pq(const SweepSpec& spec) {
  Timer tm;
  RowTable tbl;
  for (int n = std::max(3, spec.min_n); n <= spec.max_n; ++n) {
    auto grid = kl_grid(spec, n, n - 1, 1);
    if (grid.empty()) continue;
    tbl.add_grid(n, grid);
    auto trees = enumerate_trees(n);
    auto results = sweep_collect<VioList>(
        static_cast<int>(trees.size()), spec.workers,
        [&](int i, EbarCache& cache) {
          VioList out;
          const Tree& t = trees[i];
          auto code = canonical_code(t);
          for (const auto& site : find_pq_sites(t)) {
            PQSite fwd = site;  // shorter arm first
            if (fwd.arm_p.size() > fwd.arm_q.size())
              std::swap(fwd.arm_p, fwd.arm_q);
            int p = static_cast<int>(fwd.arm_p.size());
            int q = static_cast<int>(fwd.arm_q.size());
            Tree t2 = apply_pq(fwd);
            auto code2 = canonical_code(t2);
            if (q == p + 1) {
              if (code != code2)
                out.push_back({grid[0].first, grid[0].second, CheckStatus::fail,
                               make_cx(t, Rational(0), Rational(0),
                                       "balanced shift must give an isomorphic "
                                       "tree")});
            }
            for (auto [k, l] : grid) {
              const Rational& before = cache.get(t, code, k, l);
              const Rational& after = cache.get(t2, code2, k, l);
              if (q >= p + 2) {
                if (before < after) {
                  out.push_back({k, l, CheckStatus::fail,
                                 make_cx(t, before, after,
                                         "balancing a longer arm must not "
                                         "increase avg_ecc")});
                } else if (site.base_nontrivial && before == after) {
                  // the claimed strict decrease degenerates to equality;
                  // documented as a finding, not a failure
                  out.push_back({k, l, CheckStatus::finding,
                                 make_cx(t, before, after,
                                         "claimed strict decrease is an "
                                         "equality here")});
                }
              } else if (q == p + 1) {
                if (before != after)
                  out.push_back({k, l, CheckStatus::fail,
                                 make_cx(t, before, after,
                                         "balanced shift must preserve "
                                         "avg_ecc")});
              } else {  // q <= p
                if (before > after)
                  out.push_back({k, l, CheckStatus::fail,
                                 make_cx(t, before, after,
                                         "unbalancing shift must not decrease "
                                         "avg_ecc")});
              }
            }
            if (p != q) {
              PQSite rev = fwd;
              std::swap(rev.arm_p, rev.arm_q);  // now q' < p'
              Tree t3 = apply_pq(rev);
              auto code3 = canonical_code(t3);
              for (auto [k, l] : grid) {
                const Rational& before = cache.get(t, code, k, l);
                const Rational& after = cache.get(t3, code3, k, l);
                if (before > after)
                  out.push_back({k, l, CheckStatus::fail,
                                 make_cx(t, before, after,
                                         "unbalancing shift must not decrease "
                                         "avg_ecc")});
              }
            }
          }
          return out;
        });
    tbl.apply_all(n, results);
  }
  return finish("pq", spec, std::move(tbl), tm);
}

VerificationReport check_fixed_leaves(const SweepSpec& spec) {
  Timer tm;
  RowTable tbl;
  for (int n = std::max(3, spec.min_n); n <= spec.max_n; ++n) {
    auto grid = kl_grid(spec, n, n - 1, 1);
    if (grid.empty()) continue;
    tbl.add_grid(n, grid);
    auto trees = enumerate_trees(n);
    std::map<int, Tree> lower, upper;
    for (int p = 2; p <= n - 1; ++p) {
      lower.emplace(p, balanced_starlike(n, p));
      if (p >= 3) upper.emplace(p, broom(n, p));
    }
    auto results = sweep_collect<VioList>(
        static_cast<int>(trees.size()), spec.workers,
        [&](int i, EbarCache& cache) {
          VioList out;
          const Tree& t = trees[i];
          int p = static_cast<int>(leaves(t).size());
          if (spec.leaf_cap > 0 && p > spec.leaf_cap) return out;
          auto code = canonical_code(t);
          for (auto [k, l] : grid) {
            const Rational& val = cache.get(t, code, k, l);
            const Rational& lo = cache.get(lower.at(p), k, l);
            if (val < lo)
              out.push_back({k, l, CheckStatus::fail,
                             make_cx(t, lo, val,
                                     "balanced starlike minimizes avg_ecc at "
                                     "fixed leaf count")});
            if (p >= 3 && k > l) {
              const Rational& hi = cache.get(upper.at(p), k, l);
              if (val > hi)
                out.push_back({k, l, CheckStatus::fail,
                               make_cx(t, val, hi,
                                       "broom maximizes avg_ecc at fixed leaf "
                                       "count (k > l)")});
            }
          }
          return out;
        });
    tbl.apply_all(n, results);
  }
  return finish("leaves", spec, std::move(tbl), tm);
}

VerificationReport check_fixed_maxdeg(const SweepSpec& spec) {
  Timer tm;
  RowTable tbl;
  for (int n = std::max(4, spec.min_n); n <= spec.max_n; ++n) {
    auto grid = kl_grid(spec, n, n - 1, 1);
    if (grid.empty()) continue;
    tbl.add_grid(n, grid);
    auto trees = enumerate_trees(n);
    std::map<int, Tree> brooms;
    for (int d = 3; d <= n - 1; ++d) brooms.emplace(d, broom(n, d));
    auto results = sweep_collect<VioList>(
        static_cast<int>(trees.size()), spec.workers,
        [&](int i, EbarCache& cache) {
          VioList out;
          const Tree& t = trees[i];
          int d = max_degree(t);
          if (d < 3) return out;  // the path is alone in its class
          if (spec.delta_cap > 0 && d > spec.delta_cap) return out;
          auto code = canonical_code(t);
          for (auto [k, l] : grid) {
            const Rational& val = cache.get(t, code, k, l);
            const Rational& hi = cache.get(brooms.at(d), k, l);
            if (val > hi)
              out.push_back({k, l, CheckStatus::fail,
                             make_cx(t, val, hi,
                                     "broom maximizes avg_ecc at fixed max "
                                     "degree")});
          }
          return out;
        });
    tbl.apply_all(n, results);
  }
  return finish("maxdeg", spec, std::move(tbl), tm);
}

VerificationReport check_fixed_diameter(const SweepSpec& spec) {
  Timer tm;
  RowTable tbl;
  for (int n = std::max(3, spec.min_n); n <= spec.max_n; ++n) {
    auto grid = kl_grid(spec, n, n - 1, 1);
    if (grid.empty()) continue;
    tbl.add_grid(n, grid);
    auto trees = enumerate_trees(n);
    std::map<int, Tree> central;
    for (int d = 2; d <= n - 1; ++d)
      central.emplace(d, central_caterpillar(n, d, 0));
    auto results = sweep_collect<VioList>(
        static_cast<int>(trees.size()), spec.workers,
        [&](int i, EbarCache& cache) {
          VioList out;
          const Tree& t = trees[i];
          int d = diameter(t);
          int r = radius(t);
          auto code = canonical_code(t);
          for (auto [k, l] : grid) {
            const Rational& val = cache.get(t, code, k, l);
            const Rational& lo = cache.get(central.at(d), k, l);
            if (val < lo)
              out.push_back({k, l, CheckStatus::fail,
                             make_cx(t, lo, val,
                                     "central caterpillar minimizes avg_ecc "
                                     "at fixed diameter")});
            if (r >= 2) {
              const Rational& lo2 = cache.get(central.at(2 * r - 1), k, l);
              if (val < lo2)
                out.push_back({k, l, CheckStatus::fail,
                               make_cx(t, lo2, val,
                                       "central caterpillar of diameter "
                                       "2r-1 bounds avg_ecc at fixed "
                                       "radius")});
            }
          }
          return out;
        });
    tbl.apply_all(n, results);
  }
  return finish("diameter", spec, std::move(tbl), tm);
}

VerificationReport check_caterpillar_sandwich(const SweepSpec& spec) {
  Timer tm;
  RowTable tbl;
  for (int n = std::max(3, spec.min_n); n <= spec.max_n; ++n) {
    auto grid = kl_grid(spec, n, n - 1, 1);
    if (grid.empty()) continue;
    tbl.add_grid(n, grid);
    struct Item {
      int d;
      std::vector<int> attach;
    };
    std::vector<Item> items;
    for (int d = 2; d <= n - 1; ++d)
      for (auto& c : compositions(n - d - 1, d - 1)) items.push_back({d, c});
    std::map<int, std::pair<Tree, Tree>> bounds;
    for (int d = 2; d <= n - 1; ++d)
      bounds.emplace(d, std::make_pair(central_caterpillar(n, d, 0),
                                       double_comet(n, d, 0)));
    auto results = sweep_collect<VioList>(
        static_cast<int>(items.size()), spec.workers,
        [&](int i, EbarCache& cache) {
          VioList out;
          Tree t = caterpillar(n, {items[i].d, items[i].attach});
          auto code = canonical_code(t);
          const auto& b = bounds.at(items[i].d);
          for (auto [k, l] : grid) {
            const Rational& val = cache.get(t, code, k, l);
            const Rational& lo = cache.get(b.first, k, l);
            const Rational& hi = cache.get(b.second, k, l);
            if (val < lo)
              out.push_back({k, l, CheckStatus::fail,
                             make_cx(t, lo, val,
                                     "central caterpillar minimizes avg_ecc "
                                     "among caterpillars of its diameter")});
            // the upper bound rests on the k > l equality condition; its
            // k = l exceptions are documented as findings
            if (val > hi)
              out.push_back({k, l,
                             k > l ? CheckStatus::fail : CheckStatus::finding,
                             make_cx(t, val, hi,
                                     "double comet maximizes avg_ecc among "
                                     "caterpillars of its diameter")});
          }
          return out;
        });
    tbl.apply_all(n, results);
  }
  return finish("caterpillar", spec, std::move(tbl), tm);
}

VerificationReport check_caterpillar_majorization(const SweepSpec& spec) {
  Timer tm;
  RowTable tbl;
  for (int n = std::max(3, spec.min_n); n <= spec.max_n; ++n) {
    auto grid = kl_grid(spec, n, n - 1, 1);
    if (grid.empty()) continue;
    tbl.add_grid(n, grid);
    for (int d = 2; d <= n - 1; ++d) {
      auto comps = compositions(n - d - 1, d - 1);
      std::vector<Tree> trees;
      std::vector<std::string> codes;
      trees.reserve(comps.size());
      for (auto& c : comps) trees.push_back(caterpillar(n, {d, c}));
      for (auto& t : trees) codes.push_back(canonical_code(t));
      auto results = sweep_collect<VioList>(
          static_cast<int>(comps.size()), spec.workers,
          [&](int i, EbarCache& cache) {
            VioList out;
            for (size_t j = 0; j < comps.size(); ++j) {
              if (static_cast<size_t>(i) == j) continue;
              if (!caterpillar_order(comps[i], comps[j])) continue;
              for (auto [k, l] : grid) {
                const Rational& big = cache.get(trees[i], codes[i], k, l);
                const Rational& small = cache.get(trees[j], codes[j], k, l);
                // asserted for k > l only; the k = l direction does fail
                // (central rearrangements move the subset sums)
                if (big < small)
                  out.push_back(
                      {k, l, k > l ? CheckStatus::fail : CheckStatus::finding,
                       make_cx(trees[i], big, small,
                               "dominating attachment tuple must not have a "
                               "smaller avg_ecc")});
              }
            }
            return out;
          });
      tbl.apply_all(n, results);
    }
  }
  return finish("caterpillar", spec, std::move(tbl), tm);
}

VerificationReport check_s_invariance(const SweepSpec& spec) {
  Timer tm;
  RowTable tbl;
  for (int n = std::max(4, spec.min_n); n <= spec.max_n; ++n) {
    auto grid = kl_grid(spec, n, n - 1, 1);
    if (grid.empty()) continue;
    tbl.add_grid(n, grid);
    struct Item {
      bool central;
      int d;
    };
    std::vector<Item> items;
    for (int d = 3; d <= n - 1; d += 2) items.push_back({true, d});
    for (int d = 2; d <= n - 1; ++d) items.push_back({false, d});
    auto results = sweep_collect<VioList>(
        static_cast<int>(items.size()), spec.workers,
        [&](int i, EbarCache& cache) {
          VioList out;
          auto [is_central, d] = items[i];
          int extra = n - d - 1;
          Tree base = is_central ? central_caterpillar(n, d, 0)
                                 : double_comet(n, d, 0);
          auto base_code = canonical_code(base);
          for (int s = 1; s <= extra; ++s) {
            Tree t = is_central ? central_caterpillar(n, d, s)
                                : double_comet(n, d, s);
            auto code = canonical_code(t);
            for (auto [k, l] : grid) {
              const Rational& v0 = cache.get(base, base_code, k, l);
              const Rational& vs = cache.get(t, code, k, l);
              // exact for k > l; at k = l the split does move the value,
              // so those rows are findings
              if (v0 != vs)
                out.push_back({k, l,
                               k > l ? CheckStatus::fail : CheckStatus::finding,
                               make_cx(t, v0, vs,
                                       is_central
                                           ? "central caterpillar avg_ecc "
                                             "must not depend on the split s"
                                           : "double comet avg_ecc must not "
                                             "depend on the split s")});
            }
          }
          return out;
        });
    tbl.apply_all(n, results);
  }
  return finish("caterpillar", spec, std::move(tbl), tm);
}

namespace {

// Merge rows of several part-reports by (n, k, l); part order breaks ties.
VerificationReport merge_reports(const std::string& suite,
                                 const SweepSpec& spec, const Timer& tm,
                                 std::vector<VerificationReport> parts) {
  VerificationReport rep;
  rep.suite = suite;
  rep.spec = spec;
  std::map<std::tuple<int, int, int>, size_t> index;
  for (auto& part : parts)
    for (auto& row : part.rows) {
      auto key = std::make_tuple(row.n, row.k, row.l);
      auto it = index.find(key);
      if (it == index.end()) {
        index[key] = rep.rows.size();
        rep.rows.push_back(row);
        continue;
      }
      CheckRow& dst = rep.rows[it->second];
      bool upgrade = (row.status == CheckStatus::fail &&
                      dst.status != CheckStatus::fail) ||
                     (row.status == CheckStatus::finding &&
                      dst.status == CheckStatus::pass);
      if (upgrade) {
        dst.status = row.status;
        dst.cx = row.cx;
      }
    }
  std::sort(rep.rows.begin(), rep.rows.end(),
            [](const CheckRow& a, const CheckRow& b) {
              return std::tie(a.n, a.k, a.l) < std::tie(b.n, b.k, b.l);
            });
  rep.status = worst_status(rep.rows);
  rep.elapsed_ms = tm.ms();
  return rep;
}

}  // namespace

VerificationReport check_caterpillar(const SweepSpec& spec) {
  Timer tm;
  std::vector<VerificationReport> parts;
  parts.push_back(check_caterpillar_sandwich(spec));
  parts.push_back(check_caterpillar_majorization(spec));
  parts.push_back(check_s_invariance(spec));
  return merge_reports("caterpillar", spec, tm, std::move(parts));
}

VerificationReport check_starlike_majorization(const SweepSpec& spec) {
  Timer tm;
  RowTable tbl;
  for (int n = std::max(4, spec.min_n); n <= spec.max_n; ++n) {
    auto grid = kl_grid(spec, n, n - 1, 1);
    if (grid.empty()) continue;
    tbl.add_grid(n, grid);
    int p_hi = n - 2;  // p = n - 1 is the star, a single signature
    if (spec.p_cap > 0) p_hi = std::min(p_hi, spec.p_cap);
    for (int p = 2; p <= p_hi; ++p) {
      auto sigs = partitions(n - 1, p);
      std::vector<Tree> trees;
      std::vector<std::string> codes;
      for (auto& x : sigs) trees.push_back(starlike(x));
      for (auto& t : trees) codes.push_back(canonical_code(t));
      auto results = sweep_collect<VioList>(
          static_cast<int>(sigs.size()), spec.workers,
          [&](int i, EbarCache& cache) {
            VioList out;
            for (size_t j = 0; j < sigs.size(); ++j) {
              if (static_cast<size_t>(i) == j) continue;
              if (!majorization_prec(sigs[i], sigs[j])) continue;
              for (auto [k, l] : grid) {
                const Rational& big = cache.get(trees[i], codes[i], k, l);
                const Rational& small = cache.get(trees[j], codes[j], k, l);
                if (big < small)
                  out.push_back(
                      {k, l, CheckStatus::fail,
                       make_cx(trees[i], big, small,
                               "majorizing arm tuple must not have a smaller "
                               "avg_ecc")});
                else if (big == small && codes[i] != codes[j])
                  out.push_back(
                      {k, l, CheckStatus::finding,
                       make_cx(trees[i], big, small,
                               "equal avg_ecc for non-isomorphic comparable "
                               "starlike trees")});
              }
            }
            return out;
          });
      tbl.apply_all(n, results);
    }
  }
  return finish("starlike", spec, std::move(tbl), tm);
}

VerificationReport check_broom_chain(const SweepSpec& spec) {
  Timer tm;
  RowTable tbl;
  for (int n = std::max(4, spec.min_n); n <= spec.max_n; ++n) {
    auto grid = kl_grid(spec, n, n - 1, 1);
    if (grid.empty()) continue;
    tbl.add_grid(n, grid);
    // chain: path, brooms of growing max degree, star
    std::vector<Tree> chain{path(n)};
    for (int d = 3; d <= n - 1; ++d) chain.push_back(broom(n, d));
    chain.push_back(star(n));
    EbarCache cache;
    std::vector<std::string> chain_codes;
    for (auto& t : chain) chain_codes.push_back(canonical_code(t));
    for (auto [k, l] : grid) {
      for (size_t i = 0; i + 1 < chain.size(); ++i) {
        const Rational& a = cache.get(chain[i], chain_codes[i], k, l);
        const Rational& b = cache.get(chain[i + 1], chain_codes[i + 1], k, l);
        if (a < b) {
          Violation v{k, l, CheckStatus::fail,
                      make_cx(chain[i], a, b,
                              "broom chain must be non-increasing from path "
                              "to star")};
          tbl.apply(n, v);
        }
      }
    }
    // second maximum: among trees strictly below the path value, the top
    // value is the one of the near-path broom
    auto trees = enumerate_trees(n);
    auto values = sweep_collect<std::vector<Rational>>(
        static_cast<int>(trees.size()), spec.workers,
        [&](int i, EbarCache& c) {
          std::vector<Rational> vals;
          auto code = canonical_code(trees[i]);
          vals.reserve(grid.size());
          for (auto [k, l] : grid) vals.push_back(c.get(trees[i], code, k, l));
          return vals;
        });
    for (size_t gi = 0; gi < grid.size(); ++gi) {
      auto [k, l] = grid[gi];
      const Rational& path_val = cache.get(chain[0], chain_codes[0], k, l);
      std::optional<Rational> second;
      std::optional<size_t> second_idx;
      for (size_t i = 0; i < trees.size(); ++i) {
        if (values[i][gi] >= path_val) continue;
        if (!second || values[i][gi] > *second) {
          second = values[i][gi];
          second_idx = i;
        }
      }
      if (!second) continue;  // every tree ties the path at this (k, l)
      int delta = std::max(3, k - l + 1);
      Tree b = delta <= n - 1 ? broom(n, delta) : star(n);
      const Rational& bv = cache.get(b, k, l);
      if (*second != bv)
        tbl.apply(n, {k, l, CheckStatus::finding,
                      make_cx(trees[*second_idx], *second, bv,
                              "second-largest avg_ecc expected at the broom "
                              "of max degree max(3, k-l+1)")});
    }
  }
  return finish("broom-chain", spec, std::move(tbl), tm);
}

VerificationReport check_closed_forms(const SweepSpec& spec) {
  Timer tm;
  RowTable tbl;
  for (int n = std::max(2, spec.min_n); n <= spec.max_n; ++n) {
    // Past order 12, keep only the rows with a fast independent route:
    // the (2,1) eccentricity sum and the k = l edge-count identity.
    bool big = n > 12;
    std::vector<KL> grid;
    if (!big) {
      grid = kl_grid(spec, n, n, spec.include_l0 ? 0 : 1);
    } else {
      for (auto [k, l] : kl_grid(spec, n, std::min(n, 5), 1))
        if ((k == 2 && l == 1) || k == l) grid.emplace_back(k, l);
    }
    if (grid.empty()) continue;
    tbl.add_grid(n, grid);
    Tree pt = path(n), st = star(n);
    EbarCache cache;
    auto pt_code = canonical_code(pt);
    auto st_code = canonical_code(st);
    for (auto [k, l] : grid) {
      if (k <= n - 1) {
        Rational cf = closed_form_path(n, {k, l});
        Rational brute;
        if (big && k == 2 && l == 1) {
          BigInt sum = 0;
          for (int v = 0; v < n; ++v) sum += eccentricity(pt, v);
          brute = Rational(sum, n);
        } else if (big) {  // k == l
          brute = Rational(steiner_wiener(pt, k), binomial(n, k));
        } else {
          brute = cache.get(pt, pt_code, k, l);
        }
        if (cf != brute)
          tbl.apply(n, {k, l, CheckStatus::fail,
                        make_cx(pt, cf, brute,
                                "path closed form must match enumeration")});
        if (k == 2 && l == 1) {
          Rational literal((3 * n - 2) / 4);
          if (literal != cf)
            tbl.apply(n, {k, l, CheckStatus::finding,
                          make_cx(pt, literal, cf,
                                  "erratum: the floored average disagrees "
                                  "with the exact eccentricity sum")});
        }
      }
      if (!big || k == l) {
        Rational cf = closed_form_star(n, {k, l});
        Rational brute = big ? Rational(steiner_wiener(st, k), binomial(n, k))
                             : cache.get(st, st_code, k, l);
        if (cf != brute)
          tbl.apply(n, {k, l, CheckStatus::fail,
                        make_cx(st, cf, brute,
                                "star closed form must match enumeration")});
      }
    }
    if (!big) {
      // trees with few leaves: whenever k - l reaches the leaf count, every
      // l-set already spans everything
      auto trees = enumerate_trees(n);
      auto results = sweep_collect<VioList>(
          static_cast<int>(trees.size()), spec.workers,
          [&](int i, EbarCache& c) {
            VioList out;
            const Tree& t = trees[i];
            int p = static_cast<int>(leaves(t).size());
            auto code = canonical_code(t);
            for (auto [k, l] : grid) {
              if (k > n - 1 || k - l < p) continue;
              const Rational& val = c.get(t, code, k, l);
              if (val != n - 1)
                out.push_back({k, l, CheckStatus::fail,
                               make_cx(t, val, Rational(n - 1),
                                       "avg_ecc must be n-1 when k-l covers "
                                       "all leaves")});
            }
            return out;
          });
      tbl.apply_all(n, results);
    }
  }
  return finish("closed-forms", spec, std::move(tbl), tm);
}

VerificationReport check_sw_bounds(const SweepSpec& spec) {
  Timer tm;
  RowTable tbl;
  for (int n = std::max(2, spec.min_n); n <= spec.max_n; ++n) {
    std::vector<KL> grid;
    for (int k = 2; k <= n; ++k) {
      if (spec.only_k && *spec.only_k != k) continue;
      if (spec.only_l && *spec.only_l != k) continue;
      if (spec.k_cap > 0 && k > spec.k_cap) continue;
      grid.emplace_back(k, k);
    }
    if (grid.empty()) continue;
    tbl.add_grid(n, grid);
    auto trees = enumerate_trees(n);
    std::string star_code = n >= 2 ? canonical_code(star(n)) : "";
    std::string path_code = canonical_code(path(n));
    std::map<int, Tree> brooms, bs, central;
    for (int d = 3; d <= n - 1; ++d) brooms.emplace(d, broom(n, d));
    for (int p = 2; p <= n - 1; ++p) bs.emplace(p, balanced_starlike(n, p));
    for (int d = 2; d <= n - 1; ++d)
      central.emplace(d, central_caterpillar(n, d, 0));
    auto results = sweep_collect<VioList>(
        static_cast<int>(trees.size()), spec.workers,
        [&](int i, EbarCache& cache) {
          VioList out;
          const Tree& t = trees[i];
          auto code = canonical_code(t);
          int dd = max_degree(t);
          int p = static_cast<int>(leaves(t).size());
          int dm = diameter(t);
          for (auto [k, l] : grid) {
            BigInt sw = steiner_wiener(t, k);
            const Rational& avg = cache.get(t, code, k, k);
            if (Rational(sw) != Rational(binomial(t.order(), k)) * avg)
              out.push_back({k, l, CheckStatus::fail,
                             make_cx(t, Rational(sw),
                                     Rational(binomial(t.order(), k)) * avg,
                                     "edge-count route and subset route must "
                                     "agree")});
            if (k <= n - 1) {
              BigInt lb = binomial(n - 1, k - 1) * (n - 1);
              BigInt ub = binomial(n + 1, k + 1) * (k - 1);
              if (sw < lb || sw > ub)
                out.push_back({k, l, CheckStatus::fail,
                               make_cx(t, Rational(sw), Rational(lb),
                                       "steiner wiener bounds violated")});
              if ((sw == lb) != (code == star_code))
                out.push_back({k, l, CheckStatus::fail,
                               make_cx(t, Rational(sw), Rational(lb),
                                       "lower bound attained exactly by the "
                                       "star")});
              if ((sw == ub) != (code == path_code))
                out.push_back({k, l, CheckStatus::fail,
                               make_cx(t, Rational(sw), Rational(ub),
                                       "upper bound attained exactly by the "
                                       "path")});
              if (dd >= 3 && sw > steiner_wiener(brooms.at(dd), k))
                out.push_back(
                    {k, l, CheckStatus::fail,
                     make_cx(t, Rational(sw),
                             Rational(steiner_wiener(brooms.at(dd), k)),
                             "broom maximizes the steiner wiener index at "
                             "fixed max degree")});
              if (p >= 2 && sw < steiner_wiener(bs.at(p), k))
                out.push_back(
                    {k, l, CheckStatus::fail,
                     make_cx(t, Rational(sw),
                             Rational(steiner_wiener(bs.at(p), k)),
                             "balanced starlike minimizes the steiner wiener "
                             "index at fixed leaf count")});
              if (dm >= 2 && sw < steiner_wiener(central.at(dm), k))
                out.push_back(
                    {k, l, CheckStatus::fail,
                     make_cx(t, Rational(sw),
                             Rational(steiner_wiener(central.at(dm), k)),
                             "central caterpillar minimizes the steiner "
                             "wiener index at fixed diameter")});
            }
          }
          return out;
        });
    tbl.apply_all(n, results);
  }
  return finish("sw", spec, std::move(tbl), tm);
}

VerificationReport run_suite(Suite s, const SweepSpec& spec) {
  switch (s) {
    case Suite::sandwich: return check_sandwich(spec);
    case Suite::sigma: return check_sigma(spec);
    case Suite::pq: return check_pq(spec);
    case Suite::leaves: return check_fixed_leaves(spec);
    case Suite::maxdeg: return check_fixed_maxdeg(spec);
    case Suite::diameter: return check_fixed_diameter(spec);
    case Suite::caterpillar: return check_caterpillar(spec);
    case Suite::starlike: return check_starlike_majorization(spec);
    case Suite::broom_chain: return check_broom_chain(spec);
    case Suite::closed_forms: return check_closed_forms(spec);
    case Suite::sw: return check_sw_bounds(spec);
  }
  throw BadRangeError("unknown suite");
}

std::vector<VerificationReport> run_suites(const std::vector<Suite>& suites,
                                           const SweepSpec& spec) {
  std::vector<VerificationReport> out;
  out.reserve(suites.size());
  for (Suite s : suites) out.push_back(run_suite(s, spec));
  return out;
}

}  // namespace stkl
