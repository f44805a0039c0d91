#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stkl/rational.hpp"
#include "stkl/tree.hpp"

namespace stkl {

enum class Suite {
  sandwich,
  sigma,
  pq,
  leaves,
  maxdeg,
  diameter,
  caterpillar,
  starlike,
  broom_chain,
  closed_forms,
  sw,
};

std::string suite_name(Suite s);
std::optional<Suite> suite_from_name(const std::string& name);
std::vector<Suite> all_suites();

enum class CheckStatus { pass, fail, finding };

std::string status_name(CheckStatus s);

struct Counterexample {
  std::vector<std::pair<int, int>> edges;  // the offending tree
  std::string lhs, rhs;                    // compared values, exact
  std::string relation;                    // the claim that failed
};

struct CheckRow {
  int n = 0, k = 0, l = 0;
  CheckStatus status = CheckStatus::pass;
  std::optional<Counterexample> cx;
};

struct SweepSpec {
  int min_n = 2;
  int max_n = 8;
  std::optional<int> only_k, only_l;
  int k_cap = 0;      // 0: no extra cap on k
  int leaf_cap = 0;   // leaves suite: skip trees with more leaves
  int delta_cap = 0;  // maxdeg suite: skip trees of larger max degree
  int p_cap = 0;      // starlike suite: cap on the number of arms
  bool include_relaxed = true;
  bool include_l0 = true;  // l = 0 rows where meaningful
  int workers = 1;
};

struct VerificationReport {
  std::string suite;
  SweepSpec spec;
  CheckStatus status = CheckStatus::pass;  // worst row status
  std::vector<CheckRow> rows;
  std::int64_t elapsed_ms = 0;
};

// Each suite sweeps its claim over every enumerated tree (or constructed
// family) and every (k, l) in the grid, reporting one row per (n, k, l)
// with the first counterexample in enumeration order. Failures are data,
// not exceptions; "finding" marks documented anomalies rather than broken
// claims. Reports are deterministic for any worker count.
VerificationReport check_sandwich(const SweepSpec& spec);
VerificationReport check_sigma(const SweepSpec& spec);
VerificationReport check_pq(const SweepSpec& spec);
VerificationReport check_fixed_leaves(const SweepSpec& spec);
VerificationReport check_fixed_maxdeg(const SweepSpec& spec);
VerificationReport check_fixed_diameter(const SweepSpec& spec);
VerificationReport check_caterpillar(const SweepSpec& spec);
VerificationReport check_starlike_majorization(const SweepSpec& spec);
VerificationReport check_broom_chain(const SweepSpec& spec);
VerificationReport check_closed_forms(const SweepSpec& spec);
VerificationReport check_sw_bounds(const SweepSpec& spec);

// Parts of the caterpillar suite, separately callable.
VerificationReport check_caterpillar_sandwich(const SweepSpec& spec);
VerificationReport check_caterpillar_majorization(const SweepSpec& spec);
VerificationReport check_s_invariance(const SweepSpec& spec);

VerificationReport run_suite(Suite s, const SweepSpec& spec);
std::vector<VerificationReport> run_suites(const std::vector<Suite>& suites,
                                           const SweepSpec& spec);

}  // namespace stkl
