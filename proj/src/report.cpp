#include "stkl/report.hpp"

#include <sstream>

#include "stkl/version.hpp"

namespace stkl {

using nlohmann::ordered_json;

ordered_json report_json(const std::vector<VerificationReport>& reps,
                         bool include_timing) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  ordered_json spec;
  ordered_json suites = ordered_json::array();
  for (const auto& r : reps) suites.push_back(r.suite);
  spec["suites"] = suites;
  if (!reps.empty()) {
    spec["min_n"] = reps.front().spec.min_n;
    spec["max_n"] = reps.front().spec.max_n;
    spec["k"] = reps.front().spec.only_k ? ordered_json(*reps.front().spec.only_k)
                                         : ordered_json(nullptr);
    spec["l"] = reps.front().spec.only_l ? ordered_json(*reps.front().spec.only_l)
                                         : ordered_json(nullptr);
  }
  j["spec"] = spec;
  ordered_json results = ordered_json::array();
  std::int64_t total_ms = 0;
  for (const auto& r : reps) {
    total_ms += r.elapsed_ms;
    for (const auto& row : r.rows) {
      ordered_json jr;
      jr["suite"] = r.suite;
      jr["n"] = row.n;
      jr["k"] = row.k;
      jr["l"] = row.l;
      jr["status"] = status_name(row.status);
      if (row.cx) {
        ordered_json cx;
        ordered_json edges = ordered_json::array();
        for (auto [u, v] : row.cx->edges)
          edges.push_back(ordered_json::array({u, v}));
        cx["edges"] = edges;
        cx["lhs"] = row.cx->lhs;
        cx["rhs"] = row.cx->rhs;
        cx["relation"] = row.cx->relation;
        jr["counterexample"] = cx;
      }
      results.push_back(jr);
    }
  }
  j["results"] = results;
  j["elapsed_ms"] = include_timing ? total_ms : 0;
  return j;
}

std::string report_csv(const std::vector<VerificationReport>& reps) {
  std::ostringstream ss;
  ss << "suite,n,k,l,status\n";
  for (const auto& r : reps)
    for (const auto& row : r.rows)
      ss << r.suite << "," << row.n << "," << row.k << "," << row.l << ","
         << status_name(row.status) << "\n";
  return ss.str();
}

bool any_failure(const std::vector<VerificationReport>& reps) {
  for (const auto& r : reps)
    for (const auto& row : r.rows)
      if (row.status == CheckStatus::fail) return true;
  return false;
}

ordered_json trace_json(const RewriteTrace& trace, const std::string& target,
                        int k, int l) {
  ordered_json j;
  j["target"] = target;
  j["k"] = k;
  j["l"] = l;
  ordered_json steps = ordered_json::array();
  for (const auto& s : trace.steps) {
    ordered_json st;
    st["op"] = s.op;
    st["code"] = s.code;
    st["avg_ecc"] = fraction_str(s.ebar);
    steps.push_back(st);
  }
  j["steps"] = steps;
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : trace.terminal.edges())
    edges.push_back(ordered_json::array({u, v}));
  j["terminal_edges"] = edges;
  return j;
}

}  // namespace stkl
