#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "stkl/transforms.hpp"
#include "stkl/verify.hpp"

namespace stkl {

// { tool_version, spec: {...}, results: [ {suite, n, k, l, status,
//   counterexample?: {edges, lhs, rhs, relation}} ], elapsed_ms }.
// Deterministic key order and content; with include_timing = false the
// elapsed_ms field is zeroed so outputs are byte-comparable.
nlohmann::ordered_json report_json(const std::vector<VerificationReport>& reps,
                                   bool include_timing = true);

// One row per (suite, n, k, l): "suite,n,k,l,status".
std::string report_csv(const std::vector<VerificationReport>& reps);

bool any_failure(const std::vector<VerificationReport>& reps);

nlohmann::ordered_json trace_json(const RewriteTrace& trace,
                                  const std::string& target, int k, int l);

}  // namespace stkl
