#pragma once
#include "grmod/invariants.hpp"

namespace grmod {

// Outcome of one machine-verified statement on one instance.
//
//   Pass      every hypothesis and conclusion settled at Certified level
//   Evidence  conclusions hold, but some ingredient is bounded-scan or
//             Hilbert-window evidence rather than a certificate
//   Fail      a conclusion is false on this instance
//   Skipped   a hypothesis does not hold, so the statement says nothing
enum class CheckVerdict { Pass, Evidence, Fail, Skipped };

std::string verdict_str(CheckVerdict v);

struct CheckResult {
    std::string check;
    CheckVerdict verdict = CheckVerdict::Pass;
    CertStatus status;
    std::string witness;
    int hilbert_bound = 0; // widest window used by degreewise comparisons
};

// One instance to run a check on.  Unused parameters are ignored by checks
// that do not take them; bound = 0 means default_ext_bound(ring).
struct CheckRequest {
    Presentation M;
    Dualizer C;
    int n = 1;
    int k = 1;
    int t = 1;
    int range = 4;
    int bound = 0;
};

// Degree window for Hilbert-function comparisons inside checks; 0 restores
// the per-module default.
int hilbert_window_override();
void set_hilbert_window_override(int d);

// Registered check ids, in canonical report order.
std::vector<std::string> harness_check_ids();
bool harness_has_check(const std::string& id);

// Runs one check; throws std::invalid_argument for an unknown id.
CheckResult run_check(const std::string& id, const CheckRequest& req);

} // namespace grmod
