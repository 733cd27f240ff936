// The acceptance suite: one pass/fail result per headline criterion, each with
// a fixed time limit.
#pragma once

#include <string>
#include <vector>

namespace bandlab {

struct Criterion {
    std::string id;
    std::string description;
    bool ok = false;
    double seconds = 0;
    double limit = 0;  // seconds
    long instances = 0;
    std::string detail;  // first failure, if any

    bool pass() const { return ok && seconds <= limit; }
};

struct AcceptanceOptions {
    std::string golden_dir;
    bool quick = false;  // fewer samples, same checks
    bool parallel = true;
};

std::vector<Criterion> run_acceptance(const AcceptanceOptions& o);

// "PASS coxeter-d5 (0.01 s / 1 s, 12 instances) ..."
std::string format_criterion(const Criterion& c);

}  // namespace bandlab
