// Pass/fail tallies shared by every verification routine.
#pragma once

#include <string>
#include <vector>

namespace bandlab {

struct Report {
    std::string check;
    long instances = 0;
    long failures = 0;
    std::vector<std::string> messages;  // first few counterexamples, verbatim

    bool ok() const { return failures == 0; }
    void pass() { ++instances; }
    void fail(const std::string& msg) {
        ++instances;
        ++failures;
        if (messages.size() < 20) messages.push_back(msg);
    }
    void expect(bool cond, const std::string& msg) { cond ? pass() : fail(msg); }
    void merge(const Report& o) {
        instances += o.instances;
        failures += o.failures;
        for (const auto& m : o.messages)
            if (messages.size() < 20) messages.push_back(m);
    }
};

}  // namespace bandlab
