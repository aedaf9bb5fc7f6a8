#pragma once

#include <string>
#include <vector>

namespace bpcat {

/// Outcome of one verification, with failure witnesses when not ok.
struct Report {
    std::string check;
    bool ok = true;
    long cases = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void pass() { ++cases; }
    void fail(const std::string& witness) {
        ++cases;
        ok = false;
        failures.push_back(witness);
    }
    void require(bool cond, const std::string& witness) {
        if (cond)
            pass();
        else
            fail(witness);
    }
};

}  // namespace bpcat
