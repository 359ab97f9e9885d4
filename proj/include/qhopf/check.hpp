#pragma once

#include <string>

namespace qhopf {

// Outcome of verifying one identity instance. `detail` describes the
// counterexample when ok is false and is empty otherwise.
struct CheckResult {
    bool ok = true;
    std::string detail;

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string d) { return {false, std::move(d)}; }
};

}  // namespace qhopf
