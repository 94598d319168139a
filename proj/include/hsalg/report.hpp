#pragma once

#include <string>
#include <vector>

namespace hsalg {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
    /// Advisory checks are reported but never fail the report.
    bool advisory = false;
};

/// Pass/fail record produced by the verify_* operations. Failures are data,
/// not exceptions.
struct Report {
    std::string subject;
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail), false});
    }
    void note(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail), true});
    }

    bool passed() const {
        for (const auto& c : checks)
            if (!c.advisory && !c.passed) return false;
        return true;
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

} // namespace hsalg
