#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace d21a {

/// Outcome of one verification sweep: pass/fail plus counterexamples.
struct CheckReport {
    std::string name;
    bool pass = true;
    std::vector<std::string> failures;
    std::map<std::string, std::string> info;

    explicit CheckReport(std::string n = "") : name(std::move(n)) {}

    void fail(std::string msg) {
        pass = false;
        failures.push_back(std::move(msg));
    }
    void absorb(const CheckReport& other) {
        if (!other.pass) pass = false;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        for (const auto& [k, v] : other.info) info[k] = v;
    }
    std::size_t failure_count() const { return failures.size(); }
};

} // namespace d21a
