#ifndef HYPERLIN_REPORT_HPP
#define HYPERLIN_REPORT_HPP

#include <nlohmann/json.hpp>

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace hyperlin {

/// One named verification with the quantity that was measured, the
/// contract it was held against, and the mathematical claim it exercises.
struct check_record {
    std::string id;
    std::string description;
    std::string claim;
    nlohmann::json measured;
    nlohmann::json expected;
    bool pass = false;
};

struct verification_report {
    std::string suite;
    std::vector<check_record> checks;
    nlohmann::json environment;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(check_record c) { checks.push_back(std::move(c)); }

    void merge(const verification_report& other) {
        for (const auto& c : other.checks) {
            check_record copy = c;
            copy.id = other.suite + "/" + copy.id;
            checks.push_back(std::move(copy));
        }
    }

    // No timestamps or hostnames anywhere: a fixed config and seed must
    // reproduce the report byte for byte.
    nlohmann::json to_json() const {
        nlohmann::json checks_json = nlohmann::json::array();
        for (const auto& c : checks) {
            checks_json.push_back({
                {"id", c.id},
                {"description", c.description},
                {"claim", c.claim},
                {"measured", c.measured},
                {"expected", c.expected},
                {"pass", c.pass},
            });
        }
        return nlohmann::json{
            {"schema", 1},
            {"suite", suite},
            {"environment", environment},
            {"checks", std::move(checks_json)},
            {"pass", passed()},
        };
    }

    std::string to_text() const {
        std::string out;
        out += "suite: " + suite + "\n";
        out += "environment: " + environment.dump() + "\n";
        for (const auto& c : checks) {
            out += c.pass ? "  [PASS] " : "  [FAIL] ";
            out += c.id + ": " + c.description + "\n";
            out += "         claim: " + c.claim + "\n";
            out += "         measured: " + c.measured.dump() +
                   "  expected: " + c.expected.dump() + "\n";
        }
        out += passed() ? "result: PASS\n" : "result: FAIL\n";
        return out;
    }
};

} // namespace hyperlin

#endif
