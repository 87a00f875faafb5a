#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace qstab {

struct SuiteOptions {
    std::string quiver;  // empty: the suite's default quivers
    int max_m = -1;      // -1: suite default
    uint64_t seed = 20240601;
    int count = -1;      // number of random samples, -1: suite default
};

struct SuiteResult {
    explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}
    std::string name;
    bool pass = true;
    bool undetermined = false;
    std::vector<std::string> lines;
    nlohmann::json report;

    void check(bool ok, const std::string& line) {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
    }
};

std::vector<std::string> suite_names();
/// Runs a named regression suite; throws DomainError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace qstab
