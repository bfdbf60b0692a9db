#pragma once

// Check reports shared by the library's verify_* operations, the CLI, and
// the acceptance suite.  A report line records the claim being checked, the
// parameters, and the expected vs computed values; serialization is JSON or
// a flat CSV of the same fields.

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace ribbonres {

using json = nlohmann::json;

struct CheckResult {
    std::string check;    // machine-readable check id
    std::string anchor;   // the mathematical claim being verified
    json params;
    json expected;
    json computed;
    bool pass = false;
    long millis = 0;
};

struct Report {
    std::vector<CheckResult> items;

    bool all_pass() const {
        for (auto& c : items)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* first_failure() const {
        for (auto& c : items)
            if (!c.pass) return &c;
        return nullptr;
    }
    void add(CheckResult c) { items.push_back(std::move(c)); }
    void merge(Report other) {
        for (auto& c : other.items) items.push_back(std::move(c));
    }

    json to_json(bool timing = true) const;
    std::string to_csv(bool timing = true) const;
};

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace ribbonres
