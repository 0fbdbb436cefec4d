#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hilbkit {

struct VerifyItem {
    std::string id;           // "c01.borel.count"; sorted lexicographically in reports
    int criterion = 0;        // 1..13
    std::string group;
    std::string description;
    std::string anchor;
    std::string expected;
    std::string computed;
    std::string note;         // reported values that are not compared
    double seconds = 0;
    bool pass() const { return expected == computed; }
};

struct VerificationReport {
    std::uint64_t seed = 0;
    std::vector<VerifyItem> items;
    double total_seconds = 0;

    std::size_t passed() const;
    std::size_t failed() const;
    /// One JSON object; timings are left out when `timings` is false so that
    /// equal seeds give byte-identical output.
    std::string to_json(bool timings = true) const;
    std::string to_text() const;
};

/// Expected values of the checklist. Tests replace entries to check that a
/// mismatch is reported.
struct ExpectedValues {
    std::vector<std::string> borel_generators{"(x^2, x*y, y^3)", "(x^2, x*y, x*z^2, y^4)",
                                              "(x^2, x*y, x*z, y^5, y^4*z)", "(x, y^5, y^4*z^2)"};
    std::map<int, std::vector<long>> phi{{3, {0, 0, 2, 8, 19, 36, 60, 92}},
                                         {4, {0, 0, 2, 8, 19, 36}},
                                         {5, {0, 0, 3, 9, 19, 36}},
                                         {6, {0, 1, 4, 10, 20, 36}}};
    std::map<int, long> q_values{{5, 36}, {6, 60}, {7, 92}};
    std::map<std::string, long> dimensions{{"V", 16}, {"R3'", 15}, {"R4", 23}, {"R5", 22},
                                           {"R6", 21}, {"H1", 19}, {"Hq", 6},  {"Z", 23}};
};

struct VerifyConfig {
    std::uint64_t seed = 0x4e2d1u;
    std::vector<std::string> only;  // group names; empty runs everything
    ExpectedValues expected;
};

/// Group names accepted by VerifyConfig::only.
const std::vector<std::string>& verify_groups();

/// Runs the checklist. Failures become report entries; nothing throws
/// except an unknown group name (InvalidInput).
VerificationReport verify_paper(const VerifyConfig& config = {});

}  // namespace hilbkit
