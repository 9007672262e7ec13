#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conint/vec3.hpp"

namespace conint {

// one verification record: what was computed, the reference it was held
// against, and how far off it landed.  provenance names the oracle or
// derivation the reference value comes from.
struct CheckRecord {
    std::string name;
    std::string provenance;
    std::string expected;
    std::string got;
    double abs_dev = 0.0;
    double rel_dev = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;  // extra conditions folded into pass, if any
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<CheckRecord> checks;
    double wall_time = 0.0;  // seconds; rendered only on request
};

// fixed %.12g formatting keeps reports byte-identical for fixed inputs
std::string fmt(double x);
std::string fmt(Complex z);

// record with abs_dev = |expected - got| compared against the tolerance
CheckRecord abs_check(const std::string& name, const std::string& provenance,
                      Complex expected, Complex got, double tolerance);

// record compared through rel_dev = abs_dev / max(|expected|, |got|)
CheckRecord rel_check(const std::string& name, const std::string& provenance,
                      Complex expected, Complex got, double tolerance);

bool all_pass(const RunReport& report);

// structured text, one line per record; wall_time is emitted only when
// with_timing is set so that default output stays deterministic
std::string render(const RunReport& report, bool with_timing = false);

}  // namespace conint
