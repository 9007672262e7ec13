#include "conint/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace conint {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt(Complex z) {
    if (z.imag() == 0.0) return fmt(z.real());
    std::string s = fmt(z.real());
    s += (z.imag() < 0.0) ? "-" : "+";
    s += fmt(std::abs(z.imag()));
    s += "i";
    return s;
}

namespace {

CheckRecord deviations(const std::string& name, const std::string& provenance,
                       Complex expected, Complex got, double tolerance) {
    CheckRecord r;
    r.name = name;
    r.provenance = provenance;
    r.expected = fmt(expected);
    r.got = fmt(got);
    r.abs_dev = std::abs(expected - got);
    // relative deviation is only meaningful against a nonzero reference
    const double scale = std::abs(expected);
    r.rel_dev = scale > 0.0 ? r.abs_dev / scale : 0.0;
    r.tolerance = tolerance;
    return r;
}

}  // namespace

CheckRecord abs_check(const std::string& name, const std::string& provenance,
                      Complex expected, Complex got, double tolerance) {
    CheckRecord r = deviations(name, provenance, expected, got, tolerance);
    r.pass = r.abs_dev <= tolerance;
    return r;
}

CheckRecord rel_check(const std::string& name, const std::string& provenance,
                      Complex expected, Complex got, double tolerance) {
    CheckRecord r = deviations(name, provenance, expected, got, tolerance);
    r.pass = r.rel_dev <= tolerance;
    return r;
}

bool all_pass(const RunReport& report) {
    return std::all_of(report.checks.begin(), report.checks.end(),
                       [](const CheckRecord& c) { return c.pass; });
}

std::string render(const RunReport& report, bool with_timing) {
    std::ostringstream out;
    out << "report " << report.command << "\n";
    for (const auto& [k, v] : report.inputs) out << "input " << k << "=" << v << "\n";
    for (const auto& [k, v] : report.values) out << "value " << k << "=" << v << "\n";
    std::size_t passed = 0;
    for (const CheckRecord& c : report.checks) {
        out << "check " << c.name << " expected=" << c.expected << " got=" << c.got
            << " abs=" << fmt(c.abs_dev) << " rel=" << fmt(c.rel_dev)
            << " tol=" << fmt(c.tolerance) << " provenance=" << c.provenance
            << " status=" << (c.pass ? "PASS" : "FAIL");
        if (!c.note.empty()) out << " note=" << c.note;
        out << "\n";
        passed += c.pass ? 1 : 0;
    }
    if (!report.checks.empty()) {
        out << "summary checks=" << report.checks.size() << " passed=" << passed
            << " failed=" << (report.checks.size() - passed) << " status="
            << (passed == report.checks.size() ? "PASS" : "FAIL") << "\n";
    }
    if (with_timing) out << "wall_time " << fmt(report.wall_time) << "\n";
    return out.str();
}

}  // namespace conint
