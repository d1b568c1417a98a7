#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qd {

struct PropertyResult {
    std::string module;
    std::string property;
    std::string metric;
    double value = 0;
    double tol = 0;
    bool pass = false;
};

/// "PASS|FAIL <module>.<property> <metric>=<value> tol=<value>"
std::string format_result(const PropertyResult& r);

std::vector<std::string> suite_names();

/// Runs the named suite ("core", "group", "conjugacy" or "all"). All random
/// sampling is driven by `seed`.
std::vector<PropertyResult> run_suite(const std::string& suite, std::uint64_t seed, int threads = 1);

}  // namespace qd
