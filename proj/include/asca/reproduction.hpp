#pragma once

#include <string>
#include <vector>

#include "asca/parallel.hpp"

namespace asca {

enum class Scope { fast, full };

struct ReproductionOptions {
    Scope scope = Scope::fast;
    bool long_run = false;  // adds the hour-scale items
    int threads = default_threads();
};

struct CheckResult {
    int id = 0;
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::vector<std::string> skipped;  // parts left out of this scope
    double seconds = 0.0;
};

inline constexpr int kCheckCount = 15;

// Check `id` in 1..kCheckCount against the published reference values.
CheckResult run_check(int id, const ReproductionOptions& opts);
std::vector<CheckResult> verify_paper(const ReproductionOptions& opts);

}  // namespace asca
