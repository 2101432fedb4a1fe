// One line per acceptance criterion. Exit status is non-zero if any fails.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "asca/reproduction.hpp"

int main(int argc, char** argv) {
    asca::ReproductionOptions opts;
    opts.scope = asca::Scope::full;
    const char* env = std::getenv("ASCA_LONG_RUN");
    opts.long_run = env != nullptr && std::strcmp(env, "0") != 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--long-run") == 0) opts.long_run = true;
        if (std::strcmp(argv[i], "--fast") == 0) opts.scope = asca::Scope::fast;
    }

    int failed = 0;
    for (int id = 1; id <= asca::kCheckCount; ++id) {
        const asca::CheckResult r = asca::run_check(id, opts);
        failed += !r.pass;
        std::printf("%s %2d %s | expected %s | computed %s | %.2fs\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.expected.c_str(), r.computed.c_str(), r.seconds);
        for (const auto& s : r.skipped) std::printf("     skipped: %s\n", s.c_str());
    }
    std::printf("%d/%d passed\n", asca::kCheckCount - failed, asca::kCheckCount);
    return failed == 0 ? 0 : 1;
}
