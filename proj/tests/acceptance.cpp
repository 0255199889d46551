#include "c2q/checks.hpp"

#include <cstdio>
#include <string>

#ifndef C2Q_GOLDEN_DIR
#define C2Q_GOLDEN_DIR "tests/golden"
#endif

// Runs every acceptance criterion at full size; one line per criterion.
int main(int argc, char** argv)
{
    const std::string golden = argc > 1 ? argv[1] : C2Q_GOLDEN_DIR;
    constexpr std::uint64_t seed = 20240601;
    int failed = 0;
    for (const c2q::CheckResult& r : c2q::run_checks(c2q::CheckScale::Full, seed, golden)) {
        std::printf("%-4s %2d  %-58s n=%-6d fail=%-3d %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.instances, r.failures, r.seconds, r.detail.c_str());
        std::fflush(stdout);
        failed += !r.passed;
    }
    std::printf("%d/12 criteria passed\n", 12 - failed);
    return failed == 0 ? 0 : 1;
}
