// Module invariant suite; one line per property.

#include <cstdio>
#include <cstdlib>

#include "qcwig/verify.hpp"

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
    int failed = 0;
    for (const auto& r : qcwig::property_suite(seed)) {
        std::printf("[%s] %s (%.2fs): %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
        if (!r.passed) ++failed;
    }
    return failed ? 1 : 0;
}
