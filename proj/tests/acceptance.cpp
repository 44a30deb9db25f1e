// One line per acceptance criterion; exit status 1 if any fails.
// Usage: acceptance [seed] [criterion...]

#include <cstdio>
#include <cstdlib>
#include <vector>

#include "qcwig/verify.hpp"

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
    std::vector<int> ids;
    for (int i = 2; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    if (ids.empty())
        for (int id = 1; id <= qcwig::kAcceptanceCriteria; ++id) ids.push_back(id);
    int failed = 0;
    for (int id : ids) {
        const auto r = qcwig::acceptance_criterion(id, seed);
        std::printf("[%s] %2d. %s (%.2fs): %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failed;
    }
    std::printf("%d of %zu criteria failed\n", failed, ids.size());
    return failed ? 1 : 0;
}
