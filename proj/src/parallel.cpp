#include "qcwig/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qcwig {

std::size_t thread_count() {
    std::size_t n = 0;
    if (const char* env = std::getenv("QCWIG_THREADS")) {
        try {
            n = std::stoul(env);
        } catch (const std::exception&) {
            n = 0;
        }
    }
    if (n == 0) n = std::thread::hardware_concurrency();
    return std::max<std::size_t>(n, 1);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
    const std::size_t workers = std::min(thread_count(), n);
    if (workers <= 1) {
        if (n) body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t b = 0; b < n; b += chunk) pool.emplace_back(body, b, std::min(n, b + chunk));
    for (auto& t : pool) t.join();
}

}  // namespace qcwig
