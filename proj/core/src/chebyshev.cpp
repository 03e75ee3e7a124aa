#include <pdokit/chebyshev.hpp>

#include <mutex>

namespace pdokit {

MultiPoly dickson(unsigned n) {
    static std::mutex mu;
    static std::vector<MultiPoly> memo;
    std::lock_guard<std::mutex> lock(mu);
    if (memo.empty()) {
        memo.push_back(MultiPoly(2));
        memo.push_back(MultiPoly::x());
    }
    while (memo.size() <= n) {
        const std::size_t k = memo.size();
        memo.push_back(MultiPoly::x() * memo[k - 1] - memo[k - 2]);
    }
    return memo[n];
}

}  // namespace pdokit
