#include "rsd/combinat.hpp"

namespace rsd {

long long binom_ll(int a, int k) {
    if (k < 0 || a < 0 || k > a) return 0;
    if (k > a - k) k = a - k;
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (a - k + t) / t;
    return r;
}

void for_each_combination(int n, int k,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> c(k);
    for (int t = 0; t < k; ++t) c[t] = t;
    while (true) {
        fn(c);
        if (!next_combination(c, n)) return;
    }
}

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    for_each_combination(n, k, [&](const std::vector<int>& c) { out.push_back(c); });
    return out;
}

long long combination_rank(const std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    long long rank = 0;
    int prev = -1;
    for (int t = 0; t < k; ++t) {
        for (int v = prev + 1; v < c[t]; ++v) rank += binom_ll(n - 1 - v, k - 1 - t);
        prev = c[t];
    }
    return rank;
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    if (k == 0) return false;
    int t = k - 1;
    while (t >= 0 && c[t] == n - k + t) --t;
    if (t < 0) return false;
    ++c[t];
    for (int u = t + 1; u < k; ++u) c[u] = c[u - 1] + 1;
    return true;
}

} // namespace rsd
