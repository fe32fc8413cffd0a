#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace rsd {

/// C(a,k) in machine integers (valid well inside desk scale).
long long binom_ll(int a, int k);

/// Calls fn once per k-subset of {0..n-1}, lexicographic order, as a sorted
/// index vector (reused buffer; do not retain the reference).
void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

std::vector<std::vector<int>> combinations(int n, int k);

/// Lexicographic rank of a sorted k-subset of {0..n-1}.
long long combination_rank(const std::vector<int>& c, int n);

/// Advances a sorted k-subset of {0..n-1} to its lexicographic successor;
/// false when c was the last one.
bool next_combination(std::vector<int>& c, int n);

} // namespace rsd
