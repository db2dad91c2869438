#pragma once

#include <cstdint>
#include <vector>

namespace sparsecert {

// Binomial coefficient, saturating at UINT64_MAX on overflow.
std::uint64_t binomial(int n, int k);

// Lexicographically first k-subset of {0..n-1}.
std::vector<int> first_combination(int k);

// In-place lexicographic successor; returns false after the last subset.
bool next_combination(std::vector<int>& c, int n);

// Lexicographic unranking: the rank-th k-subset of {0..n-1}.
std::vector<int> combination_from_rank(std::uint64_t rank, int n, int k);

}  // namespace sparsecert
