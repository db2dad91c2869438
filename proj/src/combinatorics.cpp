#include "sparsecert/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace sparsecert {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
        if (result > std::numeric_limits<std::uint64_t>::max() / factor)
            return std::numeric_limits<std::uint64_t>::max();
        result = result * factor / static_cast<std::uint64_t>(i);
    }
    return result;
}

std::vector<int> first_combination(int k) {
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[i] = i;
    return c;
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

std::vector<int> combination_from_rank(std::uint64_t rank, int n, int k) {
    if (rank >= binomial(n, k)) throw std::out_of_range("combination_from_rank: rank too large");
    std::vector<int> c;
    c.reserve(static_cast<std::size_t>(k));
    int value = 0;
    for (int slot = 0; slot < k; ++slot) {
        for (;; ++value) {
            const std::uint64_t block = binomial(n - 1 - value, k - 1 - slot);
            if (rank < block) break;
            rank -= block;
        }
        c.push_back(value);
        ++value;
    }
    return c;
}

}  // namespace sparsecert
