#include "patlab/kernels.hpp"

namespace patlab::kernels {
namespace {

std::uint64_t support_count_scalar(const std::uint64_t* tx, std::size_t m, std::uint64_t p) {
    std::uint64_t count = 0;
    for (std::size_t j = 0; j < m; ++j)
        count += (p & ~tx[j]) == 0;
    return count;
}

void support_count2_scalar(const std::uint64_t* tx, std::size_t m, std::uint64_t p1,
                           std::uint64_t p2, std::uint64_t& c1, std::uint64_t& c2) {
    std::uint64_t a = 0, b = 0;
    for (std::size_t j = 0; j < m; ++j) {
        const std::uint64_t t = tx[j];
        a += (p1 & ~t) == 0;
        b += (p2 & ~t) == 0;
    }
    c1 = a;
    c2 = b;
}

std::uint64_t cover_weight_sum_scalar(const std::uint64_t* tx, const std::uint64_t* w,
                                      std::size_t m, std::uint64_t p) {
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < m; ++j)
        if ((p & ~tx[j]) == 0) sum += w[j];
    return sum;
}

std::uint64_t pattern_weight_sum_scalar(const std::uint64_t* tx, const std::uint64_t* wmat,
                                        std::size_t m, std::size_t n, std::uint64_t p) {
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < m; ++j) {
        if ((p & ~tx[j]) != 0) continue;
        const std::uint64_t* row = wmat + j * n;
        std::uint64_t row_sum = 0;
        for (std::uint64_t b = p; b != 0; b &= b - 1)
            row_sum += row[__builtin_ctzll(b)];
        total += row_sum;
    }
    return total;
}

}  // namespace

const KernelSet& scalar() {
    static const KernelSet set{
        "scalar",
        support_count_scalar,
        support_count2_scalar,
        cover_weight_sum_scalar,
        pattern_weight_sum_scalar,
    };
    return set;
}

}  // namespace patlab::kernels
