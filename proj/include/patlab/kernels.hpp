#pragma once

#include <cstddef>
#include <cstdint>

namespace patlab::kernels {

// Inner loops shared by every mining operation. Transactions are packed
// one u64 mask each; a pattern p covers transaction t iff (p & ~t) == 0.
// Weight sums never overflow: QuantitativeDataset rejects inputs whose
// grand weight total does not fit in u64, and every partial sum is bounded
// by that total.

/// Number of transactions containing `p`.
using SupportCountFn = std::uint64_t (*)(const std::uint64_t* tx, std::size_t m, std::uint64_t p);

/// Counts for two patterns in one pass (rule search: body and body|head).
using SupportCount2Fn = void (*)(const std::uint64_t* tx, std::size_t m, std::uint64_t p1,
                                 std::uint64_t p2, std::uint64_t& c1, std::uint64_t& c2);

/// Sum of w[j] over transactions containing `p` (cover-restricted weight mass).
using CoverWeightSumFn = std::uint64_t (*)(const std::uint64_t* tx, const std::uint64_t* w,
                                           std::size_t m, std::uint64_t p);

/// Sum over transactions containing `p` of sum_{i in p} wmat[j*n + i]
/// (the utility of `p`, given wmat[j*n+i] = cardinality(j,i) * item_utility(i)).
using PatternWeightSumFn = std::uint64_t (*)(const std::uint64_t* tx, const std::uint64_t* wmat,
                                             std::size_t m, std::size_t n, std::uint64_t p);

struct KernelSet {
    const char* name;
    SupportCountFn support_count;
    SupportCount2Fn support_count2;
    CoverWeightSumFn cover_weight_sum;
    PatternWeightSumFn pattern_weight_sum;
};

/// Portable reference kernels; always available.
const KernelSet& scalar();

/// AVX2 kernels, or nullptr when the build or the CPU lacks them.
const KernelSet* avx2();

/// Kernels selected for this process: the widest supported variant, unless
/// the PATLAB_KERNELS environment variable ("scalar" or "avx2") overrides.
const KernelSet& active();

}  // namespace patlab::kernels
