// AVX2 variants of the mining kernels. Built only on x86-64; this translation
// unit is compiled with -mavx2 and must not be entered unless the dispatcher
// confirmed CPU support.

#if defined(__x86_64__)

#include <immintrin.h>

#include "patlab/kernels.hpp"

namespace patlab::kernels {
namespace {

inline std::uint64_t hsum_epi64(__m256i v) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

// All-ones lane where p is a subset of the transaction mask.
inline __m256i cover_mask(__m256i t, __m256i p) {
    return _mm256_cmpeq_epi64(_mm256_andnot_si256(t, p), _mm256_setzero_si256());
}

std::uint64_t support_count_avx2(const std::uint64_t* tx, std::size_t m, std::uint64_t p) {
    const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
    __m256i acc = _mm256_setzero_si256();
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(tx + j));
        acc = _mm256_sub_epi64(acc, cover_mask(t, vp));  // cover lanes are -1
    }
    std::uint64_t count = hsum_epi64(acc);
    for (; j < m; ++j) count += (p & ~tx[j]) == 0;
    return count;
}

void support_count2_avx2(const std::uint64_t* tx, std::size_t m, std::uint64_t p1,
                         std::uint64_t p2, std::uint64_t& c1, std::uint64_t& c2) {
    const __m256i vp1 = _mm256_set1_epi64x(static_cast<long long>(p1));
    const __m256i vp2 = _mm256_set1_epi64x(static_cast<long long>(p2));
    __m256i acc1 = _mm256_setzero_si256();
    __m256i acc2 = _mm256_setzero_si256();
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(tx + j));
        acc1 = _mm256_sub_epi64(acc1, cover_mask(t, vp1));
        acc2 = _mm256_sub_epi64(acc2, cover_mask(t, vp2));
    }
    std::uint64_t a = hsum_epi64(acc1);
    std::uint64_t b = hsum_epi64(acc2);
    for (; j < m; ++j) {
        const std::uint64_t t = tx[j];
        a += (p1 & ~t) == 0;
        b += (p2 & ~t) == 0;
    }
    c1 = a;
    c2 = b;
}

std::uint64_t cover_weight_sum_avx2(const std::uint64_t* tx, const std::uint64_t* w,
                                    std::size_t m, std::uint64_t p) {
    const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
    __m256i acc = _mm256_setzero_si256();
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(tx + j));
        const __m256i wv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + j));
        acc = _mm256_add_epi64(acc, _mm256_and_si256(cover_mask(t, vp), wv));
    }
    std::uint64_t sum = hsum_epi64(acc);
    for (; j < m; ++j)
        if ((p & ~tx[j]) == 0) sum += w[j];
    return sum;
}

std::uint64_t pattern_weight_sum_avx2(const std::uint64_t* tx, const std::uint64_t* wmat,
                                      std::size_t m, std::size_t n, std::uint64_t p) {
    const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
    const long long ns = static_cast<long long>(n);
    const __m256i row_offsets = _mm256_set_epi64x(3 * ns, 2 * ns, ns, 0);
    __m256i acc = _mm256_setzero_si256();
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(tx + j));
        const __m256i cov = cover_mask(t, vp);
        if (_mm256_testz_si256(cov, cov)) continue;  // nothing covered, skip the gathers
        const long long* base = reinterpret_cast<const long long*>(wmat + j * n);
        __m256i row_sum = _mm256_setzero_si256();
        for (std::uint64_t b = p; b != 0; b &= b - 1) {
            const int i = __builtin_ctzll(b);
            row_sum = _mm256_add_epi64(row_sum,
                                       _mm256_i64gather_epi64(base + i, row_offsets, 8));
        }
        acc = _mm256_add_epi64(acc, _mm256_and_si256(row_sum, cov));
    }
    std::uint64_t total = hsum_epi64(acc);
    for (; j < m; ++j) {
        if ((p & ~tx[j]) != 0) continue;
        const std::uint64_t* row = wmat + j * n;
        for (std::uint64_t b = p; b != 0; b &= b - 1)
            total += row[__builtin_ctzll(b)];
    }
    return total;
}

}  // namespace

const KernelSet* avx2_impl() {
    static const KernelSet set{
        "avx2",
        support_count_avx2,
        support_count2_avx2,
        cover_weight_sum_avx2,
        pattern_weight_sum_avx2,
    };
    return &set;
}

}  // namespace patlab::kernels

#endif  // __x86_64__
