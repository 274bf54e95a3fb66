#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "patlab/kernels.hpp"

using namespace patlab;

namespace {

// Plain reference loop, written out again here so the scalar kernels are
// checked against something that never shared code with them.
std::uint64_t ref_support(const std::vector<std::uint64_t>& tx, std::uint64_t p) {
    std::uint64_t c = 0;
    for (std::uint64_t t : tx)
        if ((p & t) == p) ++c;
    return c;
}

std::uint64_t ref_cover_weight(const std::vector<std::uint64_t>& tx,
                               const std::vector<std::uint64_t>& w, std::uint64_t p) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < tx.size(); ++j)
        if ((p & tx[j]) == p) s += w[j];
    return s;
}

std::uint64_t ref_pattern_weight(const std::vector<std::uint64_t>& tx,
                                 const std::vector<std::uint64_t>& wmat, std::size_t n,
                                 std::uint64_t p) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < tx.size(); ++j) {
        if ((p & tx[j]) != p) continue;
        for (std::size_t i = 0; i < n; ++i)
            if ((p >> i) & 1) s += wmat[j * n + i];
    }
    return s;
}

struct Case {
    std::size_t n;
    std::vector<std::uint64_t> tx;
    std::vector<std::uint64_t> w;
    std::vector<std::uint64_t> wmat;
    std::uint64_t p1, p2;
};

Case random_case(gen::Rng& rng) {
    Case c;
    c.n = rng.between(1, 12);
    const std::size_t m = rng.between(0, 67);  // crosses the 4-lane boundaries
    const std::uint64_t mask = (std::uint64_t{1} << c.n) - 1;
    for (std::size_t j = 0; j < m; ++j) {
        c.tx.push_back(rng.next() & mask);
        c.w.push_back(rng.between(0, 1000));
        for (std::size_t i = 0; i < c.n; ++i) c.wmat.push_back(rng.between(0, 1000));
    }
    c.p1 = rng.next() & mask;
    c.p2 = (c.p1 | rng.next()) & mask;
    return c;
}

void check_set_against_reference(const kernels::KernelSet& k) {
    gen::Rng rng{20260808};
    for (int iter = 0; iter < 300; ++iter) {
        const Case c = random_case(rng);
        const std::size_t m = c.tx.size();
        CHECK(k.support_count(c.tx.data(), m, c.p1) == ref_support(c.tx, c.p1));
        std::uint64_t c1 = 0, c2 = 0;
        k.support_count2(c.tx.data(), m, c.p1, c.p2, c1, c2);
        CHECK(c1 == ref_support(c.tx, c.p1));
        CHECK(c2 == ref_support(c.tx, c.p2));
        CHECK(k.cover_weight_sum(c.tx.data(), c.w.data(), m, c.p1) ==
              ref_cover_weight(c.tx, c.w, c.p1));
        CHECK(k.pattern_weight_sum(c.tx.data(), c.wmat.data(), m, c.n, c.p1) ==
              ref_pattern_weight(c.tx, c.wmat, c.n, c.p1));
    }
}

}  // namespace

TEST_CASE("scalar kernels match the reference loops") {
    check_set_against_reference(kernels::scalar());
}

TEST_CASE("avx2 kernels match the reference loops") {
    const kernels::KernelSet* v = kernels::avx2();
    if (v == nullptr) {
        MESSAGE("AVX2 unavailable on this host; variant not exercised");
        return;
    }
    check_set_against_reference(*v);
}

TEST_CASE("avx2 and scalar agree on identical inputs") {
    const kernels::KernelSet* v = kernels::avx2();
    if (v == nullptr) return;
    const kernels::KernelSet& s = kernels::scalar();
    gen::Rng rng{99};
    for (int iter = 0; iter < 300; ++iter) {
        const Case c = random_case(rng);
        const std::size_t m = c.tx.size();
        CHECK(v->support_count(c.tx.data(), m, c.p1) == s.support_count(c.tx.data(), m, c.p1));
        CHECK(v->cover_weight_sum(c.tx.data(), c.w.data(), m, c.p2) ==
              s.cover_weight_sum(c.tx.data(), c.w.data(), m, c.p2));
        CHECK(v->pattern_weight_sum(c.tx.data(), c.wmat.data(), m, c.n, c.p2) ==
              s.pattern_weight_sum(c.tx.data(), c.wmat.data(), m, c.n, c.p2));
    }
}

TEST_CASE("active kernel set is one of the known variants") {
    const kernels::KernelSet& a = kernels::active();
    const bool known = std::string(a.name) == "scalar" || std::string(a.name) == "avx2";
    CHECK(known);
    MESSAGE("active kernels: ", a.name);
}

TEST_CASE("empty transaction list") {
    const kernels::KernelSet& s = kernels::scalar();
    CHECK(s.support_count(nullptr, 0, 0x5) == 0);
    std::uint64_t a = 7, b = 7;
    s.support_count2(nullptr, 0, 1, 2, a, b);
    CHECK(a == 0);
    CHECK(b == 0);
}
