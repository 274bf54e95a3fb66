// Independent reference implementations used only by the tests. Everything
// here works on plain id vectors and explicit double loops, deliberately
// avoiding the bitmask kernels and walk helpers that the library uses, so a
// bug cannot cancel itself out.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "patlab/constraints.hpp"
#include "patlab/dataset.hpp"
#include "patlab/rational.hpp"
#include "patlab/utility.hpp"

namespace oracle {

using patlab::Itemset;

inline std::set<patlab::ItemId> to_set(Itemset s) {
    const auto ids = s.ids();
    return {ids.begin(), ids.end()};
}

inline bool naive_contains(const patlab::TransactionDataset& ds, std::size_t j, Itemset pattern) {
    const auto t = to_set(ds.transaction(j));
    for (patlab::ItemId i : pattern.ids())
        if (t.find(i) == t.end()) return false;
    return true;
}

inline std::vector<std::size_t> naive_cover(const patlab::TransactionDataset& ds,
                                            Itemset pattern) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < ds.transaction_count(); ++j)
        if (naive_contains(ds, j, pattern)) out.push_back(j);
    return out;
}

inline std::uint64_t naive_freq(const patlab::TransactionDataset& ds, Itemset pattern) {
    return naive_cover(ds, pattern).size();
}

/// All non-empty subsets of an n-item universe sorted in the canonical order
/// used by the library: lexicographic on the ascending id sequence.
inline std::vector<Itemset> all_patterns_canonical(std::size_t n) {
    std::vector<Itemset> out;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits)
        out.push_back(Itemset(bits));
    std::sort(out.begin(), out.end(), [](Itemset a, Itemset b) {
        const auto ia = a.ids(), ib = b.ids();
        return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
    });
    return out;
}

inline std::vector<Itemset> naive_frequent(const patlab::TransactionDataset& ds,
                                           std::uint64_t s) {
    std::vector<Itemset> out;
    for (Itemset p : all_patterns_canonical(ds.universe().size()))
        if (naive_freq(ds, p) >= s) out.push_back(p);
    return out;
}

inline std::uint64_t naive_utility_in_transaction(const patlab::QuantitativeDataset& qd,
                                                  Itemset pattern, std::size_t j) {
    if (!naive_contains(qd.base(), j, pattern)) return 0;
    std::uint64_t sum = 0;
    for (patlab::ItemId i : pattern.ids()) sum += qd.cardinality(j, i) * qd.item_utility(i);
    return sum;
}

inline std::uint64_t naive_utility(const patlab::QuantitativeDataset& qd, Itemset pattern) {
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < qd.transaction_count(); ++j)
        total += naive_utility_in_transaction(qd, pattern, j);
    return total;
}

inline std::vector<Itemset> naive_high_utility(const patlab::QuantitativeDataset& qd,
                                               std::uint64_t ut) {
    std::vector<Itemset> out;
    for (Itemset p : all_patterns_canonical(qd.universe().size()))
        if (naive_utility(qd, p) >= ut) out.push_back(p);
    return out;
}

inline std::size_t naive_intersection_size(Itemset a, Itemset b) {
    const auto sa = to_set(a);
    std::size_t count = 0;
    for (patlab::ItemId i : b.ids())
        if (sa.find(i) != sa.end()) ++count;
    return count;
}

inline bool naive_satisfies(const patlab::TransactionDataset& ds, Itemset p,
                            const patlab::ConstraintSet& c) {
    for (const auto& term : c.terms) {
        if (const auto* mf = std::get_if<patlab::MinFreq>(&term)) {
            if (naive_freq(ds, p) < mf->s) return false;
        } else if (const auto* cn = std::get_if<patlab::CardNeq>(&term)) {
            if (naive_intersection_size(p, cn->scope) == cn->k) return false;
        } else {
            const auto& oe = std::get<patlab::OrEmptyNonempty>(term);
            if (naive_intersection_size(p, oe.left) != 0 &&
                naive_intersection_size(p, oe.right) == 0)
                return false;
        }
    }
    return true;
}

inline std::vector<Itemset> naive_theory(const patlab::TransactionDataset& ds,
                                         const patlab::ConstraintSet& c) {
    std::vector<Itemset> out;
    for (Itemset p : all_patterns_canonical(ds.universe().size()))
        if (naive_satisfies(ds, p, c)) out.push_back(p);
    return out;
}

inline bool naive_strict_superset(Itemset q, Itemset p) {
    const auto sq = to_set(q);
    for (patlab::ItemId i : p.ids())
        if (sq.find(i) == sq.end()) return false;
    return sq.size() > to_set(p).size();
}

/// Maximality/closedness by filtering the full theory list, no superset walk.
inline bool naive_maximal(const patlab::TransactionDataset& ds, Itemset p,
                          const patlab::ConstraintSet& c) {
    if (!naive_satisfies(ds, p, c)) return false;
    for (Itemset q : naive_theory(ds, c))
        if (naive_strict_superset(q, p)) return false;
    return true;
}

inline bool naive_closed(const patlab::TransactionDataset& ds, Itemset p,
                         const patlab::ConstraintSet& c) {
    if (!naive_satisfies(ds, p, c)) return false;
    for (Itemset q : naive_theory(ds, c))
        if (naive_strict_superset(q, p) && naive_freq(ds, q) == naive_freq(ds, p)) return false;
    return true;
}

/// Existence of a confident rule with z in the head, by walking every
/// (body, head, out) partition of the items with z forced into the head.
/// Bodies of frequency zero are skipped: their confidence is undefined.
inline bool naive_exists_confident_rule(const patlab::TransactionDataset& ds, patlab::ItemId z,
                                        const patlab::Rational& c) {
    std::vector<patlab::ItemId> others;
    for (patlab::ItemId i = 0; i < ds.universe().size(); ++i)
        if (i != z) others.push_back(i);
    const std::size_t k = others.size();
    std::vector<int> state(k, 0);  // 0 = out, 1 = body, 2 = head
    while (true) {
        Itemset body, head = Itemset::single(z);
        for (std::size_t i = 0; i < k; ++i) {
            if (state[i] == 1) body = body.with(others[i]);
            if (state[i] == 2) head = head.with(others[i]);
        }
        const std::uint64_t fx =
            body.empty() ? ds.transaction_count() : naive_freq(ds, body);
        if (fx > 0) {
            std::uint64_t fxy = 0;
            for (std::size_t j = 0; j < ds.transaction_count(); ++j)
                if (naive_contains(ds, j, body) && naive_contains(ds, j, head)) ++fxy;
            using W = unsigned __int128;
            if (W(fxy) * c.den() >= W(c.num()) * fx) return true;
        }
        // next partition in ternary counting order
        std::size_t i = 0;
        while (i < k && state[i] == 2) state[i++] = 0;
        if (i == k) break;
        ++state[i];
    }
    return false;
}

}  // namespace oracle
