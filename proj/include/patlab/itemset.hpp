#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "patlab/error.hpp"

namespace patlab {

using ItemId = std::uint32_t;

/// Universes are capped at one machine word so that subset tests, covers and
/// the exhaustive searches all run on single-u64 masks. Every instance class
/// handled by this lab fits comfortably.
constexpr std::size_t kMaxUniverseSize = 64;

/// Set of item ids as a bit mask. Bit i set <=> item i is a member.
class Itemset {
public:
    constexpr Itemset() = default;
    constexpr explicit Itemset(std::uint64_t bits) : bits_(bits) {}

    static constexpr Itemset single(ItemId i) { return Itemset(std::uint64_t{1} << i); }

    static Itemset of(std::initializer_list<ItemId> ids) {
        Itemset s;
        for (ItemId i : ids) s = s.with(i);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    std::size_t size() const { return static_cast<std::size_t>(__builtin_popcountll(bits_)); }

    constexpr bool contains(ItemId i) const { return (bits_ >> i) & 1u; }
    constexpr bool subset_of(Itemset other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Itemset other) const { return (bits_ & other.bits_) != 0; }

    constexpr Itemset with(ItemId i) const { return Itemset(bits_ | (std::uint64_t{1} << i)); }
    constexpr Itemset without(ItemId i) const { return Itemset(bits_ & ~(std::uint64_t{1} << i)); }

    friend constexpr Itemset operator|(Itemset a, Itemset b) { return Itemset(a.bits_ | b.bits_); }
    friend constexpr Itemset operator&(Itemset a, Itemset b) { return Itemset(a.bits_ & b.bits_); }
    /// Set difference a \ b.
    friend constexpr Itemset operator-(Itemset a, Itemset b) { return Itemset(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(Itemset a, Itemset b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(Itemset a, Itemset b) { return a.bits_ != b.bits_; }

    /// Member ids in ascending order.
    std::vector<ItemId> ids() const {
        std::vector<ItemId> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<ItemId>(__builtin_ctzll(b)));
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Interned item tokens with dense ids 0..n-1.
class ItemUniverse {
public:
    /// Tokens must be unique, non-empty and whitespace-free; at most 64.
    explicit ItemUniverse(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(ItemId i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<ItemId> find(std::string_view token) const;
    /// Throws UniverseMismatchError for unknown tokens.
    ItemId id_of(std::string_view token) const;

    /// Mask with every item set.
    Itemset all() const { return all_; }
    bool contains_set(Itemset s) const { return s.subset_of(all_); }

    /// "{A, C}" with tokens in id order; "{}" for the empty set.
    std::string format(Itemset s) const;

    friend bool operator==(const ItemUniverse& a, const ItemUniverse& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, ItemId> index_;
    Itemset all_;
};

/// Control value for the subset walks below.
enum class Walk {
    descend,  // keep this pattern's subtree
    prune,    // skip all strict supersets reachable from here
    stop,     // abort the whole walk
};

/// Visits every non-empty subset of `allowed` in canonical (lexicographic by
/// ascending id sequence) order: {a}, {a,b}, {a,b,c}, ..., {a,c}, ..., {b}, ...
/// Children of P extend P with ids larger than max(P), so Walk::prune cuts
/// exactly the strict supersets of the current pattern within the subtree.
/// Returns false when the visitor stopped the walk.
template <typename Fn>
bool for_each_subset_lex(Itemset allowed, Fn&& fn) {
    const std::vector<ItemId> ids = allowed.ids();
    // Explicit stack of (pattern, next index to try) keeps the walk iterative.
    struct Frame {
        Itemset pattern;
        std::size_t next;
    };
    std::vector<Frame> stack;
    stack.push_back({Itemset{}, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next >= ids.size()) {
            stack.pop_back();
            continue;
        }
        const ItemId id = ids[f.next];
        ++f.next;
        const Itemset child = f.pattern.with(id);
        const std::size_t child_next = f.next;
        switch (fn(child)) {
            case Walk::descend:
                stack.push_back({child, child_next});
                break;
            case Walk::prune:
                break;
            case Walk::stop:
                return false;
        }
    }
    return true;
}

/// Visits the strict supersets of `base` within `universe`, ordered by number
/// of added items and lexicographically inside each size class. Small
/// counterexample witnesses are therefore found first. `fn` returns true to
/// stop; the function returns false in that case.
template <typename Fn>
bool for_each_strict_superset(Itemset base, Itemset universe, Fn&& fn) {
    const std::vector<ItemId> free_ids = (universe - base).ids();
    const std::size_t f = free_ids.size();
    std::vector<std::size_t> pick;
    for (std::size_t k = 1; k <= f; ++k) {
        pick.assign(k, 0);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            Itemset candidate = base;
            for (std::size_t i : pick) candidate = candidate.with(free_ids[i]);
            if (fn(candidate)) return false;
            // next k-combination in lexicographic order
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == f - k + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return true;
}

}  // namespace patlab
