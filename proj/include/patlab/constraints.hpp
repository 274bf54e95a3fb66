#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "patlab/dataset.hpp"

namespace patlab {

/// freq(P) >= s
struct MinFreq {
    std::uint64_t s;
};

/// |P & scope| != k
struct CardNeq {
    Itemset scope;
    std::uint64_t k;
};

/// (P & left == {}) or (P & right != {})
struct OrEmptyNonempty {
    Itemset left;
    Itemset right;
};

using ConstraintTerm = std::variant<MinFreq, CardNeq, OrEmptyNonempty>;

/// Conjunction of terms, evaluated in order. The constraint language is the
/// minimal closed set the lab needs; it is not a general predicate DSL.
struct ConstraintSet {
    std::vector<ConstraintTerm> terms;
};

/// True iff every term holds for the pattern.
bool satisfies(const TransactionDataset& ds, Itemset pattern, const ConstraintSet& c);

/// Every non-empty satisfying itemset in canonical order. Exhaustive over the
/// subset tree, pruning only on the frequency terms (the one anti-monotone
/// piece of the language). Refuses universes above `max_universe` items so a
/// typo cannot wedge the process.
std::vector<Itemset> theory(const TransactionDataset& ds, const ConstraintSet& c,
                            std::size_t max_universe = 24);

enum class BorderStatus {
    not_in_theory,  // the pattern itself fails the constraints
    no,
    yes,
};

struct BorderCheck {
    BorderStatus status;
    /// For status == no: the witness superset (minimum added items, then
    /// lexicographic).
    std::optional<Itemset> counterexample;

    bool is(BorderStatus s) const { return status == s; }
};

/// Maximal: in the theory with no strict superset in the theory. The superset
/// scan is exhaustive over all 2^(n-|P|) - 1 candidates; no shortcut exists
/// in general. Patterns outside the theory get the distinguished
/// not_in_theory status rather than a bare "no".
BorderCheck check_maximal(const TransactionDataset& ds, Itemset pattern, const ConstraintSet& c);

/// Closed: in the theory with no strict superset in the theory of equal
/// frequency.
BorderCheck check_closed(const TransactionDataset& ds, Itemset pattern, const ConstraintSet& c);

/// Theory members passing check_maximal / check_closed, canonical order.
std::vector<Itemset> enumerate_maximal(const TransactionDataset& ds, const ConstraintSet& c);
std::vector<Itemset> enumerate_closed(const TransactionDataset& ds, const ConstraintSet& c);

/// One term per line, s-expression style:
///   (minfreq 2)
///   (card-neq (pos1 neg1) 2)
///   (or-empty-nonempty (pos1 neg1) (cl1 pos1))
/// Tokens must belong to the universe.
ConstraintSet parse_constraints_text(const std::string& text, const std::string& origin,
                                     const ItemUniverse& u);
std::string serialize_constraints(const ConstraintSet& c, const ItemUniverse& u);

ConstraintSet read_constraints(const std::filesystem::path& path, const ItemUniverse& u);
void write_constraints(const ConstraintSet& c, const ItemUniverse& u,
                       const std::filesystem::path& path);

}  // namespace patlab
