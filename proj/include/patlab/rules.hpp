#pragma once

#include <optional>
#include <string>

#include "patlab/dataset.hpp"
#include "patlab/rational.hpp"

namespace patlab {

/// Implication body -> head with disjoint sides and a non-empty head.
/// The body may be empty; cover of the empty body is the whole dataset.
struct AssociationRule {
    AssociationRule(Itemset body, Itemset head);

    Itemset body;
    Itemset head;
};

/// freq(body | head) / freq(body), exact. Throws UndefinedConfidenceError
/// when the body covers no transaction.
Rational confidence(const TransactionDataset& ds, const AssociationRule& rule);

/// confidence >= c, compared exactly. c must lie in [0, 1].
bool is_confident(const TransactionDataset& ds, const AssociationRule& rule, const Rational& c);

/// Searches for a rule with `z` in the head and confidence >= c. Bodies are
/// scanned in canonical lexicographic order (empty body first) over the items
/// other than z; for a fixed body the head {z} maximizes confidence among
/// heads containing z, so it decides existence and is the head returned.
/// Zero-frequency bodies are skipped (their confidence is undefined).
/// This is an exhaustive search; instance sizes are the caller's problem.
std::optional<AssociationRule> find_confident_rule_with_head_item(const TransactionDataset& ds,
                                                                  ItemId z, const Rational& c);

/// "{B} -> {C} @ conf 3/4" with tokens in id order.
std::string format_rule(const ItemUniverse& u, const AssociationRule& rule, const Rational& conf);

}  // namespace patlab
