#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "patlab/dataset.hpp"

namespace patlab {

/// Transactions with per-item cardinalities and a per-item utility function.
/// Membership is derived from the cardinalities: item i is in transaction j
/// iff cardinality(j, i) > 0. All sums are exact; construction rejects inputs
/// whose total weight mass does not fit in 64 bits, which bounds every
/// pattern utility computed later.
class QuantitativeDataset {
public:
    QuantitativeDataset(ItemUniverse universe,
                        std::vector<std::vector<std::uint64_t>> cardinalities,
                        std::vector<std::uint64_t> item_utilities);

    const TransactionDataset& base() const { return base_; }
    const ItemUniverse& universe() const { return base_.universe(); }
    std::size_t transaction_count() const { return base_.transaction_count(); }

    std::uint64_t cardinality(std::size_t j, ItemId i) const;
    std::uint64_t item_utility(ItemId i) const { return item_utils_.at(i); }
    const std::vector<std::uint64_t>& item_utilities() const { return item_utils_; }

    /// cardinality(j, i) * item_utility(i), row-major (transaction-major).
    const std::vector<std::uint64_t>& weights() const { return weights_; }
    /// Total weight of one transaction (sum of its weight row).
    const std::vector<std::uint64_t>& transaction_utilities() const { return tx_utils_; }

    friend bool operator==(const QuantitativeDataset& a, const QuantitativeDataset& b) {
        return a.base_ == b.base_ && a.cards_ == b.cards_ && a.item_utils_ == b.item_utils_;
    }

private:
    TransactionDataset base_;
    std::vector<std::uint64_t> cards_;  // m x n row-major
    std::vector<std::uint64_t> item_utils_;
    std::vector<std::uint64_t> weights_;
    std::vector<std::uint64_t> tx_utils_;
};

/// 0 when the pattern is not contained in transaction j, otherwise the sum of
/// cardinality * utility over the pattern's items.
std::uint64_t utility_in_transaction(const QuantitativeDataset& qd, Itemset pattern,
                                     std::size_t j);

/// Sum of utility_in_transaction over the pattern's cover (bag multiplicity).
std::uint64_t utility(const QuantitativeDataset& qd, Itemset pattern);

bool is_high_utility(const QuantitativeDataset& qd, Itemset pattern, std::uint64_t ut);

/// Transaction-weighted utility of an item: total transaction utility over
/// cover({i}). Upper-bounds the utility of every pattern containing i.
std::uint64_t transaction_weighted_utility(const QuantitativeDataset& qd, ItemId i);

/// First pattern in canonical order with utility >= ut, or nullopt. Utility is
/// not anti-monotone, so the search walks the whole subset tree; with `prune`
/// it cuts subtrees via the transaction-weighted utility bound (sound: the
/// bound dominates every superset's utility), which never changes the result.
std::optional<Itemset> find_high_utility_itemset(const QuantitativeDataset& qd, std::uint64_t ut,
                                                 bool prune = true);

/// All patterns with utility >= ut in canonical order.
std::vector<Itemset> enumerate_high_utility(const QuantitativeDataset& qd, std::uint64_t ut,
                                            bool prune = true);

/// Transaction lines are `tok:qty` pairs with qty >= 1 ('-' for an empty
/// transaction); the companion utility file has one `tok<TAB>utility` line per
/// universe item.
QuantitativeDataset parse_quantitative_text(const std::string& dataset_text,
                                            const std::string& dataset_origin,
                                            const std::string& utility_text,
                                            const std::string& utility_origin);
std::string serialize_quantitative(const QuantitativeDataset& qd);
std::string serialize_utilities(const QuantitativeDataset& qd);

QuantitativeDataset read_quantitative(const std::filesystem::path& dataset_path,
                                      const std::filesystem::path& utility_path);
void write_quantitative(const QuantitativeDataset& qd, const std::filesystem::path& dataset_path,
                        const std::filesystem::path& utility_path);

}  // namespace patlab
