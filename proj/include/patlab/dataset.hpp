#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "patlab/itemset.hpp"

namespace patlab {

/// Bag of transactions over an interned item universe. Transactions keep
/// insertion order and multiplicity; duplicates count separately in every
/// frequency. Immutable after construction.
class TransactionDataset {
public:
    TransactionDataset(ItemUniverse universe, std::vector<Itemset> transactions);

    const ItemUniverse& universe() const { return universe_; }
    std::size_t transaction_count() const { return tx_.size(); }
    Itemset transaction(std::size_t j) const { return Itemset(tx_.at(j)); }

    /// Packed masks for the kernels.
    const std::vector<std::uint64_t>& transaction_bits() const { return tx_; }

    /// Display name "t<j+1>" matching the 1-based convention of the examples.
    static std::string transaction_label(std::size_t j) { return "t" + std::to_string(j + 1); }

    friend bool operator==(const TransactionDataset& a, const TransactionDataset& b) {
        return a.universe_ == b.universe_ && a.tx_ == b.tx_;
    }

private:
    ItemUniverse universe_;
    std::vector<std::uint64_t> tx_;
};

/// Indices (in order, with multiplicity) of the transactions containing
/// `pattern`. The pattern must be non-empty and inside the universe.
std::vector<std::size_t> cover(const TransactionDataset& ds, Itemset pattern);

/// |cover(pattern)|.
std::uint64_t frequency(const TransactionDataset& ds, Itemset pattern);

bool is_frequent(const TransactionDataset& ds, Itemset pattern, std::uint64_t s);

/// All non-empty itemsets with frequency >= s, in canonical lexicographic
/// order. Prunes subtrees via anti-monotonicity of frequency. Requires s >= 1.
std::vector<Itemset> enumerate_frequent(const TransactionDataset& ds, std::uint64_t s);

/// Text format:
///   # comment lines allowed anywhere
///   items: A B C
///   A C
///   -          <- empty transaction
/// Blank lines and duplicate tokens within a transaction are parse errors.
TransactionDataset parse_dataset_text(const std::string& text, const std::string& origin);
std::string serialize_dataset(const TransactionDataset& ds);

TransactionDataset read_dataset(const std::filesystem::path& path);
void write_dataset(const TransactionDataset& ds, const std::filesystem::path& path);

namespace detail {
/// Shared precondition check: throws on empty patterns or ids outside the
/// universe.
void require_pattern(const ItemUniverse& u, Itemset pattern);
/// Reads a whole file or throws Error with the path in the message.
std::string slurp_file(const std::filesystem::path& path);
/// Writes a whole file or throws Error with the path in the message.
void spit_file(const std::filesystem::path& path, const std::string& content);
}  // namespace detail

}  // namespace patlab
