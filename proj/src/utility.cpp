#include "patlab/utility.hpp"

#include <algorithm>
#include <sstream>

#include "patlab/kernels.hpp"

namespace patlab {

namespace {

std::vector<Itemset> memberships_from_cards(const std::vector<std::vector<std::uint64_t>>& cards) {
    std::vector<Itemset> tx;
    tx.reserve(cards.size());
    for (const auto& row : cards) {
        Itemset t;
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] > 0) t = t.with(static_cast<ItemId>(i));
        tx.push_back(t);
    }
    return tx;
}

}  // namespace

QuantitativeDataset::QuantitativeDataset(ItemUniverse universe,
                                         std::vector<std::vector<std::uint64_t>> cardinalities,
                                         std::vector<std::uint64_t> item_utilities)
    : base_(std::move(universe), memberships_from_cards(cardinalities)),
      item_utils_(std::move(item_utilities)) {
    const std::size_t n = base_.universe().size();
    if (item_utils_.size() != n)
        throw Error("utility vector does not cover the whole universe");
    const std::size_t m = cardinalities.size();
    cards_.reserve(m * n);
    weights_.reserve(m * n);
    tx_utils_.reserve(m);
    std::uint64_t grand_total = 0;
    for (std::size_t j = 0; j < m; ++j) {
        const auto& row = cardinalities[j];
        if (row.size() != n)
            throw Error("cardinality vector of transaction " + std::to_string(j + 1) +
                        " does not cover the whole universe");
        std::uint64_t tx_total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t v = row[i];
            const std::uint64_t u = item_utils_[i];
            std::uint64_t w;
            if (__builtin_mul_overflow(v, u, &w) ||
                __builtin_add_overflow(tx_total, w, &tx_total) ||
                __builtin_add_overflow(grand_total, w, &grand_total))
                throw Error("utility totals overflow 64 bits");
            cards_.push_back(v);
            weights_.push_back(w);
        }
        tx_utils_.push_back(tx_total);
    }
}

std::uint64_t QuantitativeDataset::cardinality(std::size_t j, ItemId i) const {
    const std::size_t n = universe().size();
    if (j >= transaction_count() || i >= n) throw Error("cardinality index out of range");
    return cards_[j * n + i];
}

std::uint64_t utility_in_transaction(const QuantitativeDataset& qd, Itemset pattern,
                                     std::size_t j) {
    detail::require_pattern(qd.universe(), pattern);
    if (j >= qd.transaction_count()) throw Error("transaction index out of range");
    if (!pattern.subset_of(qd.base().transaction(j))) return 0;
    const std::size_t n = qd.universe().size();
    const std::uint64_t* row = qd.weights().data() + j * n;
    std::uint64_t sum = 0;
    for (ItemId i : pattern.ids()) sum += row[i];
    return sum;
}

std::uint64_t utility(const QuantitativeDataset& qd, Itemset pattern) {
    detail::require_pattern(qd.universe(), pattern);
    const auto& tx = qd.base().transaction_bits();
    return kernels::active().pattern_weight_sum(tx.data(), qd.weights().data(), tx.size(),
                                                qd.universe().size(), pattern.bits());
}

bool is_high_utility(const QuantitativeDataset& qd, Itemset pattern, std::uint64_t ut) {
    return utility(qd, pattern) >= ut;
}

std::uint64_t transaction_weighted_utility(const QuantitativeDataset& qd, ItemId i) {
    if (i >= qd.universe().size()) throw UniverseMismatchError("item id outside the universe");
    const auto& tx = qd.base().transaction_bits();
    return kernels::active().cover_weight_sum(tx.data(), qd.transaction_utilities().data(),
                                              tx.size(), Itemset::single(i).bits());
}

namespace {

// Shared walk for find/enumerate. Visits qualifying patterns in canonical
// order; stops after the first when `first_only`.
template <typename Sink>
void high_utility_walk(const QuantitativeDataset& qd, std::uint64_t ut, bool prune, Sink&& sink) {
    const auto& k = kernels::active();
    const auto& tx = qd.base().transaction_bits();
    const std::size_t n = qd.universe().size();

    Itemset candidates = qd.universe().all();
    if (prune) {
        // Items whose transaction-weighted utility misses the threshold cannot
        // appear in any qualifying pattern.
        for (ItemId i = 0; i < n; ++i)
            if (transaction_weighted_utility(qd, i) < ut) candidates = candidates.without(i);
    }

    for_each_subset_lex(candidates, [&](Itemset p) {
        const std::uint64_t u =
            k.pattern_weight_sum(tx.data(), qd.weights().data(), tx.size(), n, p.bits());
        if (u >= ut && !sink(p)) return Walk::stop;
        if (prune) {
            // Supersets of p are bounded by the transaction utility mass of
            // p's cover; below the threshold the whole subtree is dead.
            const std::uint64_t bound = k.cover_weight_sum(
                tx.data(), qd.transaction_utilities().data(), tx.size(), p.bits());
            if (bound < ut) return Walk::prune;
        }
        return Walk::descend;
    });
}

}  // namespace

std::optional<Itemset> find_high_utility_itemset(const QuantitativeDataset& qd, std::uint64_t ut,
                                                 bool prune) {
    std::optional<Itemset> found;
    high_utility_walk(qd, ut, prune, [&](Itemset p) {
        found = p;
        return false;
    });
    return found;
}

std::vector<Itemset> enumerate_high_utility(const QuantitativeDataset& qd, std::uint64_t ut,
                                            bool prune) {
    std::vector<Itemset> out;
    high_utility_walk(qd, ut, prune, [&](Itemset p) {
        out.push_back(p);
        return true;
    });
    return out;
}

namespace {

std::uint64_t parse_qty(const std::string& s, const std::string& origin, std::size_t lineno) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(origin, lineno, "invalid quantity '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw ParseError(origin, lineno, "invalid quantity '" + s + "'");
    }
}

}  // namespace

QuantitativeDataset parse_quantitative_text(const std::string& dataset_text,
                                            const std::string& dataset_origin,
                                            const std::string& utility_text,
                                            const std::string& utility_origin) {
    std::istringstream in(dataset_text);
    std::string line;
    std::size_t lineno = 0;
    std::optional<ItemUniverse> universe;
    std::vector<std::vector<std::uint64_t>> cards;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.front() == '#') continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            throw ParseError(dataset_origin, lineno, "blank line; use '-' for an empty transaction");
        std::istringstream fields(line);
        std::string tok;
        if (!universe) {
            fields >> tok;
            if (tok != "items:")
                throw ParseError(dataset_origin, lineno, "expected 'items: tok1 tok2 ...' header");
            std::vector<std::string> names;
            while (fields >> tok) names.push_back(tok);
            try {
                universe.emplace(std::move(names));
            } catch (const Error& e) {
                throw ParseError(dataset_origin, lineno, e.what());
            }
            continue;
        }
        std::vector<std::uint64_t> row(universe->size(), 0);
        bool explicit_empty = false;
        while (fields >> tok) {
            if (tok == "-") {
                explicit_empty = true;
                continue;
            }
            const auto colon = tok.find(':');
            if (colon == std::string::npos)
                throw ParseError(dataset_origin, lineno, "expected tok:qty, got '" + tok + "'");
            const std::string name = tok.substr(0, colon);
            auto id = universe->find(name);
            if (!id) throw ParseError(dataset_origin, lineno, "unknown item '" + name + "'");
            if (row[*id] != 0)
                throw ParseError(dataset_origin, lineno,
                                 "duplicate item '" + name + "' in transaction");
            const std::uint64_t qty = parse_qty(tok.substr(colon + 1), dataset_origin, lineno);
            if (qty == 0)
                throw ParseError(dataset_origin, lineno,
                                 "quantity must be >= 1 for '" + name + "'");
            row[*id] = qty;
        }
        if (explicit_empty && std::count(row.begin(), row.end(), 0) != std::ptrdiff_t(row.size()))
            throw ParseError(dataset_origin, lineno, "'-' cannot be mixed with items");
        cards.push_back(std::move(row));
    }
    if (!universe)
        throw ParseError(dataset_origin, lineno == 0 ? 1 : lineno, "missing 'items:' header");

    std::vector<std::optional<std::uint64_t>> utils(universe->size());
    std::istringstream uin(utility_text);
    lineno = 0;
    while (std::getline(uin, line)) {
        ++lineno;
        if (line.empty() || line.front() == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError(utility_origin, lineno, "expected 'tok<TAB>utility'");
        const std::string name = line.substr(0, tab);
        auto id = universe->find(name);
        if (!id) throw ParseError(utility_origin, lineno, "unknown item '" + name + "'");
        if (utils[*id].has_value())
            throw ParseError(utility_origin, lineno, "duplicate utility for '" + name + "'");
        utils[*id] = parse_qty(line.substr(tab + 1), utility_origin, lineno);
    }
    std::vector<std::uint64_t> item_utils;
    item_utils.reserve(utils.size());
    for (std::size_t i = 0; i < utils.size(); ++i) {
        if (!utils[i])
            throw Error(utility_origin + ": no utility for item '" + universe->name(ItemId(i)) +
                        "'");
        item_utils.push_back(*utils[i]);
    }
    return QuantitativeDataset(std::move(*universe), std::move(cards), std::move(item_utils));
}

std::string serialize_quantitative(const QuantitativeDataset& qd) {
    std::string out = "items:";
    for (const auto& name : qd.universe().names()) {
        out += ' ';
        out += name;
    }
    out += '\n';
    for (std::size_t j = 0; j < qd.transaction_count(); ++j) {
        const Itemset t = qd.base().transaction(j);
        if (t.empty()) {
            out += "-\n";
            continue;
        }
        bool first = true;
        for (ItemId i : t.ids()) {
            if (!first) out += ' ';
            out += qd.universe().name(i) + ":" + std::to_string(qd.cardinality(j, i));
            first = false;
        }
        out += '\n';
    }
    return out;
}

std::string serialize_utilities(const QuantitativeDataset& qd) {
    std::string out;
    for (std::size_t i = 0; i < qd.universe().size(); ++i)
        out += qd.universe().name(ItemId(i)) + "\t" +
               std::to_string(qd.item_utility(ItemId(i))) + "\n";
    return out;
}

QuantitativeDataset read_quantitative(const std::filesystem::path& dataset_path,
                                      const std::filesystem::path& utility_path) {
    return parse_quantitative_text(detail::slurp_file(dataset_path), dataset_path.string(),
                                   detail::slurp_file(utility_path), utility_path.string());
}

void write_quantitative(const QuantitativeDataset& qd, const std::filesystem::path& dataset_path,
                        const std::filesystem::path& utility_path) {
    detail::spit_file(dataset_path, serialize_quantitative(qd));
    detail::spit_file(utility_path, serialize_utilities(qd));
}

}  // namespace patlab
