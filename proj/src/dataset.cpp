#include "patlab/dataset.hpp"

#include <fstream>
#include <sstream>

#include "patlab/kernels.hpp"

namespace patlab {

TransactionDataset::TransactionDataset(ItemUniverse universe, std::vector<Itemset> transactions)
    : universe_(std::move(universe)) {
    tx_.reserve(transactions.size());
    for (Itemset t : transactions) {
        if (!universe_.contains_set(t))
            throw UniverseMismatchError("transaction contains items outside the universe");
        tx_.push_back(t.bits());
    }
}

namespace detail {

void require_pattern(const ItemUniverse& u, Itemset pattern) {
    if (pattern.empty()) throw Error("pattern must be non-empty");
    if (!u.contains_set(pattern))
        throw UniverseMismatchError("pattern contains items outside the universe");
}

std::string slurp_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
    if (!out) throw Error("write failed for " + path.string());
}

}  // namespace detail

std::vector<std::size_t> cover(const TransactionDataset& ds, Itemset pattern) {
    detail::require_pattern(ds.universe(), pattern);
    std::vector<std::size_t> out;
    const auto& tx = ds.transaction_bits();
    for (std::size_t j = 0; j < tx.size(); ++j)
        if ((pattern.bits() & ~tx[j]) == 0) out.push_back(j);
    return out;
}

std::uint64_t frequency(const TransactionDataset& ds, Itemset pattern) {
    detail::require_pattern(ds.universe(), pattern);
    const auto& tx = ds.transaction_bits();
    return kernels::active().support_count(tx.data(), tx.size(), pattern.bits());
}

bool is_frequent(const TransactionDataset& ds, Itemset pattern, std::uint64_t s) {
    return frequency(ds, pattern) >= s;
}

std::vector<Itemset> enumerate_frequent(const TransactionDataset& ds, std::uint64_t s) {
    if (s < 1) throw Error("enumerate_frequent requires s >= 1");
    std::vector<Itemset> out;
    const auto& tx = ds.transaction_bits();
    const auto& k = kernels::active();
    for_each_subset_lex(ds.universe().all(), [&](Itemset p) {
        // freq is anti-monotone: an infrequent pattern has no frequent superset.
        if (k.support_count(tx.data(), tx.size(), p.bits()) < s) return Walk::prune;
        out.push_back(p);
        return Walk::descend;
    });
    return out;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

TransactionDataset parse_dataset_text(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::optional<ItemUniverse> universe;
    std::vector<Itemset> transactions;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.front() == '#') continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            throw ParseError(origin, lineno, "blank line; use '-' for an empty transaction");
        if (!universe) {
            auto toks = split_ws(line);
            if (toks.empty() || toks.front() != "items:")
                throw ParseError(origin, lineno, "expected 'items: tok1 tok2 ...' header");
            toks.erase(toks.begin());
            try {
                universe.emplace(std::move(toks));
            } catch (const Error& e) {
                throw ParseError(origin, lineno, e.what());
            }
            continue;
        }
        auto toks = split_ws(line);
        if (toks.size() == 1 && toks.front() == "-") {
            transactions.push_back(Itemset{});
            continue;
        }
        Itemset t;
        for (const auto& tok : toks) {
            auto id = universe->find(tok);
            if (!id) throw ParseError(origin, lineno, "unknown item '" + tok + "'");
            if (t.contains(*id))
                throw ParseError(origin, lineno, "duplicate item '" + tok + "' in transaction");
            t = t.with(*id);
        }
        transactions.push_back(t);
    }
    if (!universe) throw ParseError(origin, lineno == 0 ? 1 : lineno, "missing 'items:' header");
    return TransactionDataset(std::move(*universe), std::move(transactions));
}

std::string serialize_dataset(const TransactionDataset& ds) {
    std::string out = "items:";
    for (const auto& name : ds.universe().names()) {
        out += ' ';
        out += name;
    }
    out += '\n';
    for (std::size_t j = 0; j < ds.transaction_count(); ++j) {
        const Itemset t = ds.transaction(j);
        if (t.empty()) {
            out += "-\n";
            continue;
        }
        bool first = true;
        for (ItemId i : t.ids()) {
            if (!first) out += ' ';
            out += ds.universe().name(i);
            first = false;
        }
        out += '\n';
    }
    return out;
}

TransactionDataset read_dataset(const std::filesystem::path& path) {
    return parse_dataset_text(detail::slurp_file(path), path.string());
}

void write_dataset(const TransactionDataset& ds, const std::filesystem::path& path) {
    detail::spit_file(path, serialize_dataset(ds));
}

}  // namespace patlab
