#include "patlab/itemset.hpp"

#include <cctype>

namespace patlab {

namespace {

bool has_whitespace(const std::string& s) {
    for (unsigned char c : s)
        if (std::isspace(c)) return true;
    return false;
}

}  // namespace

ItemUniverse::ItemUniverse(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxUniverseSize)
        throw Error("universe has " + std::to_string(names_.size()) +
                    " items; at most " + std::to_string(kMaxUniverseSize) + " are supported");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const std::string& tok = names_[i];
        if (tok.empty()) throw Error("empty item token");
        if (has_whitespace(tok)) throw Error("item token '" + tok + "' contains whitespace");
        if (!index_.emplace(tok, static_cast<ItemId>(i)).second)
            throw Error("duplicate item token '" + tok + "'");
    }
    all_ = names_.empty() ? Itemset{}
                          : Itemset(~std::uint64_t{0} >> (64 - names_.size()));
}

std::optional<ItemId> ItemUniverse::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ItemId ItemUniverse::id_of(std::string_view token) const {
    if (auto id = find(token)) return *id;
    throw UniverseMismatchError("unknown item '" + std::string(token) + "'");
}

std::string ItemUniverse::format(Itemset s) const {
    std::string out = "{";
    bool first = true;
    for (ItemId i : s.ids()) {
        if (!first) out += ", ";
        out += name(i);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace patlab
