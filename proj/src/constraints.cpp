#include "patlab/constraints.hpp"

#include <algorithm>
#include <sstream>

namespace patlab {

namespace {

bool term_holds(const TransactionDataset& ds, Itemset p, const ConstraintTerm& term) {
    return std::visit(
        [&](const auto& t) -> bool {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, MinFreq>) {
                return frequency(ds, p) >= t.s;
            } else if constexpr (std::is_same_v<T, CardNeq>) {
                return (p & t.scope).size() != t.k;
            } else {
                return !p.intersects(t.left) || p.intersects(t.right);
            }
        },
        term);
}

std::uint64_t strictest_minfreq(const ConstraintSet& c) {
    std::uint64_t s = 0;
    for (const auto& term : c.terms)
        if (const auto* mf = std::get_if<MinFreq>(&term)) s = std::max(s, mf->s);
    return s;
}

}  // namespace

bool satisfies(const TransactionDataset& ds, Itemset pattern, const ConstraintSet& c) {
    detail::require_pattern(ds.universe(), pattern);
    for (const auto& term : c.terms)
        if (!term_holds(ds, pattern, term)) return false;
    return true;
}

std::vector<Itemset> theory(const TransactionDataset& ds, const ConstraintSet& c,
                            std::size_t max_universe) {
    if (ds.universe().size() > max_universe)
        throw Error("theory enumeration over " + std::to_string(ds.universe().size()) +
                    " items exceeds the configured bound of " + std::to_string(max_universe));
    const std::uint64_t s = strictest_minfreq(c);
    std::vector<Itemset> out;
    for_each_subset_lex(ds.universe().all(), [&](Itemset p) {
        if (s > 0 && frequency(ds, p) < s) return Walk::prune;  // anti-monotone
        if (satisfies(ds, p, c)) out.push_back(p);
        return Walk::descend;
    });
    return out;
}

namespace {

// Shared scan for both border checks: find the first (fewest added items,
// then lexicographic) strict superset in the theory, optionally restricted to
// the pattern's frequency.
BorderCheck border_check(const TransactionDataset& ds, Itemset pattern, const ConstraintSet& c,
                         bool same_frequency_only) {
    if (!satisfies(ds, pattern, c)) return {BorderStatus::not_in_theory, std::nullopt};
    const std::uint64_t f = same_frequency_only ? frequency(ds, pattern) : 0;
    std::optional<Itemset> witness;
    for_each_strict_superset(pattern, ds.universe().all(), [&](Itemset q) {
        if (!satisfies(ds, q, c)) return false;
        if (same_frequency_only && frequency(ds, q) != f) return false;
        witness = q;
        return true;
    });
    if (witness) return {BorderStatus::no, witness};
    return {BorderStatus::yes, std::nullopt};
}

}  // namespace

BorderCheck check_maximal(const TransactionDataset& ds, Itemset pattern, const ConstraintSet& c) {
    return border_check(ds, pattern, c, false);
}

BorderCheck check_closed(const TransactionDataset& ds, Itemset pattern, const ConstraintSet& c) {
    return border_check(ds, pattern, c, true);
}

std::vector<Itemset> enumerate_maximal(const TransactionDataset& ds, const ConstraintSet& c) {
    std::vector<Itemset> out;
    for (Itemset p : theory(ds, c))
        if (check_maximal(ds, p, c).is(BorderStatus::yes)) out.push_back(p);
    return out;
}

std::vector<Itemset> enumerate_closed(const TransactionDataset& ds, const ConstraintSet& c) {
    std::vector<Itemset> out;
    for (Itemset p : theory(ds, c))
        if (check_closed(ds, p, c).is(BorderStatus::yes)) out.push_back(p);
    return out;
}

namespace {

struct SexpParser {
    const std::string& text;
    const std::string& origin;
    std::size_t lineno;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        if (pos >= text.size()) throw ParseError(origin, lineno, "unexpected end of line");
        return text[pos];
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(origin, lineno, std::string("expected '") + c + "'");
        ++pos;
    }

    std::string atom() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '(' &&
               text[pos] != ')' && text[pos] != '\r')
            ++pos;
        if (pos == start) throw ParseError(origin, lineno, "expected a token");
        return text.substr(start, pos - start);
    }

    std::uint64_t number() {
        const std::string a = atom();
        if (a.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(origin, lineno, "expected a non-negative integer, got '" + a + "'");
        return std::stoull(a);
    }

    Itemset scope(const ItemUniverse& u) {
        expect('(');
        Itemset s;
        while (peek() != ')') {
            const std::string tok = atom();
            auto id = u.find(tok);
            if (!id) throw ParseError(origin, lineno, "unknown item '" + tok + "'");
            s = s.with(*id);
        }
        expect(')');
        return s;
    }
};

}  // namespace

ConstraintSet parse_constraints_text(const std::string& text, const std::string& origin,
                                     const ItemUniverse& u) {
    ConstraintSet set;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line[line.find_first_not_of(" \t")] == '#') continue;
        SexpParser p{line, origin, lineno};
        p.expect('(');
        const std::string head = p.atom();
        if (head == "minfreq") {
            set.terms.push_back(MinFreq{p.number()});
        } else if (head == "card-neq") {
            Itemset scope = p.scope(u);
            set.terms.push_back(CardNeq{scope, p.number()});
        } else if (head == "or-empty-nonempty") {
            Itemset left = p.scope(u);
            Itemset right = p.scope(u);
            set.terms.push_back(OrEmptyNonempty{left, right});
        } else {
            throw ParseError(origin, lineno, "unknown constraint '" + head + "'");
        }
        p.expect(')');
        if (!p.at_end()) throw ParseError(origin, lineno, "trailing input after constraint");
    }
    return set;
}

namespace {

std::string scope_tokens(const ItemUniverse& u, Itemset s) {
    std::string out = "(";
    bool first = true;
    for (ItemId i : s.ids()) {
        if (!first) out += ' ';
        out += u.name(i);
        first = false;
    }
    return out + ")";
}

}  // namespace

std::string serialize_constraints(const ConstraintSet& c, const ItemUniverse& u) {
    std::string out;
    for (const auto& term : c.terms) {
        std::visit(
            [&](const auto& t) {
                using T = std::decay_t<decltype(t)>;
                if constexpr (std::is_same_v<T, MinFreq>) {
                    out += "(minfreq " + std::to_string(t.s) + ")";
                } else if constexpr (std::is_same_v<T, CardNeq>) {
                    out += "(card-neq " + scope_tokens(u, t.scope) + " " + std::to_string(t.k) +
                           ")";
                } else {
                    out += "(or-empty-nonempty " + scope_tokens(u, t.left) + " " +
                           scope_tokens(u, t.right) + ")";
                }
            },
            term);
        out += '\n';
    }
    return out;
}

ConstraintSet read_constraints(const std::filesystem::path& path, const ItemUniverse& u) {
    return parse_constraints_text(detail::slurp_file(path), path.string(), u);
}

void write_constraints(const ConstraintSet& c, const ItemUniverse& u,
                       const std::filesystem::path& path) {
    detail::spit_file(path, serialize_constraints(c, u));
}

}  // namespace patlab
