#include "patlab/rules.hpp"

#include "patlab/kernels.hpp"

namespace patlab {

AssociationRule::AssociationRule(Itemset body_, Itemset head_) : body(body_), head(head_) {
    if (head.empty()) throw Error("rule head must be non-empty");
    if (body.intersects(head)) throw Error("rule body and head must be disjoint");
}

Rational confidence(const TransactionDataset& ds, const AssociationRule& rule) {
    const auto& u = ds.universe();
    if (!u.contains_set(rule.body) || !u.contains_set(rule.head))
        throw UniverseMismatchError("rule refers to items outside the universe");
    const auto& tx = ds.transaction_bits();
    std::uint64_t fx, fxy;
    if (rule.body.empty()) {
        fx = tx.size();
        fxy = kernels::active().support_count(tx.data(), tx.size(), rule.head.bits());
    } else {
        kernels::active().support_count2(tx.data(), tx.size(), rule.body.bits(),
                                         (rule.body | rule.head).bits(), fx, fxy);
    }
    if (fx == 0) throw UndefinedConfidenceError("confidence undefined: body has frequency 0");
    return Rational(fxy, fx);
}

bool is_confident(const TransactionDataset& ds, const AssociationRule& rule, const Rational& c) {
    if (c > Rational(1, 1)) throw Error("confidence threshold must lie in [0, 1]");
    return confidence(ds, rule) >= c;
}

std::optional<AssociationRule> find_confident_rule_with_head_item(const TransactionDataset& ds,
                                                                  ItemId z, const Rational& c) {
    const auto& u = ds.universe();
    if (z >= u.size()) throw UniverseMismatchError("head item id outside the universe");
    if (c > Rational(1, 1)) throw Error("confidence threshold must lie in [0, 1]");

    const auto& tx = ds.transaction_bits();
    const auto& k = kernels::active();
    const Itemset head = Itemset::single(z);

    const auto confident_body = [&](Itemset body) -> bool {
        std::uint64_t fx, fxy;
        if (body.empty()) {
            fx = tx.size();
            fxy = k.support_count(tx.data(), tx.size(), head.bits());
        } else {
            k.support_count2(tx.data(), tx.size(), body.bits(), (body | head).bits(), fx, fxy);
        }
        if (fx == 0) return false;
        // fxy/fx >= num/den, cross-multiplied in 128 bits
        using W = unsigned __int128;
        return W(fxy) * c.den() >= W(c.num()) * fx;
    };

    if (confident_body(Itemset{})) return AssociationRule(Itemset{}, head);

    std::optional<AssociationRule> found;
    for_each_subset_lex(u.all().without(z), [&](Itemset body) {
        if (!confident_body(body)) return Walk::descend;
        found.emplace(body, head);
        return Walk::stop;
    });
    return found;
}

std::string format_rule(const ItemUniverse& u, const AssociationRule& rule, const Rational& conf) {
    return u.format(rule.body) + " -> " + u.format(rule.head) + " @ conf " + conf.str();
}

}  // namespace patlab
