#include "patlab/reductions.hpp"

namespace patlab {

namespace {

std::uint32_t lit_var(std::int32_t lit) {
    return static_cast<std::uint32_t>(lit < 0 ? -lit : lit);
}

std::vector<std::string> variable_pair_names(std::uint32_t n) {
    std::vector<std::string> names;
    names.reserve(2 * n);
    for (std::uint32_t i = 1; i <= n; ++i) {
        names.push_back("pos" + std::to_string(i));
        names.push_back("neg" + std::to_string(i));
    }
    return names;
}

void meta_file(const std::filesystem::path& dir, const std::string& content) {
    detail::spit_file(dir / "meta.txt", content);
}

}  // namespace

ConfRuleInstance reduce_confrule(const CnfFormula& f) {
    const std::uint32_t n = f.num_vars();
    const std::uint32_t m = f.num_clauses();
    auto names = variable_pair_names(n);
    names.push_back("z");
    ItemUniverse universe(std::move(names));
    const Itemset all = universe.all();
    const ItemId z = 2 * n;

    std::vector<Itemset> tx;
    tx.reserve(5 * std::size_t{n} + m);
    for (std::uint32_t i = 0; i < n; ++i) tx.push_back(all.without(z));
    for (std::uint32_t i = 1; i <= n; ++i) {
        const ItemId pos = 2 * (i - 1), neg = 2 * (i - 1) + 1;
        tx.push_back(all.without(pos));
        tx.push_back(all.without(neg));
        const Itemset gap = all.without(pos).without(neg).without(z);
        tx.push_back(gap);
        tx.push_back(gap);
    }
    for (const Clause& c : f.clauses()) {
        Itemset t = all.without(z);
        for (std::int32_t lit : c.lits) {
            const ItemId base = 2 * (lit_var(lit) - 1);
            t = t.without(lit < 0 ? base + 1 : base);
        }
        tx.push_back(t);
    }
    return ConfRuleInstance{TransactionDataset(std::move(universe), std::move(tx)),
                            z, Rational(1, 2), n, m};
}

AssociationRule confrule_forward(const ConfRuleInstance& inst, const Assignment& a) {
    if (a.values.size() != inst.num_vars)
        throw Error("assignment length does not match the instance");
    Itemset body;
    for (std::uint32_t i = 1; i <= inst.num_vars; ++i)
        body = body.with(a.value(i) ? inst.pos_id(i) : inst.neg_id(i));
    return AssociationRule(body, Itemset::single(inst.head_item));
}

Assignment confrule_backward(const ConfRuleInstance& inst, const AssociationRule& rule) {
    if (!rule.head.contains(inst.head_item))
        throw WitnessStructureError("witness head does not contain z");
    Assignment a;
    a.values.resize(inst.num_vars);
    for (std::uint32_t i = 1; i <= inst.num_vars; ++i) {
        const bool has_pos = rule.body.contains(inst.pos_id(i));
        const bool has_neg = rule.body.contains(inst.neg_id(i));
        if (has_pos == has_neg)
            throw WitnessStructureError(
                "witness body must contain exactly one of pos" + std::to_string(i) + "/neg" +
                std::to_string(i) + "; it contains " + (has_pos ? "both" : "neither"));
        a.values[i - 1] = has_pos;
    }
    return a;
}

HuiInstance reduce_hui(const CnfFormula& f) {
    if (!f.all_positive())
        throw Error("the high-utility reduction requires a positive formula");
    if (!f.distinct_clause_vars())
        throw Error("the high-utility reduction requires three distinct variables per clause");
    const std::uint64_t n = f.num_vars();
    const std::uint64_t m = f.num_clauses();
    std::uint64_t big, ut;  // big = 3nm, ut = 3nm^2
    if (__builtin_mul_overflow(3 * n, m, &big) || __builtin_mul_overflow(big, m, &ut))
        throw Error("utility threshold overflows 64 bits");

    std::vector<std::string> names;
    for (std::uint64_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
    ItemUniverse universe(std::move(names));

    std::vector<std::vector<std::uint64_t>> cards;
    cards.reserve(3 * m);
    for (const Clause& c : f.clauses()) {
        for (int slot = 0; slot < 3; ++slot) {
            std::vector<std::uint64_t> row(n, 1);
            for (std::int32_t lit : c.lits) row[lit_var(lit) - 1] = 0;
            row[lit_var(c.lits[slot]) - 1] = big;
            cards.push_back(std::move(row));
        }
    }
    QuantitativeDataset qd(std::move(universe), std::move(cards),
                           std::vector<std::uint64_t>(n, 1));
    return HuiInstance{std::move(qd), ut, f.num_vars(), f.num_clauses()};
}

Itemset hui_forward(const HuiInstance& inst, const Assignment& a) {
    if (a.values.size() != inst.num_vars)
        throw Error("assignment length does not match the instance");
    Itemset p;
    for (std::uint32_t i = 1; i <= inst.num_vars; ++i)
        if (a.value(i)) p = p.with(inst.item_id(i));
    if (p.empty())
        throw WitnessStructureError("all-false assignment maps to the empty pattern");
    return p;
}

Assignment hui_backward(const HuiInstance& inst, Itemset pattern) {
    if (utility(inst.qd, pattern) < inst.threshold)
        throw WitnessStructureError("pattern utility is below the instance threshold");
    Assignment a;
    a.values.resize(inst.num_vars);
    for (std::uint32_t i = 1; i <= inst.num_vars; ++i)
        a.values[i - 1] = pattern.contains(inst.item_id(i));
    return a;
}

MaxClosedInstance reduce_maxclosed(const CnfFormula& f) {
    const std::uint32_t n = f.num_vars();
    const std::uint32_t m = f.num_clauses();
    auto names = variable_pair_names(n);
    for (std::uint32_t j = 1; j <= m; ++j) names.push_back("cl" + std::to_string(j));
    names.push_back("z");
    ItemUniverse universe(std::move(names));
    const Itemset all = universe.all();

    Itemset var_items;
    for (std::uint32_t i = 0; i < 2 * n; ++i) var_items = var_items.with(i);

    std::vector<Itemset> tx;
    tx.reserve(m);
    for (std::uint32_t j = 1; j <= m; ++j) tx.push_back(all.without(2 * n + (j - 1)));

    ConstraintSet constraints;
    for (std::uint32_t i = 1; i <= n; ++i) {
        const Itemset pair = Itemset::single(2 * (i - 1)).with(2 * (i - 1) + 1);
        constraints.terms.push_back(CardNeq{pair, 2});
    }
    for (std::uint32_t j = 1; j <= m; ++j) {
        Itemset right = Itemset::single(2 * n + (j - 1));
        for (std::int32_t lit : f.clauses()[j - 1].lits) {
            const ItemId base = 2 * (lit_var(lit) - 1);
            right = right.with(lit < 0 ? base + 1 : base);
        }
        constraints.terms.push_back(OrEmptyNonempty{var_items, right});
    }
    constraints.terms.push_back(MinFreq{m});

    const ItemId z = 2 * n + m;
    return MaxClosedInstance{TransactionDataset(std::move(universe), std::move(tx)),
                             std::move(constraints), Itemset::single(z), n, m};
}

Itemset maxclosed_forward(const MaxClosedInstance& inst, const Assignment& a) {
    if (a.values.size() != inst.num_vars)
        throw Error("assignment length does not match the instance");
    Itemset p = inst.target;
    for (std::uint32_t i = 1; i <= inst.num_vars; ++i)
        p = p.with(a.value(i) ? inst.pos_id(i) : inst.neg_id(i));
    return p;
}

Assignment maxclosed_backward(const MaxClosedInstance& inst, Itemset pattern) {
    if (!inst.target.subset_of(pattern) || pattern == inst.target)
        throw WitnessStructureError("witness must be a strict superset of the target");
    if (!satisfies(inst.dataset, pattern, inst.constraints))
        throw WitnessStructureError("witness does not satisfy the constraint set");
    Assignment a;
    a.values.resize(inst.num_vars);
    // Variables represented by neither item stay false.
    for (std::uint32_t i = 1; i <= inst.num_vars; ++i)
        a.values[i - 1] = pattern.contains(inst.pos_id(i));
    return a;
}

void write_confrule_instance(const ConfRuleInstance& inst, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_dataset(inst.dataset, dir / "dataset.txt");
    const std::uint64_t rows = inst.dataset.transaction_count();
    meta_file(dir, "problem: confrule\nvars: " + std::to_string(inst.num_vars) +
                       "\nclauses: " + std::to_string(inst.num_clauses) +
                       "\nitems: " + std::to_string(inst.dataset.universe().size()) +
                       "\ntransactions: " + std::to_string(rows) +
                       "\nsize_formula: 5n+m = " + std::to_string(rows) +
                       "\nthreshold: " + inst.threshold.str() + "\nhead_item: z\n");
}

void write_hui_instance(const HuiInstance& inst, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_quantitative(inst.qd, dir / "dataset.txt", dir / "utilities.tsv");
    const std::uint64_t rows = inst.qd.transaction_count();
    meta_file(dir, "problem: hui\nvars: " + std::to_string(inst.num_vars) +
                       "\nclauses: " + std::to_string(inst.num_clauses) +
                       "\nitems: " + std::to_string(inst.qd.universe().size()) +
                       "\ntransactions: " + std::to_string(rows) +
                       "\nsize_formula: 3m = " + std::to_string(rows) +
                       "\nthreshold: " + std::to_string(inst.threshold) + "\n");
}

void write_maxclosed_instance(const MaxClosedInstance& inst, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_dataset(inst.dataset, dir / "dataset.txt");
    write_constraints(inst.constraints, inst.dataset.universe(), dir / "constraints.sexp");
    detail::spit_file(dir / "target.txt",
                      inst.dataset.universe().name(inst.target.ids().front()) + "\n");
    const std::uint64_t rows = inst.dataset.transaction_count();
    meta_file(dir, "problem: maxclosed\nvars: " + std::to_string(inst.num_vars) +
                       "\nclauses: " + std::to_string(inst.num_clauses) +
                       "\nitems: " + std::to_string(inst.dataset.universe().size()) +
                       "\ntransactions: " + std::to_string(rows) +
                       "\nsize_formula: m = " + std::to_string(rows) +
                       "\nconstraints: " + std::to_string(inst.constraints.terms.size()) +
                       "\nconstraint_formula: n+m+1 = " +
                       std::to_string(inst.constraints.terms.size()) + "\ntarget: z\n");
}

}  // namespace patlab
