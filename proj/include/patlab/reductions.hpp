#pragma once

#include <filesystem>

#include "patlab/cnf.hpp"
#include "patlab/constraints.hpp"
#include "patlab/rational.hpp"
#include "patlab/rules.hpp"
#include "patlab/utility.hpp"

namespace patlab {

// The three instance generators below turn a 3-CNF formula into a mining
// instance whose witnesses correspond one-to-one with the formula's
// (1-in-3-)satisfying assignments, plus the mappings in both directions.
// Item naming and transaction order are fixed so serialized instances are
// byte-stable: variables become pos<i>/neg<i> pairs in interleaved id order,
// clause markers cl<j> where used, the designated item z last (hui instances
// use p<i> instead).

/// Dataset over {pos1, neg1, ..., posn, negn, z}; a confident rule with z in
/// the head at threshold 1/2 exists iff the formula is satisfiable.
/// Transactions: n rows All\{z}; per variable i the rows All\{posi},
/// All\{negi} and twice All\{posi,negi,z}; one row All\{items(cl), z} per
/// clause. 5n + m rows total.
struct ConfRuleInstance {
    TransactionDataset dataset;
    ItemId head_item;
    Rational threshold;
    std::uint32_t num_vars;
    std::uint32_t num_clauses;

    ItemId pos_id(std::uint32_t var) const { return 2 * (var - 1); }
    ItemId neg_id(std::uint32_t var) const { return 2 * (var - 1) + 1; }
};

ConfRuleInstance reduce_confrule(const CnfFormula& f);

/// Satisfying assignment -> confident rule X -> {z} with posi in X where the
/// variable is true and negi where it is false.
AssociationRule confrule_forward(const ConfRuleInstance& inst, const Assignment& a);

/// Confident witness -> satisfying assignment. Validates the witness shape
/// (z in the head, exactly one of posi/negi in the body per variable) and
/// throws WitnessStructureError naming the offending variable otherwise.
Assignment confrule_backward(const ConfRuleInstance& inst, const AssociationRule& rule);

/// Quantitative dataset over {p1..pn} with unit utilities; an itemset of
/// utility >= 3nm^2 exists iff the positive formula is 1-in-3 satisfiable.
/// Each clause contributes three transactions; row r of a clause carries
/// cardinality 3nm on the clause's r-th variable, 0 on the other two, and 1
/// on every non-clause item.
struct HuiInstance {
    QuantitativeDataset qd;
    std::uint64_t threshold;
    std::uint32_t num_vars;
    std::uint32_t num_clauses;

    ItemId item_id(std::uint32_t var) const { return var - 1; }
};

/// Requires a positive formula with three distinct variables per clause.
HuiInstance reduce_hui(const CnfFormula& f);

Itemset hui_forward(const HuiInstance& inst, const Assignment& a);
Assignment hui_backward(const HuiInstance& inst, Itemset pattern);

/// Dataset over {pos1, neg1, ..., posn, negn, cl1..clm, z} with one
/// transaction All\{clj} per clause, plus the constraint set
///   (card-neq (posi negi) 2)            for each variable
///   (or-empty-nonempty vars {clj}+lits) for each clause
///   (minfreq m)
/// {z} is maximal (equivalently closed) for the theory iff the formula is
/// unsatisfiable.
struct MaxClosedInstance {
    TransactionDataset dataset;
    ConstraintSet constraints;
    Itemset target;
    std::uint32_t num_vars;
    std::uint32_t num_clauses;

    ItemId pos_id(std::uint32_t var) const { return 2 * (var - 1); }
    ItemId neg_id(std::uint32_t var) const { return 2 * (var - 1) + 1; }
    ItemId clause_id(std::uint32_t clause) const { return 2 * num_vars + (clause - 1); }
    ItemId z_id() const { return 2 * num_vars + num_clauses; }
};

MaxClosedInstance reduce_maxclosed(const CnfFormula& f);

/// Satisfying assignment -> superset of {z} in the theory with frequency m.
Itemset maxclosed_forward(const MaxClosedInstance& inst, const Assignment& a);

/// Counterexample superset -> satisfying assignment. Variables with neither
/// posi nor negi in the pattern default to false.
Assignment maxclosed_backward(const MaxClosedInstance& inst, Itemset pattern);

/// Instance emission: dataset.txt (+ utilities.tsv / constraints.sexp +
/// target.txt) and meta.txt under `dir`, which is created if missing.
void write_confrule_instance(const ConfRuleInstance& inst, const std::filesystem::path& dir);
void write_hui_instance(const HuiInstance& inst, const std::filesystem::path& dir);
void write_maxclosed_instance(const MaxClosedInstance& inst, const std::filesystem::path& dir);

}  // namespace patlab
