#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "patlab/error.hpp"

namespace patlab {

/// Exactly three literals; a literal is a signed 1-based variable index.
/// Duplicate variables within a clause are permitted.
struct Clause {
    std::array<std::int32_t, 3> lits;
};

class CnfFormula {
public:
    CnfFormula(std::uint32_t num_vars, std::vector<Clause> clauses);

    std::uint32_t num_vars() const { return num_vars_; }
    std::uint32_t num_clauses() const { return static_cast<std::uint32_t>(clauses_.size()); }
    const std::vector<Clause>& clauses() const { return clauses_; }

    /// No negative literal anywhere.
    bool all_positive() const;
    /// Every clause mentions three distinct variables.
    bool distinct_clause_vars() const;

private:
    std::uint32_t num_vars_;
    std::vector<Clause> clauses_;
};

struct Assignment {
    std::vector<bool> values;  // values[i] is variable i+1

    bool value(std::uint32_t var) const { return values.at(var - 1); }

    /// Variable i+1 takes bit i of `index` (v1 is the least significant bit);
    /// counting indices 0,1,2,... therefore enumerates assignments in the
    /// solver's canonical order.
    static Assignment from_index(std::uint64_t index, std::uint32_t num_vars);

    friend bool operator==(const Assignment& a, const Assignment& b) {
        return a.values == b.values;
    }
};

/// Every clause has at least one true literal.
bool eval(const CnfFormula& f, const Assignment& a);

/// Every clause has exactly one true variable, counting distinct variables
/// (a clause repeating a true variable still counts it once). Requires a
/// positive formula.
bool eval_one_in_three(const CnfFormula& f, const Assignment& a);

/// Exhaustive search in binary counting order; first witness or nullopt.
/// Complete by construction. Refuses formulas above `var_cap` variables.
std::optional<Assignment> solve(const CnfFormula& f, std::uint32_t var_cap = 20);
std::optional<Assignment> solve_one_in_three(const CnfFormula& f, std::uint32_t var_cap = 20);

/// m clauses over n >= 3 variables; each clause draws three distinct
/// variables, signs uniform unless positive_only. Fully determined by the
/// seed (the generator avoids std distributions, whose output is not pinned
/// across standard libraries).
CnfFormula random_formula(std::uint32_t n, std::uint32_t m, std::uint64_t seed,
                          bool positive_only);

/// Standard DIMACS CNF. Clauses must have exactly three literals.
CnfFormula parse_dimacs_text(const std::string& text, const std::string& origin);
std::string serialize_dimacs(const CnfFormula& f);
CnfFormula parse_dimacs(const std::filesystem::path& path);
void write_dimacs(const CnfFormula& f, const std::filesystem::path& path);

/// SplitMix64 step; the deterministic mixing function used wherever the lab
/// derives per-trial seeds.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace patlab
