#include "patlab/verify.hpp"

#include <nlohmann/json.hpp>

#include "patlab/reductions.hpp"

namespace patlab {

std::string problem_name(Problem p) {
    switch (p) {
        case Problem::confrule: return "confrule";
        case Problem::hui: return "hui";
        case Problem::maxclosed: return "maxclosed";
    }
    return "?";
}

std::optional<Problem> problem_from_name(std::string_view name) {
    if (name == "confrule") return Problem::confrule;
    if (name == "hui") return Problem::hui;
    if (name == "maxclosed") return Problem::maxclosed;
    return std::nullopt;
}

Caps default_caps(Problem p) {
    switch (p) {
        case Problem::confrule: return {5, 32};
        case Problem::hui: return {14, 32};
        case Problem::maxclosed: return {4, 5};
    }
    return {0, 0};
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

namespace {

struct TrialOutcome {
    bool oracle_some = false;
    bool miner_some = false;
    std::string detail;  // non-empty => the trial failed beyond the verdicts

    bool ok() const { return oracle_some == miner_some && detail.empty(); }
};

TrialOutcome run_confrule_trial(const CnfFormula& f, std::uint32_t var_cap) {
    TrialOutcome out;
    const auto oracle = solve(f, var_cap);
    out.oracle_some = oracle.has_value();

    const ConfRuleInstance inst = reduce_confrule(f);
    if (inst.dataset.transaction_count() != 5 * std::size_t{f.num_vars()} + f.num_clauses()) {
        out.detail = "instance size differs from 5n+m";
        return out;
    }
    const auto witness =
        find_confident_rule_with_head_item(inst.dataset, inst.head_item, inst.threshold);
    out.miner_some = witness.has_value();
    if (!out.ok() || !oracle) return out;

    const AssociationRule forward = confrule_forward(inst, *oracle);
    if (!is_confident(inst.dataset, forward, inst.threshold)) {
        out.detail = "forward-mapped rule is not confident";
        return out;
    }
    if (!witness->head.contains(inst.head_item) ||
        !is_confident(inst.dataset, *witness, inst.threshold)) {
        out.detail = "mined rule failed its confidence re-check";
        return out;
    }
    try {
        const Assignment back = confrule_backward(inst, *witness);
        if (!eval(f, back)) out.detail = "backward-mapped assignment does not satisfy the formula";
    } catch (const WitnessStructureError& e) {
        out.detail = std::string("backward mapping rejected the mined rule: ") + e.what();
    }
    return out;
}

TrialOutcome run_hui_trial(const CnfFormula& f, std::uint32_t var_cap) {
    TrialOutcome out;
    const auto oracle = solve_one_in_three(f, var_cap);
    out.oracle_some = oracle.has_value();

    const HuiInstance inst = reduce_hui(f);
    if (inst.qd.transaction_count() != 3 * std::size_t{f.num_clauses()}) {
        out.detail = "instance size differs from 3m";
        return out;
    }
    const auto witness = find_high_utility_itemset(inst.qd, inst.threshold);
    out.miner_some = witness.has_value();
    if (!out.ok() || !oracle) return out;

    const Itemset forward = hui_forward(inst, *oracle);
    if (utility(inst.qd, forward) < inst.threshold) {
        out.detail = "forward-mapped pattern misses the utility threshold";
        return out;
    }
    if (utility(inst.qd, *witness) < inst.threshold) {
        out.detail = "mined pattern failed its utility re-check";
        return out;
    }
    try {
        const Assignment back = hui_backward(inst, *witness);
        if (!eval_one_in_three(f, back))
            out.detail = "backward-mapped assignment is not a 1-in-3 solution";
    } catch (const WitnessStructureError& e) {
        out.detail = std::string("backward mapping rejected the mined pattern: ") + e.what();
    }
    return out;
}

TrialOutcome run_maxclosed_trial(const CnfFormula& f, std::uint32_t var_cap) {
    TrialOutcome out;
    const auto oracle = solve(f, var_cap);
    out.oracle_some = oracle.has_value();

    const MaxClosedInstance inst = reduce_maxclosed(f);
    if (inst.dataset.transaction_count() != f.num_clauses() ||
        inst.constraints.terms.size() != std::size_t{f.num_vars()} + f.num_clauses() + 1) {
        out.detail = "instance size differs from m transactions / n+m+1 constraints";
        return out;
    }
    if (frequency(inst.dataset, inst.target) != f.num_clauses()) {
        out.detail = "target frequency differs from m";
        return out;
    }
    const BorderCheck maximal = check_maximal(inst.dataset, inst.target, inst.constraints);
    const BorderCheck closed = check_closed(inst.dataset, inst.target, inst.constraints);
    if (maximal.status == BorderStatus::not_in_theory ||
        closed.status == BorderStatus::not_in_theory) {
        out.detail = "target fell outside the theory";
        return out;
    }
    if (maximal.status != closed.status) {
        out.detail = "maximal and closed verdicts differ on the target";
        return out;
    }
    // "witness exists" = the target is NOT maximal
    out.miner_some = maximal.status == BorderStatus::no;
    if (!out.ok() || !oracle) return out;

    const Itemset forward = maxclosed_forward(inst, *oracle);
    if (!satisfies(inst.dataset, forward, inst.constraints) ||
        frequency(inst.dataset, forward) != f.num_clauses()) {
        out.detail = "forward-mapped superset failed constraints or frequency";
        return out;
    }
    try {
        const Assignment back = maxclosed_backward(inst, *maximal.counterexample);
        if (!eval(f, back)) out.detail = "backward-mapped assignment does not satisfy the formula";
    } catch (const WitnessStructureError& e) {
        out.detail = std::string("backward mapping rejected the counterexample: ") + e.what();
    }
    return out;
}

}  // namespace

VerificationReport run_verification(const VerifyParams& params) {
    if (params.clauses_lo < 1 || params.clauses_lo > params.clauses_hi)
        throw Error("invalid clause range");
    const Caps caps = default_caps(params.problem);
    if (!params.force && (params.vars > caps.vars || params.clauses_hi > caps.clauses))
        throw Error(problem_name(params.problem) + " verification is capped at " +
                    std::to_string(caps.vars) + " variables / " + std::to_string(caps.clauses) +
                    " clauses; pass --force to exceed (expect exponential running time)");

    const std::uint32_t var_cap = std::max(20u, params.vars);
    VerificationReport report;
    report.params = params;
    report.trials = params.trials;

    const auto start = std::chrono::steady_clock::now();
    std::uint64_t state = params.seed;
    for (std::uint32_t t = 0; t < params.trials; ++t) {
        const std::uint64_t formula_seed = splitmix64(state);
        const std::uint64_t span = params.clauses_hi - params.clauses_lo + 1;
        const std::uint32_t m =
            params.clauses_lo + static_cast<std::uint32_t>(splitmix64(state) % span);
        const CnfFormula f =
            random_formula(params.vars, m, formula_seed, params.problem == Problem::hui);

        TrialOutcome outcome;
        switch (params.problem) {
            case Problem::confrule: outcome = run_confrule_trial(f, var_cap); break;
            case Problem::hui: outcome = run_hui_trial(f, var_cap); break;
            case Problem::maxclosed: outcome = run_maxclosed_trial(f, var_cap); break;
        }
        if (outcome.ok()) {
            ++report.agreements;
        } else {
            const std::string dimacs = serialize_dimacs(f);
            report.disagreements.push_back({t, formula_seed, fnv1a64_hex(dimacs),
                                            outcome.oracle_some ? "witness" : "none",
                                            outcome.miner_some ? "witness" : "none",
                                            outcome.detail, dimacs});
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

std::string report_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["problem"] = problem_name(report.params.problem);
    j["params"] = {{"vars", report.params.vars},
                   {"clauses_min", report.params.clauses_lo},
                   {"clauses_max", report.params.clauses_hi},
                   {"trials", report.params.trials},
                   {"seed", report.params.seed}};
    j["trials"] = report.trials;
    j["agreements"] = report.agreements;
    j["digest_algorithm"] = "fnv1a64(dimacs)";
    auto& list = j["disagreements"] = nlohmann::ordered_json::array();
    for (const Disagreement& d : report.disagreements) {
        list.push_back({{"trial", d.trial},
                        {"formula_seed", d.formula_seed},
                        {"formula_digest", d.formula_digest},
                        {"oracle_verdict", d.oracle_verdict},
                        {"miner_verdict", d.miner_verdict},
                        {"detail", d.detail},
                        {"dimacs", d.dimacs}});
    }
    return j.dump(2) + "\n";
}

}  // namespace patlab
