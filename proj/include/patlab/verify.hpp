#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "patlab/cnf.hpp"

namespace patlab {

enum class Problem { confrule, hui, maxclosed };

std::string problem_name(Problem p);
std::optional<Problem> problem_from_name(std::string_view name);

/// Default brute-force caps; exceeding them needs an explicit force flag.
struct Caps {
    std::uint32_t vars;
    std::uint32_t clauses;
};
Caps default_caps(Problem p);

struct VerifyParams {
    Problem problem = Problem::confrule;
    std::uint32_t vars = 4;
    std::uint32_t clauses_lo = 4;
    std::uint32_t clauses_hi = 4;
    std::uint32_t trials = 100;
    std::uint64_t seed = 0;
    bool force = false;
};

/// One failed trial: either the oracle and the miner disagree on existence or
/// a forward/backward witness mapping failed its re-check. `dimacs` is the
/// full repro formula.
struct Disagreement {
    std::uint32_t trial;
    std::uint64_t formula_seed;
    std::string formula_digest;
    std::string oracle_verdict;
    std::string miner_verdict;
    std::string detail;
    std::string dimacs;
};

struct VerificationReport {
    VerifyParams params;
    std::uint32_t trials = 0;
    std::uint32_t agreements = 0;
    std::vector<Disagreement> disagreements;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return disagreements.empty(); }
};

/// Runs `trials` seeded formulas: exhaustive oracle vs miner on the reduced
/// instance, plus witness-mapping re-verification on every satisfiable trial.
/// Throws when the parameters exceed the problem's caps and force is unset.
VerificationReport run_verification(const VerifyParams& params);

/// Deterministic (elapsed time is deliberately excluded so identical seeds
/// give byte-identical files).
std::string report_json(const VerificationReport& report);

/// Digest used to identify formulas in reports: FNV-1a 64 over the DIMACS
/// text, printed as 16 hex digits.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace patlab
