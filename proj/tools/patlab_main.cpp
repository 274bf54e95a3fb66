#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "patlab/demo.hpp"
#include "patlab/reductions.hpp"
#include "patlab/verify.hpp"

namespace {

using namespace patlab;

constexpr int kExitPass = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

// Item counts above which the exhaustive miners need --force.
std::size_t mine_item_cap(Problem p) {
    switch (p) {
        case Problem::confrule: return 2 * std::size_t{default_caps(p).vars} + 1;  // 11
        case Problem::hui: return default_caps(p).vars;                            // 14
        case Problem::maxclosed:
            return 2 * std::size_t{default_caps(p).vars} + default_caps(p).clauses + 1;  // 14
    }
    return 0;
}

void check_item_cap(Problem p, std::size_t items, bool force) {
    const std::size_t cap = mine_item_cap(p);
    if (items <= cap) return;
    if (!force)
        throw Error("instance has " + std::to_string(items) + " items, above the " +
                    problem_name(p) + " cap of " + std::to_string(cap) +
                    "; pass --force to run anyway");
    std::cerr << "warning: " << items << " items exceed the " << problem_name(p)
              << " cap; this search is exponential and may take a very long time\n";
}

int cmd_reduce(const std::string& problem_name_arg, const std::string& cnf_path,
               const std::string& out_dir) {
    const auto problem = problem_from_name(problem_name_arg);
    if (!problem) throw Error("unknown problem '" + problem_name_arg + "'");
    const CnfFormula f = parse_dimacs(cnf_path);
    const std::filesystem::path dir(out_dir);
    switch (*problem) {
        case Problem::confrule: {
            const ConfRuleInstance inst = reduce_confrule(f);
            write_confrule_instance(inst, dir);
            std::cout << "confrule instance: " << inst.dataset.transaction_count()
                      << " transactions (5n+m with n=" << inst.num_vars
                      << ", m=" << inst.num_clauses << "), threshold "
                      << inst.threshold.str() << ", head item z\n";
            break;
        }
        case Problem::hui: {
            const HuiInstance inst = reduce_hui(f);
            write_hui_instance(inst, dir);
            std::cout << "hui instance: " << inst.qd.transaction_count()
                      << " transactions (3m with m=" << inst.num_clauses << "), threshold "
                      << inst.threshold << " (3nm^2 with n=" << inst.num_vars << ")\n";
            break;
        }
        case Problem::maxclosed: {
            const MaxClosedInstance inst = reduce_maxclosed(f);
            write_maxclosed_instance(inst, dir);
            std::cout << "maxclosed instance: " << inst.dataset.transaction_count()
                      << " transactions (m=" << inst.num_clauses << "), "
                      << inst.constraints.terms.size() << " constraints (n+m+1 with n="
                      << inst.num_vars << "), target {z}\n";
            break;
        }
    }
    std::cout << "written to " << dir.string() << "\n";
    return kExitPass;
}

int mine_confrule(const std::string& dataset_path, const std::string& head_token,
                  const std::string& conf_text, bool force) {
    const TransactionDataset ds = read_dataset(dataset_path);
    check_item_cap(Problem::confrule, ds.universe().size(), force);
    const ItemId z = ds.universe().id_of(head_token);
    const Rational c = Rational::parse(conf_text);
    if (c > Rational(1, 1)) throw Error("confidence threshold must lie in [0, 1]");
    const auto witness = find_confident_rule_with_head_item(ds, z, c);
    if (!witness) {
        std::cout << "none\n";
        return kExitPass;
    }
    const Rational conf = confidence(ds, *witness);
    if (!(conf >= c)) {
        std::cerr << "error: mined rule failed its confidence re-check\n";
        return kExitDisagreement;
    }
    std::cout << "witness: " << format_rule(ds.universe(), *witness, conf) << "\n";
    return kExitPass;
}

int mine_hui(const std::string& dataset_path, const std::string& utilities_path,
             std::uint64_t ut, bool no_prune, bool force) {
    const QuantitativeDataset qd = read_quantitative(dataset_path, utilities_path);
    check_item_cap(Problem::hui, qd.universe().size(), force);
    const auto witness = find_high_utility_itemset(qd, ut, !no_prune);
    if (!witness) {
        std::cout << "none\n";
        return kExitPass;
    }
    const std::uint64_t u = utility(qd, *witness);
    if (u < ut) {
        std::cerr << "error: mined pattern failed its utility re-check\n";
        return kExitDisagreement;
    }
    std::cout << "witness: " << qd.universe().format(*witness) << " @ utility " << u << "\n";
    return kExitPass;
}

int mine_maxclosed(const std::string& dataset_path, const std::string& constraints_path,
                   const std::string& target_path, bool force) {
    const TransactionDataset ds = read_dataset(dataset_path);
    check_item_cap(Problem::maxclosed, ds.universe().size(), force);
    const ConstraintSet constraints = read_constraints(constraints_path, ds.universe());

    std::ifstream tin(target_path);
    if (!tin) throw Error("cannot open " + target_path);
    std::string token;
    Itemset target;
    while (tin >> token) target = target.with(ds.universe().id_of(token));
    if (target.empty()) throw Error(target_path + ": empty target pattern");

    const BorderCheck maximal = check_maximal(ds, target, constraints);
    const BorderCheck closed = check_closed(ds, target, constraints);
    if (maximal.is(BorderStatus::not_in_theory)) {
        std::cout << "target " << ds.universe().format(target)
                  << " is not in the theory; maximal/closed do not apply\n";
        return kExitPass;
    }
    std::cout << "maximal: " << (maximal.is(BorderStatus::yes) ? "yes" : "no")
              << ", closed: " << (closed.is(BorderStatus::yes) ? "yes" : "no") << "\n";
    if (maximal.counterexample) {
        const Itemset q = *maximal.counterexample;
        if (!satisfies(ds, q, constraints)) {
            std::cerr << "error: counterexample superset failed its re-check\n";
            return kExitDisagreement;
        }
        std::cout << "superset in theory: " << ds.universe().format(q) << " @ freq "
                  << frequency(ds, q) << "\n";
    } else if (closed.counterexample) {
        std::cout << "equal-frequency superset in theory: "
                  << ds.universe().format(*closed.counterexample) << "\n";
    }
    return kExitPass;
}

std::pair<std::uint32_t, std::uint32_t> parse_clause_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const std::uint32_t m = static_cast<std::uint32_t>(std::stoul(text));
            return {m, m};
        }
        return {static_cast<std::uint32_t>(std::stoul(text.substr(0, colon))),
                static_cast<std::uint32_t>(std::stoul(text.substr(colon + 1)))};
    } catch (const std::exception&) {
        throw Error("invalid clause count '" + text + "' (expected N or LO:HI)");
    }
}

int cmd_verify(const std::string& problem_name_arg, std::uint32_t vars,
               const std::string& clauses_text, std::uint32_t trials, std::uint64_t seed,
               const std::string& out_dir, bool force) {
    const auto problem = problem_from_name(problem_name_arg);
    if (!problem) throw Error("unknown problem '" + problem_name_arg + "'");
    VerifyParams params;
    params.problem = *problem;
    params.vars = vars;
    std::tie(params.clauses_lo, params.clauses_hi) = parse_clause_range(clauses_text);
    params.trials = trials;
    params.seed = seed;
    params.force = force;

    const VerificationReport report = run_verification(params);

    std::cout << problem_name(params.problem) << ": " << report.agreements << "/"
              << report.trials << " trials agree (vars=" << params.vars << ", clauses="
              << params.clauses_lo << ":" << params.clauses_hi << ", seed=" << params.seed
              << ", " << report.elapsed.count() << " ms)\n";
    for (const Disagreement& dis : report.disagreements) {
        std::cout << "DISAGREEMENT trial=" << dis.trial << " seed=" << dis.formula_seed
                  << " digest=" << dis.formula_digest << " oracle=" << dis.oracle_verdict
                  << " miner=" << dis.miner_verdict;
        if (!dis.detail.empty()) std::cout << " detail=" << dis.detail;
        std::cout << "\nrepro:\n" << dis.dimacs;
    }

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    const auto report_path = dir / "report.json";
    detail::spit_file(report_path, report_json(report));
    std::cout << "report: " << report_path.string() << "\n";
    return report.passed() ? kExitPass : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"itemset mining complexity lab: reductions, exhaustive miners, oracles"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string out_dir = ".";
    bool force = false;
    app.add_option("--seed", seed, "seed for randomized commands")->capture_default_str();
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_flag("--force", force, "override the brute-force size caps");

    auto* reduce = app.add_subcommand("reduce", "build a mining instance from a DIMACS formula");
    std::string reduce_problem, reduce_cnf;
    reduce->add_option("problem", reduce_problem, "confrule | hui | maxclosed")->required();
    reduce->add_option("--cnf", reduce_cnf, "DIMACS CNF input")->required();

    auto* mine = app.add_subcommand("mine", "run an exhaustive search on an instance");
    std::string mine_problem, mine_dataset, mine_utilities, mine_constraints, mine_target;
    std::string mine_head, mine_conf = "1/2";
    std::uint64_t mine_ut = 0;
    bool mine_no_prune = false;
    mine->add_option("problem", mine_problem, "confrule | hui | maxclosed")->required();
    mine->add_option("--dataset", mine_dataset, "dataset file")->required();
    mine->add_option("--head", mine_head, "confrule: item required in the head");
    mine->add_option("--conf", mine_conf, "confrule: confidence threshold (p/q, N%, or int)")
        ->capture_default_str();
    mine->add_option("--utilities", mine_utilities, "hui: utility file");
    mine->add_option("--ut", mine_ut, "hui: utility threshold");
    mine->add_flag("--no-prune", mine_no_prune, "hui: disable the TWU pruning");
    mine->add_option("--constraints", mine_constraints, "maxclosed: constraint file");
    mine->add_option("--target", mine_target, "maxclosed: target pattern file");

    auto* verify = app.add_subcommand("verify", "randomized oracle-vs-miner equivalence runs");
    std::string verify_problem, verify_clauses = "4";
    std::uint32_t verify_vars = 4, verify_trials = 100;
    verify->add_option("problem", verify_problem, "confrule | hui | maxclosed")->required();
    verify->add_option("--vars", verify_vars, "variables per formula")->capture_default_str();
    verify->add_option("--clauses", verify_clauses, "clauses per formula: N or LO:HI")
        ->capture_default_str();
    verify->add_option("--trials", verify_trials, "number of formulas")->capture_default_str();

    auto* demo = app.add_subcommand("demo", "recompute the bundled reference examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (reduce->parsed()) return cmd_reduce(reduce_problem, reduce_cnf, out_dir);
        if (mine->parsed()) {
            const auto problem = problem_from_name(mine_problem);
            if (!problem) throw Error("unknown problem '" + mine_problem + "'");
            switch (*problem) {
                case Problem::confrule:
                    if (mine_head.empty()) throw Error("mine confrule requires --head");
                    return mine_confrule(mine_dataset, mine_head, mine_conf, force);
                case Problem::hui:
                    if (mine_utilities.empty()) throw Error("mine hui requires --utilities");
                    return mine_hui(mine_dataset, mine_utilities, mine_ut, mine_no_prune, force);
                case Problem::maxclosed:
                    if (mine_constraints.empty() || mine_target.empty())
                        throw Error("mine maxclosed requires --constraints and --target");
                    return mine_maxclosed(mine_dataset, mine_constraints, mine_target, force);
            }
        }
        if (verify->parsed())
            return cmd_verify(verify_problem, verify_vars, verify_clauses, verify_trials, seed,
                              out_dir, force);
        if (demo->parsed())
            return run_reference_demo(std::cout) == 0 ? kExitPass : kExitDisagreement;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
