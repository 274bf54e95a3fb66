#include "patlab/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "patlab/dataset.hpp"

namespace patlab {

CnfFormula::CnfFormula(std::uint32_t num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
    for (std::size_t c = 0; c < clauses_.size(); ++c) {
        for (std::int32_t lit : clauses_[c].lits) {
            const std::uint32_t var = static_cast<std::uint32_t>(lit < 0 ? -lit : lit);
            if (lit == 0 || var > num_vars_)
                throw Error("clause " + std::to_string(c + 1) + ": literal " +
                            std::to_string(lit) + " out of range for " +
                            std::to_string(num_vars_) + " variables");
        }
    }
}

bool CnfFormula::all_positive() const {
    for (const Clause& c : clauses_)
        for (std::int32_t lit : c.lits)
            if (lit < 0) return false;
    return true;
}

bool CnfFormula::distinct_clause_vars() const {
    for (const Clause& c : clauses_) {
        const auto v = [](std::int32_t l) { return l < 0 ? -l : l; };
        if (v(c.lits[0]) == v(c.lits[1]) || v(c.lits[0]) == v(c.lits[2]) ||
            v(c.lits[1]) == v(c.lits[2]))
            return false;
    }
    return true;
}

Assignment Assignment::from_index(std::uint64_t index, std::uint32_t num_vars) {
    Assignment a;
    a.values.resize(num_vars);
    for (std::uint32_t i = 0; i < num_vars; ++i) a.values[i] = (index >> i) & 1;
    return a;
}

bool eval(const CnfFormula& f, const Assignment& a) {
    if (a.values.size() != f.num_vars()) throw Error("assignment length does not match formula");
    for (const Clause& c : f.clauses()) {
        bool sat = false;
        for (std::int32_t lit : c.lits) {
            const bool v = a.value(static_cast<std::uint32_t>(lit < 0 ? -lit : lit));
            if (lit > 0 ? v : !v) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

bool eval_one_in_three(const CnfFormula& f, const Assignment& a) {
    if (a.values.size() != f.num_vars()) throw Error("assignment length does not match formula");
    if (!f.all_positive()) throw Error("one-in-three evaluation requires a positive formula");
    for (const Clause& c : f.clauses()) {
        // count distinct true variables
        std::uint32_t seen[3];
        std::size_t num_seen = 0;
        for (std::int32_t lit : c.lits) {
            const std::uint32_t var = static_cast<std::uint32_t>(lit);
            if (!a.value(var)) continue;
            bool dup = false;
            for (std::size_t i = 0; i < num_seen; ++i) dup = dup || seen[i] == var;
            if (!dup) seen[num_seen++] = var;
        }
        if (num_seen != 1) return false;
    }
    return true;
}

namespace {

template <typename Eval>
std::optional<Assignment> exhaustive_solve(const CnfFormula& f, std::uint32_t var_cap,
                                           Eval&& accepts) {
    if (f.num_vars() > var_cap)
        throw Error("formula has " + std::to_string(f.num_vars()) +
                    " variables, above the exhaustive-search cap of " + std::to_string(var_cap));
    const std::uint64_t limit = std::uint64_t{1} << f.num_vars();
    for (std::uint64_t idx = 0; idx < limit; ++idx) {
        Assignment a = Assignment::from_index(idx, f.num_vars());
        if (accepts(f, a)) return a;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Assignment> solve(const CnfFormula& f, std::uint32_t var_cap) {
    return exhaustive_solve(f, var_cap, [](const CnfFormula& g, const Assignment& a) {
        return eval(g, a);
    });
}

std::optional<Assignment> solve_one_in_three(const CnfFormula& f, std::uint32_t var_cap) {
    return exhaustive_solve(f, var_cap, [](const CnfFormula& g, const Assignment& a) {
        return eval_one_in_three(g, a);
    });
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

// Bounded draw via multiply-shift; deterministic across platforms.
std::uint32_t bounded(std::uint64_t& state, std::uint32_t n) {
    return static_cast<std::uint32_t>((unsigned __int128)splitmix64(state) * n >> 64);
}

}  // namespace

CnfFormula random_formula(std::uint32_t n, std::uint32_t m, std::uint64_t seed,
                          bool positive_only) {
    if (n < 3) throw Error("random_formula requires n >= 3");
    if (m < 1) throw Error("random_formula requires m >= 1");
    std::uint64_t state = seed;
    std::vector<Clause> clauses;
    clauses.reserve(m);
    for (std::uint32_t c = 0; c < m; ++c) {
        std::uint32_t vars[3];
        for (int i = 0; i < 3; ++i) {
            std::uint32_t v;
            bool fresh;
            do {
                v = bounded(state, n) + 1;
                fresh = true;
                for (int j = 0; j < i; ++j) fresh = fresh && vars[j] != v;
            } while (!fresh);
            vars[i] = v;
        }
        Clause cl{};
        for (int i = 0; i < 3; ++i) {
            const bool negate = !positive_only && (splitmix64(state) & 1);
            cl.lits[i] = negate ? -static_cast<std::int32_t>(vars[i])
                                : static_cast<std::int32_t>(vars[i]);
        }
        clauses.push_back(cl);
    }
    return CnfFormula(n, std::move(clauses));
}

CnfFormula parse_dimacs_text(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::uint32_t> num_vars;
    std::size_t declared_clauses = 0;
    std::vector<Clause> clauses;
    std::vector<std::int32_t> pending;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream fields(line);
        if (!num_vars) {
            std::string p, cnf;
            long long n = -1, m = -1;
            fields >> p >> cnf >> n >> m;
            if (p != "p" || cnf != "cnf" || n < 0 || m < 0 || fields.fail())
                throw ParseError(origin, lineno, "expected header 'p cnf <vars> <clauses>'");
            num_vars = static_cast<std::uint32_t>(n);
            declared_clauses = static_cast<std::size_t>(m);
            continue;
        }
        long long lit;
        while (fields >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw ParseError(origin, lineno,
                                     "clause " + std::to_string(clauses.size() + 1) + " has " +
                                         std::to_string(pending.size()) +
                                         " literals; exactly 3 required");
                clauses.push_back(Clause{{pending[0], pending[1], pending[2]}});
                pending.clear();
            } else {
                pending.push_back(static_cast<std::int32_t>(lit));
            }
        }
        if (!fields.eof())
            throw ParseError(origin, lineno, "invalid literal");
    }
    if (!num_vars) throw ParseError(origin, lineno == 0 ? 1 : lineno, "missing 'p cnf' header");
    if (!pending.empty())
        throw ParseError(origin, lineno, "unterminated clause (missing trailing 0)");
    if (clauses.size() != declared_clauses)
        throw ParseError(origin, lineno,
                         "header declares " + std::to_string(declared_clauses) +
                             " clauses but " + std::to_string(clauses.size()) + " were read");
    try {
        return CnfFormula(*num_vars, std::move(clauses));
    } catch (const Error& e) {
        throw ParseError(origin, lineno, e.what());
    }
}

std::string serialize_dimacs(const CnfFormula& f) {
    std::string out =
        "p cnf " + std::to_string(f.num_vars()) + " " + std::to_string(f.num_clauses()) + "\n";
    for (const Clause& c : f.clauses())
        out += std::to_string(c.lits[0]) + " " + std::to_string(c.lits[1]) + " " +
               std::to_string(c.lits[2]) + " 0\n";
    return out;
}

CnfFormula parse_dimacs(const std::filesystem::path& path) {
    return parse_dimacs_text(detail::slurp_file(path), path.string());
}

void write_dimacs(const CnfFormula& f, const std::filesystem::path& path) {
    detail::spit_file(path, serialize_dimacs(f));
}

}  // namespace patlab
