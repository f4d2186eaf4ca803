#include "cimp/entail.hpp"

#include <ostream>
#include <stdexcept>

#include "cimp/error.hpp"
#include "cimp/rules.hpp"

namespace cimp {

namespace {

struct ProgramResult {
    Rational minimum;
    SparseVector argmin;
    std::size_t iterations = 0;
};

ProgramResult minimise(const ImplicitSystem& sys, Program program, const ConstrainedImplication& query,
                       const EntailOptions& options) {
    const Objective objective(sys, program, query);
    const BasicSolution start = initial_basis(sys);
    if (options.simplex.trace)
        *options.simplex.trace << "program " << (program == Program::min_support ? "support" : "surrogate") << '\n';

    auto run = [&](const ColumnOracle& oracle) {
        const NegatedObjective negated(oracle);
        return solve_max(negated, start, options.simplex);
    };
    SolveOutcome outcome;
    if (options.dense) {
        std::vector<Rational> costs(sys.column_count());
        for (ColumnIndex j = 0; j < sys.column_count(); ++j)
            costs[j] = objective.coeff(j);
        outcome = run(DenseOracle(densify(sys, options.max_materialize), std::move(costs)));
    } else {
        outcome = run(ImplicitOracle(sys, objective));
    }
    // Both objectives are bounded by [-1, 1] on a region where sum x = 1.
    if (outcome.status != SolveStatus::optimal)
        throw std::logic_error("entailment program reported unbounded");

    ProgramResult out;
    out.minimum = -outcome.value;
    out.iterations = outcome.iterations;
    for (const auto& [j, v] : outcome.solution) {
        if (!sys.is_slack(j))
            out.argmin.emplace(j, v);
    }
    return out;
}

std::vector<std::string> universe_for(const RuleSet& rules, const ConstrainedImplication& query,
                                      const std::vector<std::string>& extra) {
    auto base = attribute_universe(rules, query);
    AttrSet all(base.begin(), base.end());
    all.insert(extra.begin(), extra.end());
    return {all.begin(), all.end()};
}

} // namespace

MinPrograms solve_min_programs(const RuleSet& rules, const ConstrainedImplication& query,
                               const EntailOptions& options) {
    MinPrograms out;
    out.universe = universe_for(rules, query, options.extra_attributes);
    const ImplicitSystem sys(out.universe, rules);

    auto supp = minimise(sys, Program::min_support, query, options);
    auto surr = minimise(sys, Program::min_conf_surrogate, query, options);
    out.min_support = std::move(supp.minimum);
    out.support_argmin = std::move(supp.argmin);
    out.min_surrogate = std::move(surr.minimum);
    out.surrogate_argmin = std::move(surr.argmin);
    out.iterations = supp.iterations + surr.iterations;
    return out;
}

Verdict decide_entailment(const RuleSet& rules, const ConstrainedImplication& query, const EntailOptions& options) {
    auto programs = solve_min_programs(rules, query, options);

    Verdict verdict;
    verdict.min_support_value = programs.min_support;
    verdict.min_surrogate_value = programs.min_surrogate;
    if (programs.min_support < query.min_support()) {
        verdict.failing_program = FailingProgram::support;
    } else if (programs.min_surrogate.sign() < 0) {
        verdict.failing_program = FailingProgram::confidence;
    }
    verdict.entailed = !verdict.failing_program;
    if (verdict.entailed)
        return verdict;

    const auto& argmin = *verdict.failing_program == FailingProgram::support ? programs.support_argmin
                                                                             : programs.surrogate_argmin;
    FormalContext witness = witness_context(argmin, programs.universe);
    for (const auto& r : rules) {
        if (!holds(witness, r))
            throw std::logic_error("witness violates premise " + format_rule(r));
    }
    if (holds(witness, query))
        throw std::logic_error("witness satisfies the query " + format_rule(query));
    verdict.witness = std::move(witness);
    return verdict;
}

FormalContext witness_context(const SparseVector& x, const std::vector<std::string>& universe) {
    const ColumnIndex subsets = ColumnIndex{1} << universe.size();
    std::vector<Rational> nonzero;
    Rational total;
    for (const auto& [j, v] : x) {
        if (j >= subsets)
            throw Error("witness: column " + std::to_string(j) + " is not a subset column");
        if (v.sign() < 0)
            throw Error("witness: negative entry " + v.str() + " at column " + std::to_string(j));
        if (!v.is_zero())
            nonzero.push_back(v);
        total += v;
    }
    if (total != 1)
        throw Error("witness: entries sum to " + total.str() + ", expected 1");

    const Integer n = lcm_denominators(nonzero);
    std::vector<std::string> objects;
    std::vector<AttrSet> intents;
    for (const auto& [j, v] : x) {
        if (v.is_zero())
            continue;
        const Integer copies = v.numerator() * (n / v.denominator());
        const AttrSet intent = subset_for_column(universe, j);
        for (Integer c = 0; c < copies; ++c) {
            objects.push_back("o" + std::to_string(objects.size() + 1));
            intents.push_back(intent);
        }
    }
    return FormalContext::from_intents(std::move(objects), universe, intents);
}

std::optional<FormalContext> brute_force_refute(const RuleSet& rules, const ConstrainedImplication& query,
                                                std::size_t max_objects, std::size_t cap) {
    if (max_objects == 0)
        throw Error("brute_force_refute: max_objects must be at least 1");
    const auto universe = attribute_universe(rules, query);
    // Without attributes every rule has support 1 and confidence 1.
    if (universe.empty())
        return std::nullopt;
    if (universe.size() >= 20)
        throw LimitExceeded("brute_force_refute: universe too large");
    const std::size_t intents = std::size_t{1} << universe.size();

    // Multisets of size k from `intents` kinds: C(intents + k - 1, k).
    Integer candidates = 0;
    for (std::size_t k = 1; k <= max_objects; ++k) {
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), intents + k - 1, k);
        candidates += c;
    }
    if (candidates > Integer(std::to_string(cap)))
        throw LimitExceeded("brute_force_refute: " + candidates.get_str() + " candidate contexts exceed the cap of " +
                            std::to_string(cap));

    std::vector<AttrSet> by_index(intents);
    for (std::size_t j = 0; j < intents; ++j)
        by_index[j] = subset_for_column(universe, j);

    for (std::size_t k = 1; k <= max_objects; ++k) {
        std::vector<std::size_t> pick(k, 0); // non-decreasing
        for (;;) {
            std::vector<std::string> names;
            std::vector<AttrSet> rows;
            for (std::size_t g = 0; g < k; ++g) {
                names.push_back("g" + std::to_string(g + 1));
                rows.push_back(by_index[pick[g]]);
            }
            auto ctx = FormalContext::from_intents(std::move(names), universe, rows);
            bool models = true;
            for (const auto& r : rules) {
                if (!holds(ctx, r)) {
                    models = false;
                    break;
                }
            }
            if (models && !holds(ctx, query))
                return ctx;

            std::size_t pos = k;
            while (pos > 0 && pick[pos - 1] == intents - 1)
                --pos;
            if (pos == 0)
                break;
            ++pick[pos - 1];
            for (std::size_t q = pos; q < k; ++q)
                pick[q] = pick[pos - 1];
        }
    }
    return std::nullopt;
}

} // namespace cimp
