#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cimp/context.hpp"
#include "cimp/implication.hpp"
#include "cimp/lp.hpp"
#include "cimp/simplex.hpp"

namespace cimp {

struct EntailOptions {
    SimplexOptions simplex;
    /// Solve over the materialised system instead of the implicit oracle.
    bool dense = false;
    std::size_t max_materialize = kDefaultMaterializeCap;
    /// Attributes added to the universe beyond those the rules mention.
    std::vector<std::string> extra_attributes;
};

struct MinPrograms {
    std::vector<std::string> universe;
    Rational min_support;
    Rational min_surrogate;
    /// Optimal x over subset columns only.
    SparseVector support_argmin;
    SparseVector surrogate_argmin;
    std::size_t iterations = 0;
};

/// Minimises sum_{X ⊇ A} x_X and sum_{X ⊇ A∪B} x_X - c sum_{X ⊇ A} x_X over
/// all frequency vectors satisfying the rules, starting from initial_basis().
MinPrograms solve_min_programs(const RuleSet& rules, const ConstrainedImplication& query,
                               const EntailOptions& options = {});

enum class FailingProgram { support, confidence };

struct Verdict {
    bool entailed = false;
    std::optional<FailingProgram> failing_program;
    Rational min_support_value;
    Rational min_surrogate_value;
    /// Present iff not entailed: a model of the rules that violates the query.
    std::optional<FormalContext> witness;
};

/// Decides rules ⊨ query. A refuting witness is re-checked exactly against
/// every rule and the query before it is returned.
Verdict decide_entailment(const RuleSet& rules, const ConstrainedImplication& query, const EntailOptions& options = {});

/// Context with x_X * n objects of intent X, n the least common denominator
/// of the nonzero entries. Objects are named o1..on in column order.
/// Throws Error unless x >= 0, sum x = 1 and every column is a subset column.
FormalContext witness_context(const SparseVector& x, const std::vector<std::string>& universe);

inline constexpr std::size_t kDefaultRefuteCap = 2'000'000;

/// Exhaustive search for a model of `rules` violating `query` among contexts
/// with 1..max_objects objects over the rule universe. Sound but incomplete.
/// Throws LimitExceeded when the number of candidate contexts exceeds `cap`.
std::optional<FormalContext> brute_force_refute(const RuleSet& rules, const ConstrainedImplication& query,
                                                std::size_t max_objects, std::size_t cap = kDefaultRefuteCap);

} // namespace cimp
