#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "cimp/lp.hpp"
#include "cimp/rational.hpp"

namespace cimp {

/// Column-wise access to max{ c^T x | Ax = b, x >= 0 }. A must have full
/// row rank. Implementations must be pure.
class ColumnOracle {
public:
    virtual ~ColumnOracle() = default;

    virtual std::size_t row_count() const = 0;
    virtual ColumnIndex column_count() const = 0;
    virtual const std::vector<Rational>& rhs() const = 0;
    virtual Rational entry(std::size_t i, ColumnIndex j) const = 0;
    virtual Rational objective(ColumnIndex j) const = 0;

    /// Column j of A into `out`. The default goes through entry().
    virtual void column(ColumnIndex j, std::vector<Rational>& out) const;
};

/// (A, -I) computed on the fly, objective from an Objective.
class ImplicitOracle final : public ColumnOracle {
public:
    ImplicitOracle(const ImplicitSystem& sys, const Objective& obj) : sys_(sys), obj_(obj) {}

    std::size_t row_count() const override { return sys_.row_count(); }
    ColumnIndex column_count() const override { return sys_.column_count(); }
    const std::vector<Rational>& rhs() const override { return sys_.rhs(); }
    Rational entry(std::size_t i, ColumnIndex j) const override { return sys_.entry(i, j); }
    Rational objective(ColumnIndex j) const override { return obj_.coeff(j); }
    void column(ColumnIndex j, std::vector<Rational>& out) const override { sys_.column(j, out); }

private:
    const ImplicitSystem& sys_;
    const Objective& obj_;
};

/// Fully materialised matrix and objective.
class DenseOracle final : public ColumnOracle {
public:
    /// Throws Error when dimensions disagree.
    DenseOracle(std::vector<std::vector<Rational>> matrix, std::vector<Rational> rhs, std::vector<Rational> objective);
    DenseOracle(const DenseSystem& sys, std::vector<Rational> objective)
        : DenseOracle(sys.matrix, sys.rhs, std::move(objective)) {}

    std::size_t row_count() const override { return rhs_.size(); }
    ColumnIndex column_count() const override { return objective_.size(); }
    const std::vector<Rational>& rhs() const override { return rhs_; }
    Rational entry(std::size_t i, ColumnIndex j) const override { return matrix_.at(i).at(j); }
    Rational objective(ColumnIndex j) const override { return objective_.at(j); }

private:
    std::vector<std::vector<Rational>> matrix_;
    std::vector<Rational> rhs_;
    std::vector<Rational> objective_;
};

/// Same constraints, objective multiplied by -1. Used to minimise.
class NegatedObjective final : public ColumnOracle {
public:
    explicit NegatedObjective(const ColumnOracle& inner) : inner_(inner) {}

    std::size_t row_count() const override { return inner_.row_count(); }
    ColumnIndex column_count() const override { return inner_.column_count(); }
    const std::vector<Rational>& rhs() const override { return inner_.rhs(); }
    Rational entry(std::size_t i, ColumnIndex j) const override { return inner_.entry(i, j); }
    Rational objective(ColumnIndex j) const override { return -inner_.objective(j); }
    void column(ColumnIndex j, std::vector<Rational>& out) const override { inner_.column(j, out); }

private:
    const ColumnOracle& inner_;
};

using Matrix = std::vector<std::vector<Rational>>;

enum class PivotRule {
    /// First improving column enters; ratio ties leave by smallest column index.
    bland,
    /// First improving column enters; ratio ties leave by the lexicographically
    /// smallest constraint column.
    lexicographic,
};

struct SimplexState {
    std::vector<ColumnIndex> basis;
    Matrix basis_inverse;
    std::vector<Rational> basic_values;
    std::size_t iteration = 0;
};

struct SimplexOptions {
    PivotRule rule = PivotRule::bland;
    std::size_t max_iterations = 1'000'000;
    /// Per-pivot trace lines when non-null.
    std::ostream* trace = nullptr;
    /// Called with the new state after every pivot.
    std::function<void(const SimplexState&)> on_pivot;
};

enum class SolveStatus { optimal, unbounded };

struct SolveOutcome {
    SolveStatus status = SolveStatus::optimal;
    Rational value;          // optimal only
    SparseVector solution;   // optimal only; nonzero basic values
    std::vector<ColumnIndex> basis;
    std::size_t iterations = 0;
};

/// Exact Gauss-Jordan inverse; nullopt when singular.
std::optional<Matrix> invert(Matrix m);

/// Builds the state for a starting basis. Throws Error if the basis is
/// singular, has repeated columns, or does not reproduce `start.values`
/// as a non-negative solution.
SimplexState make_state(const ColumnOracle& oracle, const BasicSolution& start);

/// c_B^T x_B
Rational objective_value(const ColumnOracle& oracle, const SimplexState& state);

/// Smallest non-basic column with positive reduced cost c_j - u a_j, where
/// u = c_B^T B^-1 is computed once. nullopt means the state is optimal.
std::optional<ColumnIndex> price(const ColumnOracle& oracle, const SimplexState& state);

/// Basis position that leaves when column k enters, or nullopt when
/// d = B^-1 a_k has no positive entry (unbounded).
std::optional<std::size_t> ratio_test(const ColumnOracle& oracle, const SimplexState& state, ColumnIndex k,
                                      PivotRule rule = PivotRule::bland);

/// Replaces basis position `leaving` by column `entering` and recomputes
/// B^-1 and x_B.
SimplexState pivot(const ColumnOracle& oracle, const SimplexState& state, ColumnIndex entering, std::size_t leaving);

/// Revised simplex from a feasible basis. Throws LimitExceeded past
/// options.max_iterations pivots.
SolveOutcome solve_max(const ColumnOracle& oracle, const BasicSolution& start, const SimplexOptions& options = {});

} // namespace cimp
