#include "cimp/simplex.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "cimp/error.hpp"

namespace cimp {

void ColumnOracle::column(ColumnIndex j, std::vector<Rational>& out) const {
    out.resize(row_count());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = entry(i, j);
}

DenseOracle::DenseOracle(std::vector<std::vector<Rational>> matrix, std::vector<Rational> rhs,
                         std::vector<Rational> objective)
    : matrix_(std::move(matrix)), rhs_(std::move(rhs)), objective_(std::move(objective)) {
    if (matrix_.size() != rhs_.size())
        throw Error("dense oracle: matrix has " + std::to_string(matrix_.size()) + " rows, rhs has " +
                    std::to_string(rhs_.size()));
    for (const auto& row : matrix_) {
        if (row.size() != objective_.size())
            throw Error("dense oracle: row length does not match objective length");
    }
}

std::optional<Matrix> invert(Matrix m) {
    const std::size_t n = m.size();
    Matrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        while (pivot_row < n && m[pivot_row][col].is_zero())
            ++pivot_row;
        if (pivot_row == n)
            return std::nullopt;
        std::swap(m[pivot_row], m[col]);
        std::swap(inv[pivot_row], inv[col]);

        const Rational scale = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= scale;
            inv[col][j] /= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero())
                continue;
            const Rational factor = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                if (!m[col][j].is_zero())
                    m[r][j] -= factor * m[col][j];
                if (!inv[col][j].is_zero())
                    inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!m[i][j].is_zero() && !v[j].is_zero())
                out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

std::optional<Matrix> basis_inverse(const ColumnOracle& oracle, const std::vector<ColumnIndex>& basis) {
    const std::size_t rows = oracle.row_count();
    Matrix b(rows, std::vector<Rational>(rows));
    std::vector<Rational> col;
    for (std::size_t pos = 0; pos < basis.size(); ++pos) {
        oracle.column(basis[pos], col);
        for (std::size_t i = 0; i < rows; ++i)
            b[i][pos] = col[i];
    }
    return invert(std::move(b));
}

} // namespace

SimplexState make_state(const ColumnOracle& oracle, const BasicSolution& start) {
    const std::size_t rows = oracle.row_count();
    if (start.basis.size() != rows)
        throw Error("starting basis has " + std::to_string(start.basis.size()) + " columns, expected " +
                    std::to_string(rows));
    auto sorted = start.basis;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("starting basis repeats a column");
    if (!sorted.empty() && sorted.back() >= oracle.column_count())
        throw Error("starting basis references a column out of range");

    SimplexState state;
    state.basis = start.basis;
    auto inv = basis_inverse(oracle, state.basis);
    if (!inv)
        throw Error("starting basis is singular");
    state.basis_inverse = std::move(*inv);
    state.basic_values = mat_vec(state.basis_inverse, oracle.rhs());
    if (!start.values.empty() && start.values != state.basic_values)
        throw Error("starting values do not match the basic solution B^-1 b");
    for (const auto& v : state.basic_values) {
        if (v.sign() < 0)
            throw Error("starting basis is infeasible");
    }
    return state;
}

Rational objective_value(const ColumnOracle& oracle, const SimplexState& state) {
    Rational value;
    for (std::size_t i = 0; i < state.basis.size(); ++i) {
        if (!state.basic_values[i].is_zero())
            value += oracle.objective(state.basis[i]) * state.basic_values[i];
    }
    return value;
}

std::optional<ColumnIndex> price(const ColumnOracle& oracle, const SimplexState& state) {
    const std::size_t rows = oracle.row_count();

    // u = c_B^T B^-1
    std::vector<Rational> cost_basis(rows);
    for (std::size_t i = 0; i < rows; ++i)
        cost_basis[i] = oracle.objective(state.basis[i]);
    std::vector<Rational> u(rows);
    for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t i = 0; i < rows; ++i) {
            if (!cost_basis[i].is_zero() && !state.basis_inverse[i][j].is_zero())
                u[j] += cost_basis[i] * state.basis_inverse[i][j];
        }
    }

    auto in_basis = state.basis;
    std::sort(in_basis.begin(), in_basis.end());

    std::vector<Rational> col;
    const ColumnIndex n = oracle.column_count();
    for (ColumnIndex j = 0; j < n; ++j) {
        if (std::binary_search(in_basis.begin(), in_basis.end(), j))
            continue;
        oracle.column(j, col);
        Rational reduced = oracle.objective(j);
        for (std::size_t i = 0; i < rows; ++i) {
            if (!u[i].is_zero() && !col[i].is_zero())
                reduced -= u[i] * col[i];
        }
        if (reduced.sign() > 0)
            return j;
    }
    return std::nullopt;
}

std::optional<std::size_t> ratio_test(const ColumnOracle& oracle, const SimplexState& state, ColumnIndex k,
                                      PivotRule rule) {
    std::vector<Rational> col;
    oracle.column(k, col);
    const auto d = mat_vec(state.basis_inverse, col);

    std::vector<std::size_t> tied;
    for (std::size_t s = 0; s < d.size(); ++s) {
        if (d[s].sign() <= 0)
            continue;
        if (tied.empty()) {
            tied.push_back(s);
            continue;
        }
        // x_s / d_s against x_t / d_t by cross-multiplication.
        const std::size_t t = tied.front();
        const auto lhs = state.basic_values[s] * d[t];
        const auto rhs = state.basic_values[t] * d[s];
        if (lhs < rhs) {
            tied.assign(1, s);
        } else if (lhs == rhs) {
            tied.push_back(s);
        }
    }
    if (tied.empty())
        return std::nullopt;

    if (rule == PivotRule::bland) {
        return *std::min_element(tied.begin(), tied.end(), [&](std::size_t a, std::size_t b) {
            return state.basis[a] < state.basis[b];
        });
    }
    std::size_t best = tied.front();
    std::vector<Rational> best_col;
    oracle.column(state.basis[best], best_col);
    for (std::size_t idx = 1; idx < tied.size(); ++idx) {
        oracle.column(state.basis[tied[idx]], col);
        if (col < best_col) {
            best = tied[idx];
            best_col = col;
        }
    }
    return best;
}

SimplexState pivot(const ColumnOracle& oracle, const SimplexState& state, ColumnIndex entering, std::size_t leaving) {
    SimplexState next;
    next.basis = state.basis;
    next.basis.at(leaving) = entering;
    auto inv = basis_inverse(oracle, next.basis);
    if (!inv)
        throw std::logic_error("pivot produced a singular basis");
    next.basis_inverse = std::move(*inv);
    next.basic_values = mat_vec(next.basis_inverse, oracle.rhs());
    for (const auto& v : next.basic_values) {
        if (v.sign() < 0)
            throw std::logic_error("pivot lost primal feasibility");
    }
    next.iteration = state.iteration + 1;
    return next;
}

SolveOutcome solve_max(const ColumnOracle& oracle, const BasicSolution& start, const SimplexOptions& options) {
    SimplexState state = make_state(oracle, start);
    for (;;) {
        const auto entering = price(oracle, state);
        if (!entering) {
            SolveOutcome out;
            out.status = SolveStatus::optimal;
            out.value = objective_value(oracle, state);
            for (std::size_t i = 0; i < state.basis.size(); ++i) {
                if (!state.basic_values[i].is_zero())
                    out.solution.emplace(state.basis[i], state.basic_values[i]);
            }
            out.basis = state.basis;
            out.iterations = state.iteration;
            return out;
        }
        const auto leaving = ratio_test(oracle, state, *entering, options.rule);
        if (!leaving) {
            SolveOutcome out;
            out.status = SolveStatus::unbounded;
            out.basis = state.basis;
            out.iterations = state.iteration;
            return out;
        }
        if (state.iteration >= options.max_iterations)
            throw LimitExceeded("simplex exceeded " + std::to_string(options.max_iterations) + " iterations");

        const ColumnIndex left = state.basis[*leaving];
        state = pivot(oracle, state, *entering, *leaving);
        if (options.trace) {
            *options.trace << "iteration " << state.iteration << ": enter " << *entering << ", leave " << left
                           << ", value " << objective_value(oracle, state) << '\n';
        }
        if (options.on_pivot)
            options.on_pivot(state);
    }
}

} // namespace cimp
