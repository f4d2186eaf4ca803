#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cimp/context.hpp"
#include "cimp/implication.hpp"
#include "cimp/rational.hpp"

namespace cimp {

using ColumnIndex = std::uint64_t;

/// Sparse vector over columns; absent entries are zero.
using SparseVector = std::map<ColumnIndex, Rational>;

/// Column j < 2^p stands for the attribute subset whose characteristic
/// vector is the binary representation of j, with universe[0] as the most
/// significant bit. Throws Error for j >= 2^p.
AttrSet subset_for_column(const std::vector<std::string>& universe, ColumnIndex j);
/// Inverse of subset_for_column. Throws Error for names outside the universe.
ColumnIndex column_for_subset(const std::vector<std::string>& universe, const AttrSet& set);

/// Largest universe an ImplicitSystem accepts; column indices must fit in 64 bits.
inline constexpr std::size_t kMaxUniverse = 62;
/// Default cap on |M| for densify().
inline constexpr std::size_t kDefaultMaterializeCap = 16;

/// The system (A, -I)(x, y) = b, x, y >= 0 for a rule set over a fixed
/// attribute universe, never stored explicitly.
///
/// Rows come in pairs per rule k (0-based):
///   2k      support:    sum_{X ⊇ A_k} x_X - y_2k = s_k
///   2k+1    confidence: sum_{X ⊇ A_k ∪ B_k} x_X - c_k sum_{X ⊇ A_k} x_X - y_2k+1 = 0
/// followed by the two halves of sum x = 1:
///   2m      sum x - y_2m = 1
///   2m+1    -sum x - y_2m+1 = -1
///
/// Columns 0 .. 2^p-1 are the subset variables x, columns 2^p + i is the
/// slack of row i.
class ImplicitSystem {
public:
    /// Throws Error if the universe has duplicates, is larger than
    /// kMaxUniverse, or misses an attribute used by a rule.
    ImplicitSystem(std::vector<std::string> universe, RuleSet rules);

    const std::vector<std::string>& universe() const { return universe_; }
    const RuleSet& rules() const { return rules_; }
    const std::vector<Rational>& rhs() const { return rhs_; }

    std::size_t row_count() const { return rhs_.size(); }
    ColumnIndex subset_column_count() const { return ColumnIndex{1} << universe_.size(); }
    ColumnIndex column_count() const { return subset_column_count() + row_count(); }
    bool is_slack(ColumnIndex j) const { return j >= subset_column_count(); }

    ColumnIndex set_to_index(const AttrSet& set) const { return column_for_subset(universe_, set); }
    AttrSet index_to_set(ColumnIndex j) const { return subset_for_column(universe_, j); }
    /// Bit mask of `set` using the column convention.
    ColumnIndex mask_of(const AttrSet& set) const { return column_for_subset(universe_, set); }

    /// Entry (i, j) of (A, -I). Throws Error when out of range.
    const Rational& entry(std::size_t i, ColumnIndex j) const;

    /// Writes column j into `out` (size row_count()).
    void column(ColumnIndex j, std::vector<Rational>& out) const;

private:
    struct RuleMasks {
        ColumnIndex premise;
        ColumnIndex both;
        Rational neg_confidence;       // -c
        Rational one_minus_confidence; // 1 - c
    };

    const Rational& subset_entry(std::size_t i, ColumnIndex j) const;

    std::vector<std::string> universe_;
    RuleSet rules_;
    std::vector<RuleMasks> masks_;
    std::vector<Rational> rhs_;
    Rational zero_{0};
    Rational one_{1};
    Rational minus_one_{-1};
};

enum class Program { min_support, min_conf_surrogate };

/// Objective coefficients of the two minimisation programs for a query
/// (A -> B, s, c):
///   min_support:         sum_{X ⊇ A} x_X
///   min_conf_surrogate:  sum_{X ⊇ A ∪ B} x_X - c sum_{X ⊇ A} x_X
/// Slack columns carry no weight.
class Objective {
public:
    /// Throws Error if the query mentions attributes outside the universe.
    Objective(const ImplicitSystem& sys, Program program, const ConstrainedImplication& query);

    Program program() const { return program_; }
    const Rational& coeff(ColumnIndex j) const;

private:
    ColumnIndex subset_columns_;
    ColumnIndex column_count_;
    Program program_;
    ColumnIndex premise_;
    ColumnIndex both_;
    Rational neg_confidence_;
    Rational one_minus_confidence_;
    Rational zero_{0};
    Rational one_{1};
};

/// A basic feasible solution: values[i] belongs to column basis[i]; every
/// other column is zero.
struct BasicSolution {
    std::vector<ColumnIndex> basis;
    std::vector<Rational> values;

    SparseVector sparse() const;
};

/// x_M = 1, every other x zero, y = Ax - b. The basis is the x_M column plus
/// the slacks of all rows except the last one; it is nonsingular and the
/// solution is feasible for every well-formed rule set.
BasicSolution initial_basis(const ImplicitSystem& sys);

struct DenseSystem {
    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> rhs;

    /// Row-major TSV, one matrix row per line followed by its rhs value.
    std::string to_tsv() const;
};

/// Materialises (A, -I) and b. Throws LimitExceeded when |M| > max_universe.
DenseSystem densify(const ImplicitSystem& sys, std::size_t max_universe = kDefaultMaterializeCap);

/// Frequency vector x_K: x_X = |{g : g' ∩ M = X}| / |G| over the given
/// universe, which must be a subset of the context's attributes.
SparseVector frequency_vector(const FormalContext& ctx, const std::vector<std::string>& universe);

} // namespace cimp
