#include "cimp/lp.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "cimp/error.hpp"

namespace cimp {

AttrSet subset_for_column(const std::vector<std::string>& universe, ColumnIndex j) {
    const std::size_t p = universe.size();
    if (p < 64 && j >= (ColumnIndex{1} << p))
        throw Error("column " + std::to_string(j) + " is not a subset column");
    AttrSet out;
    for (std::size_t pos = 0; pos < p; ++pos) {
        if (j & (ColumnIndex{1} << (p - 1 - pos)))
            out.insert(universe[pos]);
    }
    return out;
}

ColumnIndex column_for_subset(const std::vector<std::string>& universe, const AttrSet& set) {
    const std::size_t p = universe.size();
    ColumnIndex j = 0;
    for (const auto& name : set) {
        auto it = std::find(universe.begin(), universe.end(), name);
        if (it == universe.end())
            throw Error("attribute '" + name + "' is not in the universe");
        j |= ColumnIndex{1} << (p - 1 - static_cast<std::size_t>(it - universe.begin()));
    }
    return j;
}

ImplicitSystem::ImplicitSystem(std::vector<std::string> universe, RuleSet rules)
    : universe_(std::move(universe)), rules_(std::move(rules)) {
    if (universe_.size() > kMaxUniverse)
        throw LimitExceeded("universe of " + std::to_string(universe_.size()) + " attributes exceeds the limit of " +
                            std::to_string(kMaxUniverse));
    std::unordered_set<std::string_view> seen;
    for (const auto& name : universe_) {
        if (!seen.insert(name).second)
            throw Error("duplicate attribute '" + name + "' in universe");
    }
    masks_.reserve(rules_.size());
    rhs_.reserve(2 * rules_.size() + 2);
    for (const auto& r : rules_) {
        masks_.push_back({mask_of(r.premise()), mask_of(r.attributes()), -r.min_confidence(),
                          Rational(1) - r.min_confidence()});
        rhs_.push_back(r.min_support());
        rhs_.emplace_back(0);
    }
    rhs_.emplace_back(1);
    rhs_.emplace_back(-1);
}

const Rational& ImplicitSystem::subset_entry(std::size_t i, ColumnIndex j) const {
    const std::size_t m = rules_.size();
    if (i == 2 * m)
        return one_;
    if (i == 2 * m + 1)
        return minus_one_;
    const auto& rule = masks_[i / 2];
    const bool has_premise = (j & rule.premise) == rule.premise;
    if (i % 2 == 0)
        return has_premise ? one_ : zero_;
    if (!has_premise)
        return zero_;
    return (j & rule.both) == rule.both ? rule.one_minus_confidence : rule.neg_confidence;
}

const Rational& ImplicitSystem::entry(std::size_t i, ColumnIndex j) const {
    if (i >= row_count() || j >= column_count())
        throw Error("matrix index (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    if (is_slack(j))
        return j - subset_column_count() == i ? minus_one_ : zero_;
    return subset_entry(i, j);
}

void ImplicitSystem::column(ColumnIndex j, std::vector<Rational>& out) const {
    if (j >= column_count())
        throw Error("column " + std::to_string(j) + " out of range");
    out.resize(row_count());
    if (is_slack(j)) {
        std::fill(out.begin(), out.end(), zero_);
        out[j - subset_column_count()] = minus_one_;
        return;
    }
    for (std::size_t i = 0; i < row_count(); ++i)
        out[i] = subset_entry(i, j);
}

Objective::Objective(const ImplicitSystem& sys, Program program, const ConstrainedImplication& query)
    : subset_columns_(sys.subset_column_count()), column_count_(sys.column_count()), program_(program),
      premise_(sys.mask_of(query.premise())), both_(sys.mask_of(query.attributes())),
      neg_confidence_(-query.min_confidence()), one_minus_confidence_(Rational(1) - query.min_confidence()) {}

const Rational& Objective::coeff(ColumnIndex j) const {
    if (j >= column_count_)
        throw Error("column " + std::to_string(j) + " out of range");
    if (j >= subset_columns_ || (j & premise_) != premise_)
        return zero_;
    if (program_ == Program::min_support)
        return one_;
    return (j & both_) == both_ ? one_minus_confidence_ : neg_confidence_;
}

SparseVector BasicSolution::sparse() const {
    SparseVector out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!values[i].is_zero())
            out.emplace(basis[i], values[i]);
    }
    return out;
}

BasicSolution initial_basis(const ImplicitSystem& sys) {
    const ColumnIndex full = sys.subset_column_count() - 1;
    const std::size_t rows = sys.row_count();

    BasicSolution start;
    start.basis.push_back(full);
    start.values.emplace_back(1);
    // y_i = (A e_M)_i - b_i; the last row's slack stays non-basic at zero.
    for (std::size_t i = 0; i + 1 < rows; ++i) {
        start.basis.push_back(sys.subset_column_count() + i);
        start.values.push_back(sys.entry(i, full) - sys.rhs()[i]);
    }
    return start;
}

std::string DenseSystem::to_tsv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        for (const auto& v : matrix[i])
            out << v << '\t';
        out << rhs[i] << '\n';
    }
    return out.str();
}

DenseSystem densify(const ImplicitSystem& sys, std::size_t max_universe) {
    if (sys.universe().size() > max_universe)
        throw LimitExceeded("universe of " + std::to_string(sys.universe().size()) +
                            " attributes exceeds the materialization cap of " + std::to_string(max_universe) +
                            "; use the implicit solver");
    DenseSystem out;
    out.rhs = sys.rhs();
    out.matrix.assign(sys.row_count(), std::vector<Rational>(sys.column_count()));
    for (std::size_t i = 0; i < sys.row_count(); ++i) {
        for (ColumnIndex j = 0; j < sys.column_count(); ++j)
            out.matrix[i][j] = sys.entry(i, j);
    }
    return out;
}

SparseVector frequency_vector(const FormalContext& ctx, const std::vector<std::string>& universe) {
    if (ctx.object_count() == 0)
        throw Error("context must have at least one object");
    // Column bit per context attribute, or none when outside the universe.
    std::vector<ColumnIndex> bit(ctx.attribute_count(), 0);
    for (std::size_t pos = 0; pos < universe.size(); ++pos) {
        auto idx = ctx.attribute_index(universe[pos]);
        if (!idx)
            throw Error("attribute '" + universe[pos] + "' is not in the context");
        bit[*idx] = ColumnIndex{1} << (universe.size() - 1 - pos);
    }
    std::map<ColumnIndex, long> counts;
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        ColumnIndex j = 0;
        for (auto m : ctx.intent(g))
            j |= bit[m];
        ++counts[j];
    }
    SparseVector out;
    const long n = static_cast<long>(ctx.object_count());
    for (auto [j, c] : counts)
        out.emplace(j, Rational(c, n));
    return out;
}

} // namespace cimp
