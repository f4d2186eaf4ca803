#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cimp/context.hpp"
#include "cimp/implication.hpp"

namespace cimp {

/// Contents of a rule file: the premises L and an optional "?" query.
struct RuleFile {
    RuleSet rules;
    std::optional<ConstrainedImplication> query;
};

/// Union of all attributes mentioned by `rules` and `query`, sorted by name.
/// This ordering is the column ordering of the linear system.
std::vector<std::string> attribute_universe(const RuleSet& rules, const ConstrainedImplication& query);
std::vector<std::string> attribute_universe(const RuleSet& rules);

/// Line-oriented grammar:
///
///   # comment
///   {a, b} -> {c} [s=1/2, c=1/3]
///   ? {a} -> {c} [s=1/4, c=1/3]
///
/// Throws ParseError with the offending line number.
RuleFile parse_rule_file(std::string_view text);

std::string format_set(const AttrSet& set);
/// "{a} -> {b} [s=1/2, c=1/3]"
std::string format_rule(const ConstrainedImplication& rule);
std::string format_rule_file(const RuleFile& file);

/// Every (A -> B) with B non-empty, A ∩ B = ∅, supp(A) >= min_support and
/// conf(A -> B) >= min_confidence, annotated with its achieved support and
/// confidence. Sorted by (|A|, A, |B|, B).
std::vector<ConstrainedImplication> mine_rules(const FormalContext& ctx, const Rational& min_support,
                                               const Rational& min_confidence);

/// Largest attribute count mine_rules accepts (enumeration is 3^|M|).
inline constexpr std::size_t kMaxMiningAttributes = 16;

} // namespace cimp
