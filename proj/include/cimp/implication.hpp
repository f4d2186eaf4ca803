#pragma once

#include <set>
#include <string>
#include <vector>

#include "cimp/rational.hpp"

namespace cimp {

/// Set of attribute names, kept sorted.
using AttrSet = std::set<std::string>;

/// An implication A -> B annotated with a minimum support s and a minimum
/// confidence c, both in [0, 1].
class ConstrainedImplication {
public:
    /// Throws Error when s or c lies outside [0, 1].
    ConstrainedImplication(AttrSet premise, AttrSet conclusion, Rational min_support, Rational min_confidence);

    const AttrSet& premise() const { return premise_; }
    const AttrSet& conclusion() const { return conclusion_; }
    const Rational& min_support() const { return min_support_; }
    const Rational& min_confidence() const { return min_confidence_; }

    /// premise ∪ conclusion
    AttrSet attributes() const;

    /// Same implication with different thresholds.
    ConstrainedImplication with_thresholds(Rational min_support, Rational min_confidence) const;

    friend bool operator==(const ConstrainedImplication&, const ConstrainedImplication&) = default;

private:
    AttrSet premise_;
    AttrSet conclusion_;
    Rational min_support_;
    Rational min_confidence_;
};

/// Order matters only for row indexing of the linear system; duplicates are allowed.
using RuleSet = std::vector<ConstrainedImplication>;

} // namespace cimp
