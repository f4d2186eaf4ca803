#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cimp/implication.hpp"
#include "cimp/rational.hpp"

namespace cimp {

/// A formal context (G, M, I). Incidence is stored row-major: for every
/// object the sorted list of attribute indices it has.
///
/// Construction does not require G or M to be non-empty; support and
/// confidence evaluation does.
class FormalContext {
public:
    FormalContext() = default;

    /// Throws Error on duplicate names or incidence indices out of range.
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                  std::vector<std::vector<std::size_t>> incidence);

    /// Builds a context from per-object attribute names. The attribute list
    /// is given explicitly so that attributes no object carries survive.
    static FormalContext from_intents(std::vector<std::string> objects, std::vector<std::string> attributes,
                                      const std::vector<AttrSet>& intents);

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<std::string>& attributes() const { return attributes_; }
    const std::vector<std::size_t>& intent(std::size_t object) const { return incidence_.at(object); }

    std::size_t object_count() const { return objects_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }

    bool incident(std::size_t object, std::size_t attribute) const;

    std::optional<std::size_t> attribute_index(std::string_view name) const;
    std::optional<std::size_t> object_index(std::string_view name) const;

    /// Attribute names of one object.
    AttrSet intent_names(std::size_t object) const;

    friend bool operator==(const FormalContext&, const FormalContext&) = default;

private:
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<std::vector<std::size_t>> incidence_;
};

enum class DerivationSide { attributes, objects };

/// side = attributes: A -> A' (objects having every attribute of A).
/// side = objects:    B -> B' (attributes shared by every object of B).
/// Throws Error naming the first unknown element.
std::set<std::string> derivation(const FormalContext& ctx, DerivationSide side, const std::set<std::string>& names);

/// Indices of the objects having all attributes in `attrs`.
std::vector<std::size_t> extent(const FormalContext& ctx, const AttrSet& attrs);

/// |A'| / |G|
Rational support(const FormalContext& ctx, const AttrSet& attrs);

/// |(A ∪ B)'| / |A'|, or 1 when A' is empty.
Rational confidence(const FormalContext& ctx, const AttrSet& premise, const AttrSet& conclusion);

/// K ⊨ (A -> B, s, c). Attributes outside M_K are an error, not an empty extent.
bool holds(const FormalContext& ctx, const ConstrainedImplication& rule);

/// A' ⊆ B'
bool holds_plain(const FormalContext& ctx, const AttrSet& premise, const AttrSet& conclusion);

/// Drops every attribute not in `keep`; object list is unchanged and the
/// remaining attributes keep their relative order. `keep` must be ⊆ M_K.
FormalContext restrict_attributes(const FormalContext& ctx, const AttrSet& keep);

/// Burmeister CXT.
FormalContext parse_cxt(std::string_view text);
std::string serialize_cxt(const FormalContext& ctx);

} // namespace cimp
