#include "cimp/context.hpp"

#include <algorithm>
#include <unordered_set>

#include "cimp/error.hpp"

namespace cimp {

namespace {

void require_distinct(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second)
            throw Error(std::string("duplicate ") + what + " name '" + n + "'");
    }
}

void require_evaluable(const FormalContext& ctx) {
    if (ctx.object_count() == 0 || ctx.attribute_count() == 0)
        throw Error("context must have at least one object and one attribute");
}

std::vector<std::size_t> attribute_indices(const FormalContext& ctx, const AttrSet& attrs) {
    std::vector<std::size_t> out;
    out.reserve(attrs.size());
    for (const auto& a : attrs) {
        auto idx = ctx.attribute_index(a);
        if (!idx)
            throw Error("unknown attribute '" + a + "'");
        out.push_back(*idx);
    }
    return out;
}

} // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<std::vector<std::size_t>> incidence)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), incidence_(std::move(incidence)) {
    require_distinct(objects_, "object");
    require_distinct(attributes_, "attribute");
    if (incidence_.size() != objects_.size())
        throw Error("incidence has " + std::to_string(incidence_.size()) + " rows for " +
                    std::to_string(objects_.size()) + " objects");
    for (auto& row : incidence_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        if (!row.empty() && row.back() >= attributes_.size())
            throw Error("incidence references attribute index " + std::to_string(row.back()) + " out of range");
    }
}

FormalContext FormalContext::from_intents(std::vector<std::string> objects, std::vector<std::string> attributes,
                                          const std::vector<AttrSet>& intents) {
    std::vector<std::vector<std::size_t>> incidence;
    incidence.reserve(intents.size());
    for (const auto& intent : intents) {
        std::vector<std::size_t> row;
        for (const auto& name : intent) {
            auto it = std::find(attributes.begin(), attributes.end(), name);
            if (it == attributes.end())
                throw Error("unknown attribute '" + name + "'");
            row.push_back(static_cast<std::size_t>(it - attributes.begin()));
        }
        incidence.push_back(std::move(row));
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(incidence));
}

bool FormalContext::incident(std::size_t object, std::size_t attribute) const {
    const auto& row = incidence_.at(object);
    return std::binary_search(row.begin(), row.end(), attribute);
}

std::optional<std::size_t> FormalContext::attribute_index(std::string_view name) const {
    auto it = std::find(attributes_.begin(), attributes_.end(), name);
    if (it == attributes_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - attributes_.begin());
}

std::optional<std::size_t> FormalContext::object_index(std::string_view name) const {
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - objects_.begin());
}

AttrSet FormalContext::intent_names(std::size_t object) const {
    AttrSet out;
    for (auto m : incidence_.at(object))
        out.insert(attributes_[m]);
    return out;
}

std::vector<std::size_t> extent(const FormalContext& ctx, const AttrSet& attrs) {
    const auto wanted = attribute_indices(ctx, attrs);
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        const auto& row = ctx.intent(g);
        if (std::all_of(wanted.begin(), wanted.end(),
                        [&](std::size_t m) { return std::binary_search(row.begin(), row.end(), m); }))
            out.push_back(g);
    }
    return out;
}

std::set<std::string> derivation(const FormalContext& ctx, DerivationSide side, const std::set<std::string>& names) {
    std::set<std::string> out;
    if (side == DerivationSide::attributes) {
        for (auto g : extent(ctx, names))
            out.insert(ctx.objects()[g]);
        return out;
    }
    std::vector<std::size_t> objs;
    for (const auto& n : names) {
        auto idx = ctx.object_index(n);
        if (!idx)
            throw Error("unknown object '" + n + "'");
        objs.push_back(*idx);
    }
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
        if (std::all_of(objs.begin(), objs.end(), [&](std::size_t g) { return ctx.incident(g, m); }))
            out.insert(ctx.attributes()[m]);
    }
    return out;
}

Rational support(const FormalContext& ctx, const AttrSet& attrs) {
    require_evaluable(ctx);
    auto n = static_cast<long>(extent(ctx, attrs).size());
    return Rational(n, static_cast<long>(ctx.object_count()));
}

Rational confidence(const FormalContext& ctx, const AttrSet& premise, const AttrSet& conclusion) {
    require_evaluable(ctx);
    auto premise_extent = static_cast<long>(extent(ctx, premise).size());
    AttrSet both = premise;
    both.insert(conclusion.begin(), conclusion.end());
    auto both_extent = static_cast<long>(extent(ctx, both).size());
    if (premise_extent == 0)
        return Rational(1);
    return Rational(both_extent, premise_extent);
}

bool holds(const FormalContext& ctx, const ConstrainedImplication& rule) {
    return support(ctx, rule.premise()) >= rule.min_support() &&
           confidence(ctx, rule.premise(), rule.conclusion()) >= rule.min_confidence();
}

bool holds_plain(const FormalContext& ctx, const AttrSet& premise, const AttrSet& conclusion) {
    auto a = extent(ctx, premise);
    auto b = extent(ctx, conclusion);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FormalContext restrict_attributes(const FormalContext& ctx, const AttrSet& keep) {
    attribute_indices(ctx, keep); // validates keep ⊆ M_K

    std::vector<std::string> attributes;
    std::vector<std::size_t> remap(ctx.attribute_count(), ctx.attribute_count());
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
        if (keep.contains(ctx.attributes()[m])) {
            remap[m] = attributes.size();
            attributes.push_back(ctx.attributes()[m]);
        }
    }
    std::vector<std::vector<std::size_t>> incidence;
    incidence.reserve(ctx.object_count());
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        std::vector<std::size_t> row;
        for (auto m : ctx.intent(g)) {
            if (remap[m] != ctx.attribute_count())
                row.push_back(remap[m]);
        }
        incidence.push_back(std::move(row));
    }
    return FormalContext(ctx.objects(), std::move(attributes), std::move(incidence));
}

} // namespace cimp
