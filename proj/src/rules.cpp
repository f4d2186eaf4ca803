#include "cimp/rules.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

#include "cimp/error.hpp"

namespace cimp {

ConstrainedImplication::ConstrainedImplication(AttrSet premise, AttrSet conclusion, Rational min_support,
                                               Rational min_confidence)
    : premise_(std::move(premise)), conclusion_(std::move(conclusion)), min_support_(std::move(min_support)),
      min_confidence_(std::move(min_confidence)) {
    if (min_support_ < 0 || min_support_ > 1)
        throw Error("support out of range: " + min_support_.str());
    if (min_confidence_ < 0 || min_confidence_ > 1)
        throw Error("confidence out of range: " + min_confidence_.str());
}

AttrSet ConstrainedImplication::attributes() const {
    AttrSet out = premise_;
    out.insert(conclusion_.begin(), conclusion_.end());
    return out;
}

ConstrainedImplication ConstrainedImplication::with_thresholds(Rational min_support, Rational min_confidence) const {
    return ConstrainedImplication(premise_, conclusion_, std::move(min_support), std::move(min_confidence));
}

std::vector<std::string> attribute_universe(const RuleSet& rules) {
    AttrSet all;
    for (const auto& r : rules) {
        all.insert(r.premise().begin(), r.premise().end());
        all.insert(r.conclusion().begin(), r.conclusion().end());
    }
    return {all.begin(), all.end()};
}

std::vector<std::string> attribute_universe(const RuleSet& rules, const ConstrainedImplication& query) {
    AttrSet all = query.attributes();
    for (const auto& name : attribute_universe(rules))
        all.insert(name);
    return {all.begin(), all.end()};
}

namespace {

class RuleLineParser {
public:
    RuleLineParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    ConstrainedImplication rule() {
        AttrSet premise = set();
        expect("->");
        AttrSet conclusion = set();
        expect("[");
        expect("s");
        expect("=");
        Rational s = rational();
        expect(",");
        expect("c");
        expect("=");
        Rational c = rational();
        expect("]");
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing text '" + std::string(text_.substr(pos_)) + "'");
        if (s < 0 || s > 1)
            fail("support out of range");
        if (c < 0 || c > 1)
            fail("confidence out of range");
        return ConstrainedImplication(std::move(premise), std::move(conclusion), std::move(s), std::move(c));
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(std::string_view token) {
        skip_ws();
        if (text_.substr(pos_, token.size()) != token)
            fail("expected '" + std::string(token) + "'");
        pos_ += token.size();
    }

    bool peek(char ch) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == ch;
    }

    static bool name_char(char ch) {
        return ch != ',' && ch != '{' && ch != '}' && !std::isspace(static_cast<unsigned char>(ch));
    }

    AttrSet set() {
        expect("{");
        AttrSet out;
        if (peek('}')) {
            ++pos_;
            return out;
        }
        for (;;) {
            skip_ws();
            auto start = pos_;
            while (pos_ < text_.size() && name_char(text_[pos_]))
                ++pos_;
            if (pos_ == start)
                fail("empty attribute name");
            out.emplace(text_.substr(start, pos_ - start));
            if (peek(',')) {
                ++pos_;
                continue;
            }
            expect("}");
            return out;
        }
    }

    Rational rational() {
        skip_ws();
        auto start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                                       text_[pos_] == '-' || text_[pos_] == '+'))
            ++pos_;
        try {
            return Rational::parse(text_.substr(start, pos_ - start));
        } catch (const Error& e) {
            fail(e.what());
        }
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

RuleFile parse_rule_file(std::string_view text) {
    RuleFile out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);

        line = trim(line);
        if (line.empty() || line.front() == '#')
            continue;
        if (line.front() == '?') {
            if (out.query)
                throw ParseError("duplicate query", line_no);
            out.query = RuleLineParser(line.substr(1), line_no).rule();
        } else {
            out.rules.push_back(RuleLineParser(line, line_no).rule());
        }
    }
    return out;
}

std::string format_set(const AttrSet& set) {
    std::string out = "{";
    bool first = true;
    for (const auto& name : set) {
        if (!first)
            out += ", ";
        out += name;
        first = false;
    }
    return out + "}";
}

std::string format_rule(const ConstrainedImplication& rule) {
    return format_set(rule.premise()) + " -> " + format_set(rule.conclusion()) + " [s=" + rule.min_support().str() +
           ", c=" + rule.min_confidence().str() + "]";
}

std::string format_rule_file(const RuleFile& file) {
    std::string out;
    for (const auto& r : file.rules)
        out += format_rule(r) + "\n";
    if (file.query)
        out += "? " + format_rule(*file.query) + "\n";
    return out;
}

std::vector<ConstrainedImplication> mine_rules(const FormalContext& ctx, const Rational& min_support,
                                               const Rational& min_confidence) {
    if (min_support < 0 || min_support > 1)
        throw Error("minimum support out of range: " + min_support.str());
    if (min_confidence < 0 || min_confidence > 1)
        throw Error("minimum confidence out of range: " + min_confidence.str());
    if (ctx.object_count() == 0 || ctx.attribute_count() == 0)
        throw Error("context must have at least one object and one attribute");
    const std::size_t p = ctx.attribute_count();
    if (p > kMaxMiningAttributes)
        throw LimitExceeded("mining supports at most " + std::to_string(kMaxMiningAttributes) + " attributes, got " +
                            std::to_string(p));

    // covered[X] = |X'|, via a superset-sum over exact intents.
    const std::uint32_t full = (std::uint32_t{1} << p) - 1;
    std::vector<long> covered(std::size_t{1} << p, 0);
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        std::uint32_t mask = 0;
        for (auto m : ctx.intent(g))
            mask |= std::uint32_t{1} << m;
        ++covered[mask];
    }
    for (std::size_t bit = 0; bit < p; ++bit) {
        for (std::uint32_t x = 0; x <= full; ++x) {
            if (!(x & (std::uint32_t{1} << bit)))
                covered[x] += covered[x | (std::uint32_t{1} << bit)];
        }
    }

    auto names = [&](std::uint32_t mask) {
        AttrSet out;
        for (std::size_t m = 0; m < p; ++m)
            if (mask & (std::uint32_t{1} << m))
                out.insert(ctx.attributes()[m]);
        return out;
    };

    const long n = static_cast<long>(ctx.object_count());
    std::vector<ConstrainedImplication> out;
    for (std::uint32_t a = 0; a <= full; ++a) {
        Rational supp(covered[a], n);
        if (supp < min_support)
            continue;
        const std::uint32_t rest = full & ~a;
        // Non-empty submasks of the complement.
        for (std::uint32_t b = rest; b != 0; b = (b - 1) & rest) {
            Rational conf = covered[a] == 0 ? Rational(1) : Rational(covered[a | b], covered[a]);
            if (conf < min_confidence)
                continue;
            out.emplace_back(names(a), names(b), supp, std::move(conf));
        }
    }
    std::sort(out.begin(), out.end(), [](const ConstrainedImplication& x, const ConstrainedImplication& y) {
        if (x.premise().size() != y.premise().size())
            return x.premise().size() < y.premise().size();
        if (x.premise() != y.premise())
            return x.premise() < y.premise();
        if (x.conclusion().size() != y.conclusion().size())
            return x.conclusion().size() < y.conclusion().size();
        return x.conclusion() < y.conclusion();
    });
    return out;
}

} // namespace cimp
