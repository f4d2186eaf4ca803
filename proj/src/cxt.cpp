// Burmeister CXT reader/writer.
//
//   B
//   <blank>
//   <object count>
//   <attribute count>
//   <blank>
//   <object names, one per line>
//   <attribute names, one per line>
//   <one row per object: 'X' incident, '.' not>

#include <charconv>
#include <sstream>

#include "cimp/context.hpp"
#include "cimp/error.hpp"

namespace cimp {

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    /// Next line without its terminator; throws at end of input.
    std::string_view next() {
        ++line_;
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", line_);
        auto nl = text_.find('\n', pos_);
        if (nl == std::string_view::npos)
            throw ParseError("missing trailing newline", line_);
        std::string_view out = text_.substr(pos_, nl - pos_);
        pos_ = nl + 1;
        if (!out.empty() && out.back() == '\r')
            out.remove_suffix(1);
        return out;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    std::size_t line() const { return line_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

std::size_t parse_count(LineReader& in, const char* what) {
    auto s = in.next();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(std::string("malformed ") + what + " count '" + std::string(s) + "'", in.line());
    return value;
}

void expect_blank(LineReader& in) {
    if (!in.next().empty())
        throw ParseError("malformed header: expected blank line", in.line());
}

} // namespace

FormalContext parse_cxt(std::string_view text) {
    LineReader in(text);
    if (in.next() != "B")
        throw ParseError("malformed header: expected 'B'", in.line());
    expect_blank(in);
    const auto n_objects = parse_count(in, "object");
    const auto n_attributes = parse_count(in, "attribute");
    expect_blank(in);

    std::vector<std::string> objects;
    for (std::size_t i = 0; i < n_objects; ++i)
        objects.emplace_back(in.next());
    std::vector<std::string> attributes;
    for (std::size_t i = 0; i < n_attributes; ++i)
        attributes.emplace_back(in.next());

    std::vector<std::vector<std::size_t>> incidence;
    for (std::size_t g = 0; g < n_objects; ++g) {
        auto row = in.next();
        if (row.size() != n_attributes)
            throw ParseError("dimension mismatch: expected " + std::to_string(n_attributes) + " incidence characters, got " +
                                 std::to_string(row.size()),
                             in.line());
        std::vector<std::size_t> intent;
        for (std::size_t m = 0; m < row.size(); ++m) {
            if (row[m] == 'X')
                intent.push_back(m);
            else if (row[m] != '.')
                throw ParseError(std::string("illegal incidence character '") + row[m] + "'", in.line());
        }
        incidence.push_back(std::move(intent));
    }
    while (!in.at_end()) {
        if (!in.next().empty())
            throw ParseError("dimension mismatch: unexpected content after incidence rows", in.line());
    }

    try {
        return FormalContext(std::move(objects), std::move(attributes), std::move(incidence));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), in.line());
    }
}

std::string serialize_cxt(const FormalContext& ctx) {
    std::ostringstream out;
    out << "B\n\n" << ctx.object_count() << '\n' << ctx.attribute_count() << "\n\n";
    for (const auto& g : ctx.objects())
        out << g << '\n';
    for (const auto& m : ctx.attributes())
        out << m << '\n';
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        std::string row(ctx.attribute_count(), '.');
        for (auto m : ctx.intent(g))
            row[m] = 'X';
        out << row << '\n';
    }
    return out.str();
}

} // namespace cimp
