#include "cimp/rational.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

#include "cimp/error.hpp"

namespace cimp {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

} // namespace

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return Error("malformed rational '" + std::string(text) + "'"); };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw bad();
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw bad();
    if (negative)
        n = -n;
    return Rational(n, d);
}

std::size_t Rational::bit_size() const {
    return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero())
        throw DivisionByZero();
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Integer lcm_denominators(std::span<const Rational> values) {
    if (values.empty())
        throw Error("lcm_denominators: empty list");
    Integer result = 1;
    for (const auto& v : values) {
        mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), v.mpq().get_den_mpz_t());
    }
    return result;
}

} // namespace cimp
