#include "majority/fraction.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace majority {

Fraction::Fraction(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw std::invalid_argument("fraction with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("malformed fraction '" + std::string(whole) + "'");
    return value;
}

}  // namespace

Fraction Fraction::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Fraction(parse_int(text, text), 1);
    return Fraction(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

mpq_class Fraction::to_mpq() const {
    mpq_class q(mpz_class(std::to_string(num_)), mpz_class(std::to_string(den_)));
    q.canonicalize();
    return q;
}

std::string Fraction::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string to_fraction_string(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace majority
