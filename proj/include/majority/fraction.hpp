#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace majority {

/// Small exact fraction num/den, always reduced with den > 0.
///
/// Used for the "at most beta * d_v" thresholds: every comparison against
/// a degree is done as den * count <= num * degree in integers.
class Fraction {
public:
    constexpr Fraction() = default;
    Fraction(std::int64_t num, std::int64_t den);

    /// Parses "NUM/DEN" or a plain integer.
    static Fraction parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// True iff count > (num/den) * total, evaluated exactly.
    bool exceeded_by(std::int64_t count, std::int64_t total) const {
        return static_cast<__int128>(den_) * count > static_cast<__int128>(num_) * total;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    mpq_class to_mpq() const;
    std::string str() const;

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// "p/q" rendering of an exact rational; integers keep the "/1".
std::string to_fraction_string(const mpq_class& q);

}  // namespace majority
