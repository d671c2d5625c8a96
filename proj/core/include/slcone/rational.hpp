#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "slcone/checked.hpp"
#include "slcone/errors.hpp"

namespace slcone {

/// Exact rational on checked 64-bit integers. Always normalized:
/// gcd(num, den) == 1 and den > 0. All arithmetic and comparisons are
/// exact; anything that would overflow throws ArithmeticOverflow.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n) {} // NOLINT: implicit by design

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0)
            throw ConfigError("rational with zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    /// Smallest integer >= *this.
    std::int64_t ceil() const {
        std::int64_t q = num_ / den_;
        if (num_ > 0 && num_ % den_ != 0)
            q = checked_add(q, 1);
        return q;
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// Renders "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) {
            s += '/';
            s += std::to_string(den_);
        }
        return s;
    }

    /// Parses "p" or "p/q" with optional leading sign. Decimal notation
    /// is rejected so exactness is preserved end to end.
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num_, b.den_),
                                    checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked_sub(checked_mul(a.num_, b.den_),
                                    checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num_, b.num_),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = checked_neg(a.num_);
        r.den_ = a.den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        // both normalized
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    void normalize() {
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
    const auto fail = [&] {
        throw ConfigError("not a rational literal: '" + std::string(text) +
                          "' (expected \"p\" or \"p/q\")");
    };
    const auto parse_int = [&](std::string_view part) {
        std::int64_t value = 0;
        const char* first = part.data();
        const char* last = part.data() + part.size();
        if (part.size() > 1 && part.front() == '+')
            ++first; // from_chars does not accept '+'
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last)
            fail();
        return value;
    };
    if (text.empty())
        fail();
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den <= 0)
        fail();
    return Rational(num, den);
}

} // namespace slcone
