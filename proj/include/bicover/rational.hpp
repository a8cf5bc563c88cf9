#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <charconv>

namespace bicover {

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Exact rational number with machine-word numerator and denominator.
// Always normalized: den > 0 and gcd(|num|, den) == 1. Every arithmetic
// result is computed in 128-bit intermediates and throws OverflowError
// if the normalized value does not fit back into 64 bits.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design of literals
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }
    constexpr bool is_integer() const { return den_ == 1; }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) return from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
        return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) return from_wide(static_cast<__int128>(a.num_) - b.num_, 1);
        return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    Rational operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    int sign() const { return (num_ > 0) - (num_ < 0); }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "int" or "num/den". Anything else, in particular decimal or
    // exponent notation, is rejected: coordinates must be exact.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_int(text, text));
        const std::int64_t n = parse_int(text.substr(0, slash), text);
        const std::int64_t d = parse_int(text.substr(slash + 1), text);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(n, d);
    }

private:
    static std::int64_t parse_int(std::string_view part, std::string_view whole) {
        std::int64_t value = 0;
        const char* first = part.data();
        const char* last = part.data() + part.size();
        if (first != last && *first == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || first == last)
            throw std::invalid_argument("not an exact rational: '" + std::string(whole) + "'");
        return value;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_wide(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (d != 1) {
            const __int128 g = gcd128(n, d);
            if (g > 1) {
                n /= g;
                d /= g;
            }
        }
        constexpr __int128 lo = INT64_MIN;
        constexpr __int128 hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) throw OverflowError("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("zero denominator");
        *this = from_wide(n, d);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// A value with a tie-breaking bias so that a non-strict comparison a <= b
// can be expressed as a strict one: (a, 0) < (b, 1) iff a <= b.
template <class T>
struct TieKey {
    T value{};
    int bias = 0;
    friend bool operator==(const TieKey&, const TieKey&) = default;
    friend auto operator<=>(const TieKey& a, const TieKey& b) {
        if (auto c = a.value <=> b.value; c != 0) return c;
        return a.bias <=> b.bias;
    }
};

}  // namespace bicover
