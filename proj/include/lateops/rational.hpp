#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lateops {

// Exact rational on int64 with __int128 cross-multiplication, so competitive
// ratios never pass through floating point. Denominator is kept positive.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(long long value) : num_(value), den_(1) {}

    Rational(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                        checked(i128(a.den_) * b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked(i128(a.num_) * b.den_ - i128(b.num_) * a.den_),
                        checked(i128(a.den_) * b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        // Cross-reduce first so products like (a/b)*(b/c) stay in range.
        const long long g1 = std::gcd(a.num_, b.den_);
        const long long g2 = std::gcd(b.num_, a.den_);
        return Rational(checked(i128(a.num_ / g1) * (b.num_ / g2)),
                        checked(i128(a.den_ / g2) * (b.den_ / g1)));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return a * Rational(b.den_, b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // both normalized
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

  private:
    using i128 = __int128;

    static long long checked(i128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        return static_cast<long long>(v);
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const long long g = std::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

// Accepts "7", "-3", "22/7", and decimal literals like "2.05" (exact, via
// powers of ten). Anything else throws.
inline Rational parse_rational(const std::string& s) {
    const auto bad = [&]() { return std::invalid_argument("malformed rational '" + s + "'"); };
    if (s.empty()) throw bad();
    const bool neg = s[0] == '-';
    std::size_t i = neg ? 1 : 0;
    long long num = 0, den = 1;
    bool digits = false, frac = false;
    for (; i < s.size(); ++i) {
        const char ch = s[i];
        if (ch >= '0' && ch <= '9') {
            num = num * 10 + (ch - '0');
            if (frac) den *= 10;
            digits = true;
        } else if (ch == '.' && !frac && den == 1) {
            frac = true;
        } else if (ch == '/' && !frac && digits && i + 1 < s.size()) {
            den = 0;
            for (++i; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') throw bad();
                den = den * 10 + (s[i] - '0');
            }
            break;
        } else {
            throw bad();
        }
    }
    if (!digits || den == 0) throw bad();
    return Rational(neg ? -num : num, den);
}

// sign(a - sqrt(3)*b) for arbitrary int64 a, b, decided by integer squares
// only. Never zero for (a, b) != (0, 0): a^2 = 3 b^2 has no nontrivial
// integer solutions.
inline int cmp_sqrt3(long long a, long long b) {
    if (b == 0) return (a > 0) - (a < 0);
    const __int128 lhs = static_cast<__int128>(a) * a;
    const __int128 rhs = 3 * static_cast<__int128>(b) * b;
    if (b > 0) {
        if (a <= 0) return -1;
        return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    }
    // b < 0: sqrt(3)*b is negative.
    if (a >= 0) return 1;
    return lhs < rhs ? 1 : (lhs > rhs ? -1 : 0);
}

// a >= sqrt(3) * b, exactly.
inline bool geq_sqrt3_times(long long a, long long b) { return cmp_sqrt3(a, b) >= 0; }

// a < sqrt(3) * b, exactly.
inline bool lt_sqrt3_times(long long a, long long b) { return cmp_sqrt3(a, b) < 0; }

}  // namespace lateops
