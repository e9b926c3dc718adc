#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace liemod {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is promoted to a GMP rational and demoted again as soon as
/// it fits. Equality is exact.
class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I n) : num_(static_cast<std::int64_t>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
        if (other.big_) copy_big(other);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other) {
        if (this != &other) {
            num_ = other.num_;
            den_ = other.den_;
            if (other.big_ || big_) copy_big(other);
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    /// "p" when the denominator is 1, else "p/q".
    std::string str() const;
    mpq_class to_mpq() const;

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const noexcept;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& a, const Rational& b) {
        std::int64_t r;
        if (a.small_int() && b.small_int() && !__builtin_add_overflow(a.num_, b.num_, &r)) return Rational(r);
        return add_slow(a, b);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        std::int64_t r;
        if (a.small_int() && b.small_int() && !__builtin_sub_overflow(a.num_, b.num_, &r)) return Rational(r);
        return sub_slow(a, b);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        std::int64_t r;
        if (a.small_int() && b.small_int() && !__builtin_mul_overflow(a.num_, b.num_, &r)) return Rational(r);
        return mul_slow(a, b);
    }
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        // both sides are canonical, and big values never fit the inline form
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        return eq_slow(a, b);
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    bool small_int() const noexcept { return !big_ && den_ == 1; }
    void copy_big(const Rational& other);
    static Rational add_slow(const Rational& a, const Rational& b);
    static Rational sub_slow(const Rational& a, const Rational& b);
    static Rational mul_slow(const Rational& a, const Rational& b);
    static bool eq_slow(const Rational& a, const Rational& b);
    static Rational from_wide(__int128 n, __int128 d);
    static Rational from_mpq(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

using Scalar = Rational;

}  // namespace liemod
