#include "liemod/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace liemod {

namespace {

using u128 = unsigned __int128;

u128 gcd_wide(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 abs_wide(__int128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

bool fits64(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from_wide(__int128 v) {
    bool neg = v < 0;
    u128 mag = abs_wide(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

void Rational::copy_big(const Rational& other) {
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
}

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    u128 g = gcd_wide(abs_wide(n), u128(d));
    if (g > 1) {
        n /= static_cast<__int128>(g);
        d /= static_cast<__int128>(g);
    }
    if (fits64(n) && fits64(d)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    mpq_class q(mpz_from_wide(n), mpz_from_wide(d));
    q.canonicalize();
    return from_mpq(std::move(q));
}

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
        Rational r;
        r.num_ = n.get_si();
        r.den_ = d.get_si();
        return r;
    }
    Rational r;
    r.big_ = std::make_unique<mpq_class>(std::move(q));
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
        auto b = t.find_first_not_of(" \t");
        auto e = t.find_last_not_of(" \t");
        t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return from_mpq(mpq_class(n, d));
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_from_wide(num_), mpz_from_wide(den_));
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

Rational Rational::operator-() const {
    if (big_) return from_mpq(-*big_);
    return from_wide(-static_cast<__int128>(num_), den_);
}

Rational Rational::add_slow(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return Rational::from_wide(n, d);
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational Rational::sub_slow(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return Rational::from_wide(n, d);
    }
    return Rational::from_mpq(a.to_mpq() - b.to_mpq());
}

Rational Rational::mul_slow(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        __int128 n = static_cast<__int128>(a.num_) * b.num_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return Rational::from_wide(n, d);
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!a.big_ && !b.big_) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.num_;
        return Rational::from_wide(n, d);
    }
    return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

Rational& Rational::operator+=(const Rational& o) { return *this = *this + o; }
Rational& Rational::operator-=(const Rational& o) { return *this = *this - o; }
Rational& Rational::operator*=(const Rational& o) { return *this = *this * o; }
Rational& Rational::operator/=(const Rational& o) { return *this = *this / o; }

bool Rational::eq_slow(const Rational& a, const Rational& b) {
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace liemod
