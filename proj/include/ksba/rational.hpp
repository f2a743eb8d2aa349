#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace ksba {

/// Exact rational number, always stored in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& v) : q_(v) {}
    Rational(const mpz_class& num, const mpz_class& den);

    /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }

    /// Numerator as int64; throws Overflow if it does not fit or the value is not integral.
    [[nodiscard]] std::int64_t to_int64() const;

    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string str() const;

    /// Rounded decimal rendering with the given number of fractional digits (half away from zero).
    [[nodiscard]] std::string decimal(int digits) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    [[nodiscard]] const mpq_class& raw() const { return q_; }

private:
    mpq_class q_{0};
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace ksba
