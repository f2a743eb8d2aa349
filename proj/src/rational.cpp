#include "ksba/rational.hpp"

#include "ksba/errors.hpp"

#include <cctype>
#include <limits>

namespace ksba {

namespace {

bool is_integer_text(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class to_mpz(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_text(s)) throw ParseError("not a rational: '" + std::string(text) + "'");
        return Rational(to_mpz(s));
    }
    auto num = trim(s.substr(0, slash));
    auto den = trim(s.substr(slash + 1));
    if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    return Rational(to_mpz(num), to_mpz(den));
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw Overflow("not an integer: " + str());
    const mpz_class& n = q_.get_num();
    if (!n.fits_slong_p()) throw Overflow("integer too large: " + str());
    return n.get_si();
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = abs(q_.get_num()) * scale;
    mpz_class den = q_.get_den();
    mpz_class quot = (2 * num + den) / (2 * den);
    std::string body = quot.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    bool negative = sign() < 0 && quot != 0;
    return negative ? "-" + body : body;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division of " + str() + " by zero");
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace ksba
