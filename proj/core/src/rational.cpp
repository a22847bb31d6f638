#include "twostep/rational.hpp"

#include <cctype>
#include <ostream>

#include "twostep/error.hpp"

namespace twostep {

namespace {

bool valid_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Integer Integer::from_string(std::string_view s) {
    if (!valid_integer_text(s)) throw ParseError("bad integer '" + std::string(s) + "'");
    return Integer(mpz_class(std::string(s)));
}

Integer div_exact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw Error("division by zero");
    Integer r;
    mpz_divexact(r.z_.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.z_.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.z_.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
    return r;
}

bool divides(const Integer& d, const Integer& a) {
    if (d.is_zero()) return a.is_zero();
    return mpz_divisible_p(a.z_.get_mpz_t(), d.z_.get_mpz_t()) != 0;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.z_; }

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw Error("zero denominator");
    v_ = mpq_class(num.raw(), den.raw());
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(Integer::from_string(s), Integer(1));
    }
    Integer num = Integer::from_string(s.substr(0, slash));
    std::string_view den_text = s.substr(slash + 1);
    Integer den = Integer::from_string(den_text);
    if (!den_text.empty() && den_text[0] == '-') throw ParseError("negative denominator in '" + std::string(s) + "'");
    if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

}  // namespace twostep
