#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace twostep {

/// Arbitrary-precision integer, GMP-backed.
class Integer {
public:
    Integer() : z_(0) {}
    Integer(long v) : z_(v) {}  // NOLINT: implicit by design
    explicit Integer(const mpz_class& z) : z_(z) {}

    static Integer from_string(std::string_view s);

    const mpz_class& raw() const { return z_; }
    std::string str() const { return z_.get_str(); }

    int sign() const { return sgn(z_); }
    bool is_zero() const { return sgn(z_) == 0; }
    Integer abs() const { return Integer(mpz_class(::abs(z_))); }
    bool fits_long() const { return z_.fits_slong_p(); }
    long to_long() const { return z_.get_si(); }

    friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.z_ + b.z_)); }
    friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.z_ - b.z_)); }
    friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.z_ * b.z_)); }
    Integer operator-() const { return Integer(mpz_class(-z_)); }

    /// Exact quotient; caller guarantees divisibility.
    friend Integer div_exact(const Integer& a, const Integer& b);
    friend Integer gcd(const Integer& a, const Integer& b);
    friend Integer lcm(const Integer& a, const Integer& b);
    friend bool divides(const Integer& d, const Integer& a);

    friend bool operator==(const Integer& a, const Integer& b) { return a.z_ == b.z_; }
    friend bool operator!=(const Integer& a, const Integer& b) { return a.z_ != b.z_; }
    friend bool operator<(const Integer& a, const Integer& b) { return a.z_ < b.z_; }
    friend bool operator<=(const Integer& a, const Integer& b) { return a.z_ <= b.z_; }
    friend bool operator>(const Integer& a, const Integer& b) { return a.z_ > b.z_; }

    friend std::ostream& operator<<(std::ostream& os, const Integer& v);

private:
    mpz_class z_;
};

/// Exact rational number. Always canonical: lowest terms, positive denominator,
/// zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long v) : v_(v) {}  // NOLINT: implicit by design
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Accepts "7", "-3/4", "0". Throws ParseError on anything else.
    static Rational from_string(std::string_view s);

    Integer numerator() const { return Integer(v_.get_num()); }
    Integer denominator() const { return Integer(v_.get_den()); }
    bool is_integer() const { return v_.get_den() == 1; }

    /// "num/den", or just "num" when the denominator is 1.
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    mpq_class v_;
};

}  // namespace twostep
