#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twostep/rational.hpp"

namespace twostep {

/// Dense univariate polynomial over Q in the indeterminate t.
/// Coefficient k is the coefficient of t^k; the zero polynomial stores no
/// coefficients and has degree -1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<Rational> coeffs);

    static RatPoly constant(const Rational& c);
    /// c * t^k
    static RatPoly monomial(const Rational& c, int k);
    /// The identity polynomial t.
    static RatPoly t();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    RatPoly monic() const;

    Rational eval(const Rational& x) const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator-() const;
    RatPoly operator*(const Rational& s) const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    /// Human-readable form, e.g. "t^2 + 2t + 1".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RatPoly& p);

private:
    void trim();
    std::vector<Rational> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);  // monic (or zero)
RatPoly derivative(const RatPoly& p);
/// p with repeated roots collapsed: p / gcd(p, p'), made monic.
RatPoly squarefree_part(const RatPoly& p);
bool is_squarefree(const RatPoly& p);

/// Unique polynomial of degree < points.size() through the given points.
/// Abscissae must be pairwise distinct.
RatPoly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points);

/// All rational roots, each listed once (input need not be squarefree).
std::vector<Rational> rational_roots(const RatPoly& p);

struct PolyFactor {
    RatPoly poly;       ///< monic
    int multiplicity;
    bool irreducible;   ///< certified; false means "squarefree but possibly composite"
};

/// Factor p over Q into monic pieces times a constant. Linear factors are found
/// by rational root extraction; quadratic splits of quartic cofactors by a
/// deterministic divisor search on integer models (Kronecker). Squarefree
/// cofactors of degree 2 and 3 without rational roots are irreducible; degree
/// >= 5 leftovers are emitted uncertified and handled downstream by
/// zero-divisor splitting.
std::vector<PolyFactor> factor(const RatPoly& p);

}  // namespace twostep
