#include "twostep/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "twostep/error.hpp"

namespace twostep {

namespace {

const Rational kZero = Rational(0);

// Integer model of a rational polynomial: primitive, same roots.
std::vector<Integer> primitive_integer_model(const RatPoly& p) {
    Integer den_lcm = 1;
    for (const Rational& c : p.coeffs()) den_lcm = lcm(den_lcm, c.denominator());
    std::vector<Integer> z;
    z.reserve(p.coeffs().size());
    Integer content = 0;
    for (const Rational& c : p.coeffs()) {
        Integer v = c.numerator() * div_exact(den_lcm, c.denominator());
        content = gcd(content, v);
        z.push_back(v);
    }
    if (!content.is_zero()) {
        for (Integer& v : z) v = div_exact(v, content);
    }
    return z;
}

// All positive divisors. Trial division with an effort cap; desk-scale inputs
// stay far below it.
std::vector<Integer> positive_divisors(Integer n) {
    n = n.abs();
    if (n.is_zero()) throw Error("divisors of zero requested");
    std::vector<std::pair<Integer, int>> primes;
    Integer d = 2;
    long steps = 0;
    while (d * d <= n) {
        if (++steps > (1L << 22)) throw Error("coefficient too large for divisor enumeration");
        if (divides(d, n)) {
            int e = 0;
            while (divides(d, n)) {
                n = div_exact(n, d);
                ++e;
            }
            primes.emplace_back(d, e);
        }
        d = d + (d == Integer(2) ? 1 : 2);
    }
    if (n > Integer(1)) primes.emplace_back(n, 1);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : primes) {
        std::size_t base = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk = pk * p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

Rational eval_integer_poly(const std::vector<Integer>& z, const Rational& x) {
    Rational acc = 0;
    for (auto it = z.rbegin(); it != z.rend(); ++it) {
        acc = acc * x + Rational(*it, Integer(1));
    }
    return acc;
}

}  // namespace

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rational& c, int k) {
    if (c.is_zero()) return RatPoly();
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::t() { return monomial(1, 1); }

void RatPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& RatPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

const Rational& RatPoly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly RatPoly::operator-() const {
    std::vector<Rational> v = c_;
    for (Rational& x : v) x = -x;
    return RatPoly(std::move(v));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rational& s) const {
    std::vector<Rational> v = c_;
    for (Rational& x : v) x *= s;
    return RatPoly(std::move(v));
}

std::string RatPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (mag == Rational(1));
        if (k == 0 || !unit) os << mag.str();
        if (k >= 1) {
            if (!unit) os << "*";
            os << "t";
            if (k >= 2) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.str(); }

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    Rational lead_inv = Rational(1) / b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational c = rem[static_cast<std::size_t>(k + db)] * lead_inv;
        if (c.is_zero()) continue;
        quo[static_cast<std::size_t>(k)] = c;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= c * b.coeff(j);
        }
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

RatPoly derivative(const RatPoly& p) {
    if (p.degree() < 1) return RatPoly();
    std::vector<Rational> v(static_cast<std::size_t>(p.degree()), Rational(0));
    for (int k = 1; k <= p.degree(); ++k) v[static_cast<std::size_t>(k - 1)] = p.coeff(k) * Rational(k);
    return RatPoly(std::move(v));
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.degree() < 1) return p.is_zero() ? p : RatPoly::constant(1);
    RatPoly g = poly_gcd(p, derivative(p));
    if (g.degree() < 1) return p.monic();
    return divmod(p, g).first.monic();
}

bool is_squarefree(const RatPoly& p) {
    if (p.degree() < 1) return !p.is_zero();
    return poly_gcd(p, derivative(p)).degree() == 0;
}

RatPoly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points) {
    RatPoly acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RatPoly basis = RatPoly::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            basis = basis * RatPoly{-points[j].first, Rational(1)};
            denom *= points[i].first - points[j].first;
        }
        acc = acc + basis * (points[i].second / denom);
    }
    return acc;
}

std::vector<Rational> rational_roots(const RatPoly& p) {
    std::vector<Rational> roots;
    if (p.degree() < 1) return roots;
    std::vector<Integer> z = primitive_integer_model(p);
    // Strip roots at zero.
    std::size_t low = 0;
    while (low < z.size() && z[low].is_zero()) ++low;
    if (low > 0) {
        roots.push_back(Rational(0));
        z.erase(z.begin(), z.begin() + static_cast<long>(low));
    }
    if (z.size() <= 1) return roots;
    // Candidates n/d with n | constant term, d | leading term.
    std::vector<Integer> nums = positive_divisors(z.front());
    std::vector<Integer> dens = positive_divisors(z.back());
    for (const Integer& n : nums) {
        for (const Integer& d : dens) {
            for (int s : {1, -1}) {
                Rational cand(s == 1 ? n : -n, d);
                if (eval_integer_poly(z, cand).is_zero()) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

// Squarefree decomposition (Yun): p ~ prod a_i^i with each a_i squarefree,
// pairwise coprime.
std::vector<std::pair<RatPoly, int>> squarefree_decompose(const RatPoly& p) {
    std::vector<std::pair<RatPoly, int>> out;
    RatPoly f = p.monic();
    RatPoly g = poly_gcd(f, derivative(f));
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    RatPoly b = divmod(f, g).first;
    RatPoly c = divmod(derivative(f), g).first;
    RatPoly d = c - derivative(b);
    for (int i = 1; b.degree() > 0; ++i) {
        RatPoly a = poly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a.monic(), i);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - derivative(b);
    }
    return out;
}

// Search for a monic quadratic factor of a squarefree integer-model polynomial
// with no rational roots. Complete for quartics (Gauss's lemma: an integer
// quadratic factor takes divisor values at integer points); used as a best
// effort above degree 4.
std::optional<RatPoly> quadratic_factor(const RatPoly& h) {
    std::vector<Integer> z = primitive_integer_model(h);
    const Rational xs[3] = {Rational(0), Rational(1), Rational(-1)};
    Integer vals[3];
    for (int i = 0; i < 3; ++i) {
        Rational v = eval_integer_poly(z, xs[i]);
        if (v.is_zero()) return std::nullopt;  // rational root; caller handles those
        vals[i] = v.numerator();
    }
    std::vector<Integer> d0 = positive_divisors(vals[0]);
    std::vector<Integer> d1 = positive_divisors(vals[1]);
    std::vector<Integer> d2 = positive_divisors(vals[2]);
    for (const Integer& a : d0) {
        for (const Integer& b : d1) {
            for (int sb : {1, -1}) {
                for (const Integer& c : d2) {
                    for (int sc : {1, -1}) {
                        // Interpolate g with g(0)=a, g(1)=sb*b, g(-1)=sc*c.
                        std::pair<Rational, Rational> pts[3] = {
                            {Rational(0), Rational(a, Integer(1))},
                            {Rational(1), Rational(sb == 1 ? b : -b, Integer(1))},
                            {Rational(-1), Rational(sc == 1 ? c : -c, Integer(1))},
                        };
                        RatPoly g = lagrange_interpolate(pts);
                        if (g.degree() != 2) continue;
                        auto [q, r] = divmod(h, g);
                        if (r.is_zero()) return g.monic();
                        (void)q;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<PolyFactor> factor(const RatPoly& p) {
    std::vector<PolyFactor> out;
    if (p.degree() < 1) return out;
    for (const auto& [piece, mult] : squarefree_decompose(p)) {
        RatPoly rest = piece;
        for (const Rational& r : rational_roots(piece)) {
            out.push_back({RatPoly{-r, Rational(1)}, mult, true});
            rest = divmod(rest, RatPoly{-r, Rational(1)}).first;
        }
        while (rest.degree() > 0) {
            if (rest.degree() <= 3) {
                // No rational roots remain, so degree 2 and 3 are irreducible.
                out.push_back({rest.monic(), mult, true});
                break;
            }
            auto quad = quadratic_factor(rest);
            if (quad) {
                out.push_back({*quad, mult, true});
                rest = divmod(rest, *quad).first;
                continue;
            }
            // Degree 4 with no quadratic split is irreducible; higher degrees
            // are left uncertified for the quotient-ring machinery.
            out.push_back({rest.monic(), mult, rest.degree() == 4});
            break;
        }
    }
    return out;
}

}  // namespace twostep
