#include "twostep/quotient_ring.hpp"

#include <utility>

#include "twostep/error.hpp"

namespace twostep {

QuotientRingMatrix::QuotientRingMatrix(RatPoly modulus, int rows, int cols)
    : modulus_(modulus.monic()), rows_(rows), cols_(cols) {
    if (modulus_.degree() < 1) throw Error("quotient ring modulus must be nonconstant");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), RatPoly());
}

QuotientRingMatrix QuotientRingMatrix::pencil(const RatMatrix& a, const RatMatrix& b, const RatPoly& modulus) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("pencil");
    QuotientRingMatrix m(modulus, a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            m.at(r, c) = poly_mod(RatPoly{a.at(r, c), b.at(r, c)}, m.modulus());
        }
    }
    return m;
}

RatPoly& QuotientRingMatrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ShapeMismatch("index out of range");
    return e_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
}

const RatPoly& QuotientRingMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ShapeMismatch("index out of range");
    return e_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
}

RatPoly poly_mod(const RatPoly& p, const RatPoly& m) { return divmod(p, m).second; }

RatPoly poly_inverse_mod(const RatPoly& p, const RatPoly& m) {
    // Extended Euclid on (p, m).
    RatPoly r0 = poly_mod(p, m), r1 = m;
    RatPoly s0 = RatPoly::constant(1), s1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s = s0 - q * s1;
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s);
    }
    if (r0.degree() != 0) throw Error("element is not invertible modulo " + m.str());
    return poly_mod(s0 * (Rational(1) / r0.coeff(0)), m);
}

namespace {

struct EliminationState {
    QuotientRingMatrix m;
    int done;  // pivots already placed; elimination resumes at row/col = done
};

void eliminate(EliminationState st, std::vector<std::pair<RatPoly, int>>& out) {
    const int rows = st.m.rows(), cols = st.m.cols();
    int r = st.done;
    while (r < rows && r < cols) {
        const RatPoly& modulus = st.m.modulus();
        // Find a unit pivot, or a zero divisor that splits the modulus.
        int pr = -1, pc = -1;
        RatPoly split;
        for (int i = r; i < rows && pr < 0; ++i) {
            for (int j = r; j < cols; ++j) {
                const RatPoly& e = st.m.at(i, j);
                if (e.is_zero()) continue;
                RatPoly g = poly_gcd(e, modulus);
                if (g.degree() == 0) {
                    pr = i;
                    pc = j;
                    break;
                }
                // deg g == deg modulus cannot happen for a reduced nonzero entry.
                if (split.is_zero()) split = g;
            }
        }
        if (pr < 0) {
            if (!split.is_zero()) {
                // Every candidate is a zero divisor: fork the computation on
                // coprime factors of the modulus and finish each branch.
                RatPoly other = divmod(st.m.modulus(), split).first.monic();
                for (const RatPoly& piece : {split, other}) {
                    QuotientRingMatrix reduced(piece, rows, cols);
                    for (int i = 0; i < rows; ++i)
                        for (int j = 0; j < cols; ++j) reduced.at(i, j) = poly_mod(st.m.at(i, j), piece);
                    eliminate({std::move(reduced), r}, out);
                }
                return;
            }
            break;  // trailing block is identically zero
        }
        // Swap the unit pivot into place and clear its column below.
        if (pr != r)
            for (int j = 0; j < cols; ++j) std::swap(st.m.at(pr, j), st.m.at(r, j));
        if (pc != r)
            for (int i = 0; i < rows; ++i) std::swap(st.m.at(i, pc), st.m.at(i, r));
        RatPoly inv = poly_inverse_mod(st.m.at(r, r), st.m.modulus());
        for (int j = r; j < cols; ++j) st.m.at(r, j) = poly_mod(st.m.at(r, j) * inv, st.m.modulus());
        for (int i = r + 1; i < rows; ++i) {
            RatPoly f = st.m.at(i, r);
            if (f.is_zero()) continue;
            for (int j = r; j < cols; ++j) {
                st.m.at(i, j) = poly_mod(st.m.at(i, j) - f * st.m.at(r, j), st.m.modulus());
            }
        }
        ++r;
    }
    out.emplace_back(st.m.modulus(), r);
}

}  // namespace

std::vector<std::pair<RatPoly, int>> rank_split(const QuotientRingMatrix& m) {
    if (!is_squarefree(m.modulus())) throw NotSquarefree();
    std::vector<std::pair<RatPoly, int>> out;
    eliminate({m, 0}, out);
    return out;
}

int rank_at_root(const RatMatrix& a, const RatMatrix& b, const RatPoly& m) {
    if (m.degree() < 1) throw Error("modulus must be nonconstant");
    if (!is_squarefree(m)) throw NotSquarefree();
    auto pieces = rank_split(QuotientRingMatrix::pencil(a, b, m));
    int r = pieces.front().second;
    for (const auto& [factor, rk] : pieces) {
        if (rk != r) {
            throw Error("modulus is reducible with rank varying across factors (" + m.str() + ")");
        }
    }
    return r;
}

}  // namespace twostep
