#include "twostep/tensor.hpp"

#include <utility>

#include "twostep/error.hpp"

namespace twostep {

StructureTensor::StructureTensor(int q, int p) : q_(q), p_(p) {
    if (q < 2) throw Error("generator count must be at least 2");
    if (p < 1) throw Error("center dimension must be at least 1");
    e_.assign(static_cast<std::size_t>(q) * q * p, Rational(0));
}

StructureTensor::StructureTensor(int q, int p, std::vector<Rational> entries) : q_(q), p_(p), e_(std::move(entries)) {
    if (q < 2) throw Error("generator count must be at least 2");
    if (p < 1) throw Error("center dimension must be at least 1");
    if (e_.size() != static_cast<std::size_t>(q) * q * p) throw ShapeMismatch("tensor entry count");
    check_skew();
}

Rational& StructureTensor::ref(int i, int j, int k) {
    return e_[(static_cast<std::size_t>(i - 1) * q_ + (j - 1)) * p_ + (k - 1)];
}

const Rational& StructureTensor::cref(int i, int j, int k) const {
    return e_[(static_cast<std::size_t>(i - 1) * q_ + (j - 1)) * p_ + (k - 1)];
}

const Rational& StructureTensor::at(int i, int j, int k) const {
    if (i < 1 || i > q_ || j < 1 || j > q_ || k < 1 || k > p_) throw ShapeMismatch("tensor index out of range");
    return cref(i, j, k);
}

void StructureTensor::set(int i, int j, int k, const Rational& v) {
    if (i < 1 || i > q_ || j < 1 || j > q_ || k < 1 || k > p_) throw ShapeMismatch("tensor index out of range");
    if (i == j && !v.is_zero()) throw SkewViolation(i, j, k);
    ref(i, j, k) = v;
    if (i != j) ref(j, i, k) = -v;
}

void StructureTensor::add_bracket(int i, int j, int k, const Rational& v) { set(i, j, k, at(i, j, k) + v); }

void StructureTensor::check_skew() const {
    for (int i = 1; i <= q_; ++i) {
        for (int j = i; j <= q_; ++j) {
            for (int k = 1; k <= p_; ++k) {
                if (cref(i, j, k) != -cref(j, i, k)) throw SkewViolation(i, j, k);
            }
        }
    }
}

RatMatrix StructureTensor::slice(int k) const {
    if (k < 1 || k > p_) throw ShapeMismatch("slice index out of range");
    RatMatrix m(q_, q_);
    for (int i = 1; i <= q_; ++i)
        for (int j = 1; j <= q_; ++j) m.at(i - 1, j - 1) = cref(i, j, k);
    return m;
}

BasisChange::BasisChange(RatMatrix s, RatMatrix c) : BasisChange(std::move(s), std::move(c), RatMatrix()) {}

BasisChange::BasisChange(RatMatrix s, RatMatrix c, RatMatrix mixing)
    : S(std::move(s)), C(std::move(c)), P(std::move(mixing)) {
    if (S.rows() != S.cols() || C.rows() != C.cols()) throw ShapeMismatch("basis change blocks must be square");
    if (P.rows() == 0 && P.cols() == 0) P = RatMatrix(C.rows(), S.rows());
    if (P.rows() != C.rows() || P.cols() != S.rows()) throw ShapeMismatch("mixing block shape");
    if (rank(S) != S.rows()) throw SingularMatrix();
    if (rank(C) != C.rows()) throw SingularMatrix();
}

BasisChange BasisChange::identity(int q, int p) { return {RatMatrix::identity(q), RatMatrix::identity(p)}; }

TwoStepAlgebra TwoStepAlgebra::with_meta(CatalogMeta m) const {
    TwoStepAlgebra copy = *this;
    copy.meta_ = std::move(m);
    return copy;
}

std::string TwoStepAlgebra::generator_label(int i) const {
    if (i >= 1 && i <= q() && static_cast<int>(gen_labels_.size()) >= i) return gen_labels_[static_cast<std::size_t>(i - 1)];
    return "x" + std::to_string(i);
}

std::string TwoStepAlgebra::center_label(int k) const {
    if (k >= 1 && k <= p() && static_cast<int>(center_labels_.size()) >= k)
        return center_labels_[static_cast<std::size_t>(k - 1)];
    return "y" + std::to_string(k);
}

void TwoStepAlgebra::set_labels(std::vector<std::string> generators, std::vector<std::string> centers) {
    gen_labels_ = std::move(generators);
    center_labels_ = std::move(centers);
}

TwoStepAlgebra validate(StructureTensor tensor) {
    const int q = tensor.q(), p = tensor.p();
    // Rows indexed by generator pairs i < j, columns by center index; full
    // column rank means the chosen y's span the derived algebra.
    RatMatrix pairs(q * (q - 1) / 2, p);
    int row = 0;
    for (int i = 1; i <= q; ++i) {
        for (int j = i + 1; j <= q; ++j, ++row) {
            for (int k = 1; k <= p; ++k) pairs.at(row, k - 1) = tensor.at(i, j, k);
        }
    }
    int derived = rank(pairs);
    if (derived != p) throw DerivedDimDeficit(derived, p);
    return TwoStepAlgebra(std::move(tensor));
}

std::vector<Rational> bracket(const TwoStepAlgebra& alg, const std::vector<Rational>& u,
                              const std::vector<Rational>& v) {
    const int q = alg.q(), p = alg.p();
    if (static_cast<int>(u.size()) != q || static_cast<int>(v.size()) != q)
        throw ShapeMismatch("bracket arguments must be generator-space vectors");
    std::vector<Rational> out(static_cast<std::size_t>(p), Rational(0));
    for (int i = 1; i <= q; ++i) {
        if (u[static_cast<std::size_t>(i - 1)].is_zero()) continue;
        for (int j = 1; j <= q; ++j) {
            if (v[static_cast<std::size_t>(j - 1)].is_zero()) continue;
            Rational f = u[static_cast<std::size_t>(i - 1)] * v[static_cast<std::size_t>(j - 1)];
            for (int k = 1; k <= p; ++k) {
                const Rational& a = alg.tensor().at(i, j, k);
                if (!a.is_zero()) out[static_cast<std::size_t>(k - 1)] += f * a;
            }
        }
    }
    return out;
}

StructureTensor apply_basis_change(const StructureTensor& t, const BasisChange& bc) {
    const int q = t.q(), p = t.p();
    if (bc.S.rows() != q || bc.C.rows() != p) throw ShapeMismatch("basis change dimensions");
    RatMatrix s_inv = inverse(bc.S);
    RatMatrix s_inv_t = s_inv.transpose();
    StructureTensor out(q, p);
    for (int k = 1; k <= p; ++k) {
        RatMatrix mixed(q, q);
        for (int m = 1; m <= p; ++m) {
            const Rational& c = bc.C.at(k - 1, m - 1);
            if (c.is_zero()) continue;
            mixed = mixed + t.slice(m) * c;
        }
        RatMatrix transformed = s_inv_t * mixed * s_inv;
        for (int i = 1; i <= q; ++i) {
            for (int j = i + 1; j <= q; ++j) {
                out.set(i, j, k, transformed.at(i - 1, j - 1));
            }
        }
    }
    return out;
}

BasisChange composed(const BasisChange& first, const BasisChange& second) {
    // S^-T factors compose in application order, so the stored blocks compose
    // reversed: (S2 S1)^-T = S2^-T S1^-T.
    return {second.S * first.S, second.C * first.C};
}

RatMatrix slice(const StructureTensor& t, int k) { return t.slice(k); }

CubeTensor::CubeTensor(int n) : n_(n) {
    e_.assign(static_cast<std::size_t>(n) * n * n, Rational(0));
}

Rational& CubeTensor::at(int i, int j, int k) {
    if (i < 1 || i > n_ || j < 1 || j > n_ || k < 1 || k > n_) throw ShapeMismatch("cube index out of range");
    return e_[(static_cast<std::size_t>(i - 1) * n_ + (j - 1)) * n_ + (k - 1)];
}

const Rational& CubeTensor::at(int i, int j, int k) const {
    return const_cast<CubeTensor*>(this)->at(i, j, k);
}

int CubeTensor::nonzero_count() const {
    int count = 0;
    for (const Rational& x : e_) count += x.is_zero() ? 0 : 1;
    return count;
}

CubeTensor coefficient_tensor(const TwoStepAlgebra& alg) {
    const int q = alg.q(), p = alg.p();
    CubeTensor cube(q + p);
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j)
            for (int k = 1; k <= p; ++k) cube.at(i, j, q + k) = alg.tensor().at(i, j, k);
    return cube;
}

TwoStepAlgebra direct_sum(const TwoStepAlgebra& a, const TwoStepAlgebra& b) {
    StructureTensor t(a.q() + b.q(), a.p() + b.p());
    for (int i = 1; i <= a.q(); ++i)
        for (int j = i + 1; j <= a.q(); ++j)
            for (int k = 1; k <= a.p(); ++k) t.set(i, j, k, a.tensor().at(i, j, k));
    for (int i = 1; i <= b.q(); ++i)
        for (int j = i + 1; j <= b.q(); ++j)
            for (int k = 1; k <= b.p(); ++k) t.set(a.q() + i, a.q() + j, a.p() + k, b.tensor().at(i, j, k));
    return validate(std::move(t));
}

int dimension_bound(int n) {
    if (n < 3) throw Error("dimension bound requires n >= 3");
    for (int p = n - 2; p >= 1; --p) {
        int q = n - p;
        if (q * (q + 1) / 2 >= n) return p;
    }
    throw InternalError("dimension bound exhausted");
}

}  // namespace twostep
