#include "twostep/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "twostep/error.hpp"

namespace twostep {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeMismatch("negative dimension");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    e_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw ShapeMismatch("ragged initializer");
        e_.insert(e_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Rational& RatMatrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ShapeMismatch("index out of range");
    return e_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
}

const Rational& RatMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ShapeMismatch("index out of range");
    return e_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool RatMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.is_zero(); });
}

RatMatrix RatMatrix::row(int r) const {
    RatMatrix out(1, cols_);
    for (int c = 0; c < cols_; ++c) out.at(0, c) = at(r, c);
    return out;
}

RatMatrix RatMatrix::col(int c) const {
    RatMatrix out(rows_, 1);
    for (int r = 0; r < rows_; ++r) out.at(r, 0) = at(r, c);
    return out;
}

RatMatrix RatMatrix::submatrix(std::span<const int> row_idx, std::span<const int> col_idx) const {
    RatMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c)
            out.at(static_cast<int>(r), static_cast<int>(c)) = at(row_idx[r], col_idx[c]);
    return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("add");
    RatMatrix out = a;
    for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] += b.e_[i];
    return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("subtract");
    RatMatrix out = a;
    for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] -= b.e_[i];
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("multiply");
    RatMatrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) {
                if (b.at(k, c).is_zero()) continue;
                out.at(r, c) += ark * b.at(k, c);
            }
        }
    }
    return out;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
    RatMatrix out = *this;
    for (Rational& x : out.e_) x *= s;
    return out;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    for (int r = 0; r < m.rows(); ++r) {
        os << (r == 0 ? "[" : " ");
        for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c).str();
        os << (r + 1 == m.rows() ? "]" : "\n");
    }
    return os;
}

RatMatrix hcat(std::span<const RatMatrix> blocks) {
    if (blocks.empty()) return RatMatrix();
    int rows = blocks.front().rows();
    int cols = 0;
    for (const RatMatrix& b : blocks) {
        if (b.rows() != rows) throw ShapeMismatch("hcat");
        cols += b.cols();
    }
    RatMatrix out(rows, cols);
    int off = 0;
    for (const RatMatrix& b : blocks) {
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < b.cols(); ++c) out.at(r, off + c) = b.at(r, c);
        off += b.cols();
    }
    return out;
}

RatMatrix vcat(std::span<const RatMatrix> blocks) {
    if (blocks.empty()) return RatMatrix();
    int cols = blocks.front().cols();
    int rows = 0;
    for (const RatMatrix& b : blocks) {
        if (b.cols() != cols) throw ShapeMismatch("vcat");
        rows += b.rows();
    }
    RatMatrix out(rows, cols);
    int off = 0;
    for (const RatMatrix& b : blocks) {
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < cols; ++c) out.at(off + r, c) = b.at(r, c);
        off += b.rows();
    }
    return out;
}

RrefResult rref(const RatMatrix& m) {
    auto full = rref_with_transform(m);
    return {std::move(full.reduced), std::move(full.pivots)};
}

RrefTransform rref_with_transform(const RatMatrix& m) {
    RatMatrix r = m;
    RatMatrix e = RatMatrix::identity(m.rows());
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        int p = -1;
        for (int i = lead; i < m.rows(); ++i) {
            if (!r.at(i, col).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != lead) {
            for (int c = 0; c < m.cols(); ++c) std::swap(r.at(p, c), r.at(lead, c));
            for (int c = 0; c < m.rows(); ++c) std::swap(e.at(p, c), e.at(lead, c));
        }
        Rational inv = Rational(1) / r.at(lead, col);
        for (int c = 0; c < m.cols(); ++c) r.at(lead, c) *= inv;
        for (int c = 0; c < m.rows(); ++c) e.at(lead, c) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            Rational f = r.at(i, col);
            for (int c = 0; c < m.cols(); ++c) r.at(i, c) -= f * r.at(lead, c);
            for (int c = 0; c < m.rows(); ++c) e.at(i, c) -= f * e.at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), std::move(e), std::move(pivots)};
}

namespace {

// Scale each row to integer entries; rank-preserving.
RatMatrix integer_rows(const RatMatrix& m) {
    RatMatrix out = m;
    for (int r = 0; r < m.rows(); ++r) {
        Integer den = 1;
        for (int c = 0; c < m.cols(); ++c) den = lcm(den, out.at(r, c).denominator());
        if (den == Integer(1)) continue;
        Rational f(den, Integer(1));
        for (int c = 0; c < m.cols(); ++c) out.at(r, c) *= f;
    }
    return out;
}

}  // namespace

int rank(const RatMatrix& m) {
    RatMatrix w = integer_rows(m);
    int rows = w.rows(), cols = w.cols();
    int r = 0;
    Rational prev_pivot = 1;
    std::vector<int> colmap(static_cast<std::size_t>(cols));
    std::iota(colmap.begin(), colmap.end(), 0);
    while (r < rows && r < cols) {
        // Full pivot search over the trailing block.
        int pr = -1, pc = -1;
        for (int i = r; i < rows && pr < 0; ++i) {
            for (int j = r; j < cols; ++j) {
                if (!w.at(i, colmap[static_cast<std::size_t>(j)]).is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
            }
        }
        if (pr < 0) break;
        if (pr != r)
            for (int j = 0; j < cols; ++j) std::swap(w.at(pr, j), w.at(r, j));
        if (pc != r) std::swap(colmap[static_cast<std::size_t>(pc)], colmap[static_cast<std::size_t>(r)]);
        const Rational pivot = w.at(r, colmap[static_cast<std::size_t>(r)]);
        // Bareiss step: entries stay integral, growth stays polynomial.
        for (int i = r + 1; i < rows; ++i) {
            for (int j = r + 1; j < cols; ++j) {
                Rational& x = w.at(i, colmap[static_cast<std::size_t>(j)]);
                x = (x * pivot - w.at(i, colmap[static_cast<std::size_t>(r)]) *
                                     w.at(r, colmap[static_cast<std::size_t>(j)])) /
                    prev_pivot;
            }
            w.at(i, colmap[static_cast<std::size_t>(r)]) = 0;
        }
        prev_pivot = pivot;
        ++r;
    }
    return r;
}

std::vector<RatMatrix> nullspace(const RatMatrix& m) {
    auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<RatMatrix> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        RatMatrix v(m.cols(), 1);
        v.at(f, 0) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v.at(pivots[r], 0) = -red.at(static_cast<int>(r), f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    RatMatrix w = m;
    // Track the row scaling applied by integer_rows so it can be divided back out.
    Rational scale = 1;
    for (int r = 0; r < n; ++r) {
        Integer den = 1;
        for (int c = 0; c < n; ++c) den = lcm(den, w.at(r, c).denominator());
        if (den != Integer(1)) {
            Rational f(den, Integer(1));
            for (int c = 0; c < n; ++c) w.at(r, c) *= f;
            scale *= f;
        }
    }
    Rational prev_pivot = 1;
    int sign = 1;
    for (int r = 0; r < n; ++r) {
        int pr = -1;
        for (int i = r; i < n; ++i) {
            if (!w.at(i, r).is_zero()) {
                pr = i;
                break;
            }
        }
        if (pr < 0) return 0;
        if (pr != r) {
            for (int j = 0; j < n; ++j) std::swap(w.at(pr, j), w.at(r, j));
            sign = -sign;
        }
        const Rational pivot = w.at(r, r);
        for (int i = r + 1; i < n; ++i) {
            for (int j = r + 1; j < n; ++j) {
                w.at(i, j) = (w.at(i, j) * pivot - w.at(i, r) * w.at(r, j)) / prev_pivot;
            }
            w.at(i, r) = 0;
        }
        prev_pivot = pivot;
    }
    // After full Bareiss elimination the last pivot is the determinant of the
    // integer-scaled matrix.
    Rational d = w.at(n - 1, n - 1);
    if (sign < 0) d = -d;
    return d / scale;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("inverse of non-square matrix");
    int n = m.rows();
    auto full = rref_with_transform(m);
    if (static_cast<int>(full.pivots.size()) != n) throw SingularMatrix();
    return full.transform;
}

RatPoly det_poly(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols()) throw ShapeMismatch("det_poly needs square matrices");
    if (a.rows() != b.rows()) throw ShapeMismatch("det_poly shape mismatch");
    int n = a.rows();
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational t(k);
        points.emplace_back(t, det(a + b * t));
    }
    return lagrange_interpolate(points);
}

}  // namespace twostep
