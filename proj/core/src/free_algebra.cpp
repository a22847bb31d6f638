#include "twostep/free_algebra.hpp"

#include <cctype>
#include <string>

#include "twostep/error.hpp"

namespace twostep {

PairBasis::PairBasis(int q) : q_(q) {
    if (q < 2) throw Error("pair basis needs q >= 2");
}

int PairBasis::index(int i, int j) const {
    if (i < 1 || j <= i || j > q_) throw ShapeMismatch("pair index out of range");
    // Pairs (1,2), (1,3), ..., (1,q), (2,3), ...
    int before = (i - 1) * q_ - (i - 1) * i / 2;
    return before + (j - i - 1);
}

std::pair<int, int> PairBasis::pair(int coordinate) const {
    if (coordinate < 0 || coordinate >= size()) throw ShapeMismatch("pair coordinate out of range");
    for (int i = 1; i < q_; ++i) {
        int count = q_ - i;
        if (coordinate < count) return {i, i + 1 + coordinate};
        coordinate -= count;
    }
    throw InternalError("pair coordinate walk");
}

RelationIdeal RelationIdeal::from_span(int q, const RatMatrix& rows) {
    PairBasis basis(q);
    if (rows.cols() != basis.size() && rows.rows() != 0)
        throw ShapeMismatch("relation span must have q(q-1)/2 columns");
    auto [reduced, pivots] = rref(rows.rows() == 0 ? RatMatrix(0, basis.size()) : rows);
    int dim = static_cast<int>(pivots.size());
    RatMatrix span(dim, basis.size());
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < basis.size(); ++c) span.at(r, c) = reduced.at(r, c);
    return RelationIdeal(q, std::move(span), std::move(pivots));
}

RelationIdeal RelationIdeal::zero(int q) { return from_span(q, RatMatrix(0, PairBasis(q).size())); }

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
};

long parse_number(Cursor& c) {
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    if (c.pos == start) throw ParseError("expected digits at position " + std::to_string(start));
    return std::stol(std::string(c.s.substr(start, c.pos - start)));
}

// coefficient ::= integer [ '/' integer ] ; the leading sign is handled by
// the term loop.
Rational parse_coefficient(Cursor& c) {
    long num = parse_number(c);
    c.skip_ws();
    if (!c.done() && c.peek() == '/') {
        ++c.pos;
        c.skip_ws();
        long den = parse_number(c);
        if (den == 0) throw ParseError("zero denominator in coefficient");
        return {num, den};
    }
    return {num, 1};
}

// term ::= [coefficient ['*']] '[' 'u' i ',' 'u' j ']'
void parse_term(Cursor& c, const PairBasis& basis, int sign, RatMatrix& row) {
    c.skip_ws();
    Rational coeff(sign);
    if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = parse_coefficient(c) * Rational(sign);
        c.skip_ws();
        if (!c.done() && c.peek() == '*') {
            ++c.pos;
            c.skip_ws();
        }
    }
    auto expect = [&](char ch) {
        if (c.done() || c.peek() != ch)
            throw ParseError(std::string("expected '") + ch + "' at position " + std::to_string(c.pos));
        ++c.pos;
    };
    expect('[');
    c.skip_ws();
    expect('u');
    long i = parse_number(c);
    c.skip_ws();
    expect(',');
    c.skip_ws();
    expect('u');
    long j = parse_number(c);
    c.skip_ws();
    expect(']');
    if (i < 1 || j < 1 || i > basis.q() || j > basis.q())
        throw ParseError("generator index out of range in [u" + std::to_string(i) + ",u" + std::to_string(j) + "]");
    if (i == j) throw ParseError("term [u" + std::to_string(i) + ",u" + std::to_string(j) + "] is zero");
    if (i > j) {
        std::swap(i, j);
        coeff = -coeff;
    }
    int col = basis.index(static_cast<int>(i), static_cast<int>(j));
    row.at(0, col) += coeff;
}

RatMatrix parse_vector(const PairBasis& basis, std::string_view text) {
    RatMatrix row(1, basis.size());
    Cursor c{text};
    c.skip_ws();
    if (c.done()) throw ParseError("empty relation vector");
    bool first = true;
    while (true) {
        c.skip_ws();
        if (c.done()) break;
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            sign = c.peek() == '-' ? -1 : 1;
            ++c.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms at position " + std::to_string(c.pos));
        }
        parse_term(c, basis, sign, row);
        first = false;
    }
    if (row.is_zero()) throw ParseError("relation vector cancels to zero");
    return row;
}

}  // namespace

RelationIdeal parse_relation(int q, std::string_view expr) {
    PairBasis basis(q);
    std::vector<RatMatrix> rows;
    std::size_t start = 0;
    bool saw_any = false;
    for (std::size_t i = 0; i <= expr.size(); ++i) {
        if (i == expr.size() || expr[i] == ';') {
            std::string_view piece = expr.substr(start, i - start);
            std::size_t a = piece.find_first_not_of(" \t\r\n");
            if (a != std::string_view::npos) {
                rows.push_back(parse_vector(basis, piece));
                saw_any = true;
            }
            start = i + 1;
        }
    }
    if (!saw_any) throw ParseError("empty relation list");
    RatMatrix span = vcat(rows);
    RelationIdeal ideal = RelationIdeal::from_span(q, span);
    if (ideal.dim() >= basis.size()) throw NonProperIdeal("relations span the whole pair space");
    return ideal;
}

TwoStepAlgebra free_algebra(int q) {
    if (q < 2) throw Error("free algebra needs q >= 2");
    PairBasis basis(q);
    StructureTensor t(q, basis.size());
    for (int i = 1; i <= q; ++i)
        for (int j = i + 1; j <= q; ++j) t.set(i, j, basis.index(i, j) + 1, 1);
    return validate(std::move(t));
}

RelationIdeal orthogonal_complement(const RelationIdeal& ideal) {
    std::vector<RatMatrix> cols = nullspace(ideal.span());
    std::vector<RatMatrix> rows;
    rows.reserve(cols.size());
    for (const RatMatrix& v : cols) rows.push_back(v.transpose());
    if (rows.empty()) return RelationIdeal::zero(ideal.q());
    return RelationIdeal::from_span(ideal.q(), vcat(rows));
}

PresentedAlgebra quotient(int q, const RelationIdeal& ideal) {
    if (ideal.q() != q) throw ShapeMismatch("ideal belongs to a different pair space");
    PairBasis basis(q);
    if (ideal.dim() >= basis.size()) throw NonProperIdeal("cannot quotient by the whole pair space");
    const RatMatrix& span = ideal.span();
    const std::vector<int>& pivots = ideal.pivots();
    std::vector<bool> is_pivot(static_cast<std::size_t>(basis.size()), false);
    std::vector<int> pivot_row(static_cast<std::size_t>(basis.size()), -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        is_pivot[static_cast<std::size_t>(pivots[r])] = true;
        pivot_row[static_cast<std::size_t>(pivots[r])] = static_cast<int>(r);
    }
    std::vector<int> free_cols;
    for (int c = 0; c < basis.size(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    const int p = static_cast<int>(free_cols.size());
    std::vector<int> center_of(static_cast<std::size_t>(basis.size()), -1);
    for (int k = 0; k < p; ++k) center_of[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(k)])] = k;

    StructureTensor t(q, p);
    for (int c = 0; c < basis.size(); ++c) {
        auto [i, j] = basis.pair(c);
        if (!is_pivot[static_cast<std::size_t>(c)]) {
            t.set(i, j, center_of[static_cast<std::size_t>(c)] + 1, 1);
            continue;
        }
        // The RREF row with pivot at c reads e_c + sum over free coords f of
        // span[r][f] e_f, so e_c reduces to minus that free tail.
        int r = pivot_row[static_cast<std::size_t>(c)];
        for (int k = 0; k < p; ++k) {
            const Rational& coeff = span.at(r, free_cols[static_cast<std::size_t>(k)]);
            if (!coeff.is_zero()) t.set(i, j, k + 1, -coeff);
        }
    }
    return {validate(std::move(t)), ideal};
}

PresentedAlgebra dual(const PresentedAlgebra& presented) {
    return quotient(presented.ideal.q(), orthogonal_complement(presented.ideal));
}

}  // namespace twostep
