#include "twostep/decompose.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

#include "twostep/error.hpp"
#include "twostep/hypergraph.hpp"
#include "twostep/matrix.hpp"
#include "twostep/quotient_ring.hpp"

namespace twostep {

bool block_format_holds(const StructureTensor& t, const BlockDiagonalWitness& w) {
    const int q = t.q(), p = t.p();
    if (w.s_subset.empty() || static_cast<int>(w.s_subset.size()) >= q) return false;
    std::vector<bool> in_s(static_cast<std::size_t>(q) + 1, false);
    std::vector<bool> in_t(static_cast<std::size_t>(p) + 1, false);
    for (int i : w.s_subset) in_s[static_cast<std::size_t>(i)] = true;
    for (int k : w.t_subset) in_t[static_cast<std::size_t>(k)] = true;
    StructureTensor moved = apply_basis_change(t, w.change);
    for (int i = 1; i <= q; ++i) {
        for (int j = 1; j <= q; ++j) {
            for (int k = 1; k <= p; ++k) {
                if (moved.at(i, j, k).is_zero()) continue;
                bool a_block = in_s[static_cast<std::size_t>(i)] && in_s[static_cast<std::size_t>(j)] &&
                               in_t[static_cast<std::size_t>(k)];
                bool b_block = !in_s[static_cast<std::size_t>(i)] && !in_s[static_cast<std::size_t>(j)] &&
                               !in_t[static_cast<std::size_t>(k)];
                if (!a_block && !b_block) return false;
            }
        }
    }
    return true;
}

std::optional<BlockDiagonalWitness> hypergraph_witness(const TwoStepAlgebra& alg) {
    auto part = component_bipartition(build_hypergraph(alg));
    if (!part) return std::nullopt;
    return BlockDiagonalWitness{part->generators_a, part->centers_a,
                                BasisChange::identity(alg.q(), alg.p())};
}

namespace {

std::vector<RatMatrix> slices(const TwoStepAlgebra& alg) {
    std::vector<RatMatrix> out;
    out.reserve(static_cast<std::size_t>(alg.p()));
    for (int k = 1; k <= alg.p(); ++k) out.push_back(alg.tensor().slice(k));
    return out;
}

}  // namespace

int marginal_rank(const TwoStepAlgebra& alg) {
    auto s = slices(alg);
    return rank(hcat(s));
}

std::optional<TrivialSplit> trivial_split(const TwoStepAlgebra& alg) {
    const int q = alg.q(), p = alg.p();
    auto s = slices(alg);
    auto reduced = rref_with_transform(hcat(s));
    const int rank_s = static_cast<int>(reduced.pivots.size());
    if (rank_s >= q) return std::nullopt;
    // transform * [A_1 ... A_p] lives in the first rank_s rows, so congruence
    // by the transform confines every slice to the leading block.
    const RatMatrix& t = reduced.transform;
    BasisChange bc(inverse(t).transpose(), RatMatrix::identity(p));
    StructureTensor moved = apply_basis_change(alg.tensor(), bc);
    StructureTensor block(rank_s, p);
    for (int i = 1; i <= rank_s; ++i)
        for (int j = i + 1; j <= rank_s; ++j)
            for (int k = 1; k <= p; ++k) block.set(i, j, k, moved.at(i, j, k));
    std::vector<int> s_subset(static_cast<std::size_t>(rank_s));
    for (int i = 0; i < rank_s; ++i) s_subset[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> t_subset(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) t_subset[static_cast<std::size_t>(k)] = k + 1;
    return TrivialSplit{validate(std::move(block)), q - rank_s,
                        BlockDiagonalWitness{std::move(s_subset), std::move(t_subset), bc}};
}

namespace {

void subsets_of_size(int n, int k, std::vector<int>& scratch, const std::function<void(const std::vector<int>&)>& fn,
                     int start = 0) {
    if (static_cast<int>(scratch.size()) == k) {
        fn(scratch);
        return;
    }
    for (int v = start; v < n; ++v) {
        scratch.push_back(v);
        subsets_of_size(n, k, scratch, fn, v + 1);
        scratch.pop_back();
    }
}

// gcd of det(A+tB) over all r x r submatrices; zero polynomial never occurs
// because the generic rank r is attained somewhere.
RatPoly rank_drop_locus(const RatMatrix& a, const RatMatrix& b, int r) {
    const int q = a.rows();
    std::vector<std::vector<int>> row_sets, col_sets;
    std::vector<int> scratch;
    subsets_of_size(q, r, scratch, [&](const std::vector<int>& s) { row_sets.push_back(s); });
    col_sets = row_sets;
    RatPoly acc;
    for (const auto& rows : row_sets) {
        for (const auto& cols : col_sets) {
            RatPoly minor = det_poly(a.submatrix(rows, cols), b.submatrix(rows, cols));
            if (minor.is_zero()) continue;
            acc = acc.is_zero() ? minor.monic() : poly_gcd(acc, minor);
            if (acc.degree() == 0) return acc;
        }
    }
    if (acc.is_zero()) throw InternalError("all generic-rank minors vanish identically");
    return acc;
}

}  // namespace

PencilReport pencil_analyze(const TwoStepAlgebra& alg) {
    const int q = alg.q();
    if (alg.p() != 2) throw Error("pencil analysis requires p = 2");
    if (marginal_rank(alg) != q) throw Error("pencil analysis requires full marginal rank");
    RatMatrix a = alg.tensor().slice(1);
    RatMatrix b = alg.tensor().slice(2);

    // q+2 exact sample ranks pin the generic rank: a minor polynomial of
    // degree <= q+1 cannot vanish at q+2 points without vanishing identically.
    int generic = rank(b);
    const int rank_b = generic;
    for (int t0 = 0; t0 <= q + 1; ++t0) {
        generic = std::max(generic, rank(a + b * Rational(t0)));
    }

    PencilReport report;
    report.generic_rank = generic;

    RatPoly locus = rank_drop_locus(a, b, generic);
    if (locus.degree() > 0) {
        RatPoly sf = squarefree_part(locus);
        for (const PolyFactor& piece : factor(sf)) {
            if (piece.poly.degree() == 1) {
                Rational root = -piece.poly.coeff(0);
                int rk = rank(a + b * root);
                if (rk >= generic) throw InternalError("rank-drop root without rank drop");
                report.drop_points.push_back({piece.poly, rk, 1, true});
                continue;
            }
            for (const auto& [modulus, rk] : rank_split(QuotientRingMatrix::pencil(a, b, piece.poly))) {
                if (rk >= generic) throw InternalError("rank-drop factor without rank drop");
                report.drop_points.push_back({modulus, rk, modulus.degree(), piece.irreducible && modulus == piece.poly});
            }
        }
    }
    if (rank_b < generic) report.drop_points.push_back({std::nullopt, rank_b, 1, true});

    // Two smallest ranks over distinct projective points; the generic rank is
    // attained at infinitely many, so it is always available twice.
    std::vector<int> pool{generic, generic};
    for (const PencilDropPoint& d : report.drop_points) {
        for (int c = 0; c < d.multiplicity; ++c) pool.push_back(d.rank);
    }
    std::sort(pool.begin(), pool.end());
    report.min_pair_sum = pool[0] + pool[1];
    return report;
}

DecomposabilityVerdict decide(const TwoStepAlgebra& alg) {
    DecomposabilityVerdict verdict;
    std::ostringstream notes;
    if (auto w = hypergraph_witness(alg)) {
        verdict.status = Decomposability::Decomposable;
        verdict.witness = std::move(w);
        verdict.notes = "generating hypergraph is disconnected in the given basis";
        return verdict;
    }
    notes << "hypergraph connected in the given basis";
    if (auto split = trivial_split(alg)) {
        verdict.status = Decomposability::Decomposable;
        verdict.marginal = MarginalRankCertificate{marginal_rank(alg), alg.q()};
        verdict.witness = split->witness;
        verdict.notes = "marginal rank " + std::to_string(verdict.marginal->marginal_rank) + " < q = " +
                        std::to_string(alg.q()) + "; abelian factor splits off";
        return verdict;
    }
    notes << "; marginal rank = q";
    if (alg.p() == 2) {
        PencilReport report = pencil_analyze(alg);
        if (report.min_pair_sum > alg.q()) {
            verdict.status = Decomposability::Indecomposable;
            verdict.pencil = std::move(report);
            verdict.notes = "pencil min-pair-sum " + std::to_string(verdict.pencil->min_pair_sum) + " > q = " +
                            std::to_string(alg.q());
            return verdict;
        }
        verdict.pencil = std::move(report);
        notes << "; pencil criterion inconclusive (min-pair-sum " << verdict.pencil->min_pair_sum
              << " <= q = " << alg.q() << ")";
    } else {
        notes << "; no rank criterion for p = " << alg.p();
    }
    verdict.status = Decomposability::Inconclusive;
    verdict.notes = notes.str();
    return verdict;
}

namespace {

// The algebra of pairs (P, Q) with P^T A_k = A_k P = sum_m Q[k][m] A_m for
// all k. It contains (E, F) for every projection onto a direct summand, and a
// proper idempotent in it yields a decomposition. Closed under composition;
// Q is determined by P because the slices are linearly independent.
std::vector<std::pair<RatMatrix, RatMatrix>> pair_algebra_basis(const TwoStepAlgebra& alg) {
    const int q = alg.q(), p = alg.p();
    auto a = slices(alg);
    const int unknowns = q * q + p * p;
    // Unknown layout: P row-major (q*q), then Q row-major (p*p).
    auto p_idx = [&](int r, int c) { return r * q + c; };
    auto q_idx = [&](int r, int c) { return q * q + r * p + c; };
    std::vector<RatMatrix> rows;
    RatMatrix row(1, unknowns);
    for (int k = 0; k < p; ++k) {
        for (int i = 0; i < q; ++i) {
            for (int j = 0; j < q; ++j) {
                // (P^T A_k)_{ij} - (sum_m Q_{km} A_m)_{ij} = 0
                for (int x = 0; x < q; ++x) row.at(0, p_idx(x, i)) = a[static_cast<std::size_t>(k)].at(x, j);
                for (int m = 0; m < p; ++m) row.at(0, q_idx(k, m)) = -a[static_cast<std::size_t>(m)].at(i, j);
                rows.push_back(row);
                row = RatMatrix(1, unknowns);
                // (A_k P)_{ij} - (sum_m Q_{km} A_m)_{ij} = 0
                for (int x = 0; x < q; ++x) row.at(0, p_idx(x, j)) = a[static_cast<std::size_t>(k)].at(i, x);
                for (int m = 0; m < p; ++m) row.at(0, q_idx(k, m)) = -a[static_cast<std::size_t>(m)].at(i, j);
                rows.push_back(row);
                row = RatMatrix(1, unknowns);
            }
        }
    }
    std::vector<std::pair<RatMatrix, RatMatrix>> basis;
    for (const RatMatrix& v : nullspace(vcat(rows))) {
        RatMatrix pm(q, q), qm(p, p);
        for (int r = 0; r < q; ++r)
            for (int c = 0; c < q; ++c) pm.at(r, c) = v.at(p_idx(r, c), 0);
        for (int r = 0; r < p; ++r)
            for (int c = 0; c < p; ++c) qm.at(r, c) = v.at(q_idx(r, c), 0);
        basis.emplace_back(std::move(pm), std::move(qm));
    }
    return basis;
}

RatMatrix eval_matrix_poly(const RatPoly& h, const RatMatrix& m) {
    RatMatrix acc(m.rows(), m.rows());
    for (int k = h.degree(); k >= 0; --k) {
        acc = acc * m;
        for (int i = 0; i < m.rows(); ++i) acc.at(i, i) += h.coeff(k);
    }
    return acc;
}

RatPoly matrix_min_poly(const RatMatrix& m) {
    const int n = m.rows();
    auto vec = [&](const RatMatrix& x) {
        RatMatrix row(1, n * n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) row.at(0, r * n + c) = x.at(r, c);
        return row;
    };
    // Stack vectorized powers I, M, M^2, ... until the newest one depends on
    // the earlier ones; the dependency coefficients are the minimal polynomial.
    std::vector<RatMatrix> rows{vec(RatMatrix::identity(n))};
    RatMatrix power = RatMatrix::identity(n);
    for (int d = 1; d <= n + 1; ++d) {
        RatMatrix next = power * m;
        RatMatrix lhs = vcat(rows).transpose();  // n^2 x d
        std::vector<RatMatrix> aug{lhs, vec(next).transpose()};
        auto solved = rref(hcat(aug));
        bool consistent = true;
        std::vector<Rational> coeffs(rows.size(), Rational(0));
        for (std::size_t r = 0; r < solved.pivots.size(); ++r) {
            int pc = solved.pivots[r];
            if (pc == static_cast<int>(rows.size())) {
                consistent = false;  // vec(M^d) independent of earlier powers
                break;
            }
            coeffs[static_cast<std::size_t>(pc)] = solved.reduced.at(static_cast<int>(r), static_cast<int>(rows.size()));
        }
        if (consistent) {
            std::vector<Rational> poly;
            poly.reserve(rows.size() + 1);
            for (const Rational& c : coeffs) poly.push_back(-c);
            poly.push_back(1);
            return RatPoly(std::move(poly));
        }
        rows.push_back(vec(next));
        power = std::move(next);
    }
    throw InternalError("minimal polynomial search exceeded dimension");
}

struct CoprimeComponent {
    RatPoly poly;  // squarefree-power building block c^m
};

// mu as a product of pairwise coprime blocks: per squarefree piece, one block
// per rational root and one for the root-free cofactor, exponents restored.
std::vector<CoprimeComponent> coprime_components(const RatPoly& mu) {
    std::vector<CoprimeComponent> out;
    RatPoly f = mu.monic();
    // Squarefree decomposition by repeated gcd.
    std::vector<std::pair<RatPoly, int>> pieces;
    {
        RatPoly g = poly_gcd(f, derivative(f));
        if (g.degree() == 0) {
            pieces.emplace_back(f, 1);
        } else {
            RatPoly b = divmod(f, g).first;
            RatPoly c = divmod(derivative(f), g).first;
            RatPoly d = c - derivative(b);
            for (int i = 1; b.degree() > 0; ++i) {
                RatPoly piece = poly_gcd(b, d);
                if (piece.degree() > 0) pieces.emplace_back(piece.monic(), i);
                b = divmod(b, piece).first;
                c = divmod(d, piece).first;
                d = c - derivative(b);
            }
        }
    }
    for (const auto& [piece, mult] : pieces) {
        RatPoly rest = piece;
        std::vector<Rational> roots;
        try {
            roots = rational_roots(piece);
        } catch (const Error&) {
            roots.clear();  // coefficients too large; fall back to the whole piece
        }
        for (const Rational& r : roots) {
            RatPoly linear{-r, Rational(1)};
            RatPoly block = RatPoly::constant(1);
            for (int e = 0; e < mult; ++e) block = block * linear;
            out.push_back({block});
            rest = divmod(rest, linear).first;
        }
        if (rest.degree() > 0) {
            RatPoly block = RatPoly::constant(1);
            for (int e = 0; e < mult; ++e) block = block * rest;
            out.push_back({block});
        }
    }
    return out;
}

RatMatrix image_basis(const RatMatrix& m) {
    auto red = rref(m);
    std::vector<RatMatrix> cols;
    for (int c : red.pivots) cols.push_back(m.col(c));
    return cols.empty() ? RatMatrix(m.rows(), 0) : hcat(cols);
}

}  // namespace

OracleResult brute_force_oracle(const TwoStepAlgebra& alg, const OracleOptions& options) {
    OracleResult result;
    result.seed = options.seed;
    std::ostringstream notes;

    if (auto w = hypergraph_witness(alg)) {
        result.witness = std::move(w);
        result.notes = "hypergraph disconnected in the given basis";
        return result;
    }

    auto basis = pair_algebra_basis(alg);
    if (basis.size() <= 1) {
        result.notes = "pair algebra is one-dimensional (scalars only); no proper idempotent exists";
        return result;
    }
    notes << "pair algebra dimension " << basis.size();

    const int q = alg.q(), p = alg.p();
    std::mt19937_64 rng(options.seed);
    const long height = std::max(3L, std::min<long>(options.budget, 50));
    std::uniform_int_distribution<long> coeff(-height, height);

    for (int trial = 1; trial <= options.budget; ++trial) {
        result.trials_used = trial;
        RatMatrix gp(q, q), gq(p, p);
        for (const auto& [bp, bq] : basis) {
            Rational c(coeff(rng));
            gp = gp + bp * c;
            gq = gq + bq * c;
        }
        RatMatrix block(q + p, q + p);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) block.at(i, j) = gp.at(i, j);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) block.at(q + i, q + j) = gq.at(i, j);
        RatPoly mu = matrix_min_poly(block);
        auto comps = coprime_components(mu);
        if (comps.size() < 2) continue;
        // Any bipartition of the coprime blocks gives an idempotent; one
        // proper idempotent is enough, so peel one block at a time.
        for (std::size_t pick = 0; pick < comps.size(); ++pick) {
            RatPoly f1 = comps[pick].poly;
            RatPoly f2 = RatPoly::constant(1);
            for (std::size_t j = 0; j < comps.size(); ++j)
                if (j != pick) f2 = f2 * comps[j].poly;
            // h = 1 mod f1, 0 mod f2.
            RatPoly inv = poly_inverse_mod(f2, f1);
            RatPoly h = poly_mod(inv * f2, f1 * f2);
            RatMatrix e_p = eval_matrix_poly(h, gp);
            RatMatrix e_q = eval_matrix_poly(h, gq);
            if (e_p * e_p != e_p || e_q * e_q != e_q) continue;
            int rank_e = rank(e_p);
            if (rank_e == 0 || rank_e == q) continue;
            RatMatrix gen_im = image_basis(e_p);
            auto gen_ker = nullspace(e_p);
            std::vector<RatMatrix> gen_cols{gen_im};
            gen_cols.insert(gen_cols.end(), gen_ker.begin(), gen_ker.end());
            RatMatrix g_mat = hcat(gen_cols);
            RatMatrix cen_im = image_basis(e_q);
            auto cen_ker = nullspace(e_q);
            std::vector<RatMatrix> cen_cols;
            if (cen_im.cols() > 0) cen_cols.push_back(cen_im);
            cen_cols.insert(cen_cols.end(), cen_ker.begin(), cen_ker.end());
            RatMatrix h_mat = hcat(cen_cols);
            BasisChange bc(inverse(g_mat), inverse(h_mat));
            std::vector<int> s_subset, t_subset;
            for (int i = 1; i <= rank_e; ++i) s_subset.push_back(i);
            for (int k = 1; k <= rank(e_q); ++k) t_subset.push_back(k);
            BlockDiagonalWitness witness{std::move(s_subset), std::move(t_subset), bc};
            if (block_format_holds(alg.tensor(), witness)) {
                notes << "; idempotent found on trial " << trial;
                result.witness = std::move(witness);
                result.notes = notes.str();
                return result;
            }
        }
    }
    notes << "; no verified witness within " << options.budget << " trials";
    result.notes = notes.str();
    return result;
}

}  // namespace twostep
