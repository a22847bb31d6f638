#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twostep/matrix.hpp"
#include "twostep/rational.hpp"

namespace twostep {

/// Structure constants of a two-step nilpotent bracket on q generators with a
/// p-dimensional center: a q x q x p array with a[i][j][k] = -a[j][i][k].
/// Both orientations are stored and kept in sync; indices are 1-based
/// throughout the public surface.
class StructureTensor {
public:
    StructureTensor(int q, int p);
    /// Row-major entries (i fastest-varying last): a[i][j][k] at
    /// ((i-1)*q + (j-1))*p + (k-1). Throws SkewViolation on asymmetry.
    StructureTensor(int q, int p, std::vector<Rational> entries);

    int q() const { return q_; }
    int p() const { return p_; }

    const Rational& at(int i, int j, int k) const;
    /// Sets a[i][j][k] = v and a[j][i][k] = -v. Rejects i == j with v != 0.
    void set(int i, int j, int k, const Rational& v);
    /// Adds v*y_k to the bracket [x_i, x_j].
    void add_bracket(int i, int j, int k, const Rational& v);

    /// The q x q skew slice matrix A_k, 1 <= k <= p.
    RatMatrix slice(int k) const;

    friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
        return a.q_ == b.q_ && a.p_ == b.p_ && a.e_ == b.e_;
    }
    friend bool operator!=(const StructureTensor& a, const StructureTensor& b) { return !(a == b); }

private:
    Rational& ref(int i, int j, int k);
    const Rational& cref(int i, int j, int k) const;
    void check_skew() const;

    int q_, p_;
    std::vector<Rational> e_;
};

/// Catalog metadata carried alongside an algebra. Rank values come from the
/// classification literature and are never computed here.
struct CatalogMeta {
    int n = 0, p = 0, q = 0;
    std::optional<int> rank_r;            ///< dimension of a maximal torus of Der(N)
    std::string source_label;             ///< e.g. "N^{8,3}_2"
    std::optional<std::string> t_name;    ///< e.g. "T^{8,3}_{4,4}"
};

/// Block-triangular basis change: S acts on generators, C on the center, and
/// the mixing block P (center components of new generators) is recorded but
/// has no effect on the structure tensor.
struct BasisChange {
    BasisChange(RatMatrix s, RatMatrix c);
    BasisChange(RatMatrix s, RatMatrix c, RatMatrix mixing);
    static BasisChange identity(int q, int p);

    RatMatrix S;  ///< q x q, nonsingular
    RatMatrix C;  ///< p x p, nonsingular
    RatMatrix P;  ///< p x q
};

/// A validated two-step nilpotent Lie algebra: the chosen center vectors
/// really span the derived algebra. Construct through validate().
class TwoStepAlgebra {
public:
    int q() const { return tensor_.q(); }
    int p() const { return tensor_.p(); }
    int n() const { return q() + p(); }
    const StructureTensor& tensor() const { return tensor_; }

    const std::optional<CatalogMeta>& meta() const { return meta_; }
    TwoStepAlgebra with_meta(CatalogMeta m) const;

    std::string generator_label(int i) const;  ///< defaults to "x<i>"
    std::string center_label(int k) const;     ///< defaults to "y<k>"
    void set_labels(std::vector<std::string> generators, std::vector<std::string> centers);

private:
    friend TwoStepAlgebra validate(StructureTensor tensor);
    explicit TwoStepAlgebra(StructureTensor t) : tensor_(std::move(t)) {}

    StructureTensor tensor_;
    std::optional<CatalogMeta> meta_;
    std::vector<std::string> gen_labels_, center_labels_;
};

/// Checks skew-symmetry (already enforced by StructureTensor) and that the
/// derived algebra has dimension exactly p; throws DerivedDimDeficit
/// otherwise. Marginal rank below q is allowed: such algebras are valid and
/// simply split off abelian generators.
TwoStepAlgebra validate(StructureTensor tensor);

/// [u, v] in center coordinates; bilinear and alternating.
std::vector<Rational> bracket(const TwoStepAlgebra& alg, const std::vector<Rational>& u,
                              const std::vector<Rational>& v);

/// Tensor of the algebra in the new basis: slice k of the result is
/// S^-T (sum_m C[k][m] A_m) S^-1.
StructureTensor apply_basis_change(const StructureTensor& t, const BasisChange& bc);

/// Sequential composition: applying the result equals applying first then second.
BasisChange composed(const BasisChange& first, const BasisChange& second);

RatMatrix slice(const StructureTensor& t, int k);

/// Full n x n x n structure-constant tensor over the combined basis
/// (generators first, then center); rows and columns indexed by center
/// elements are zero.
class CubeTensor {
public:
    explicit CubeTensor(int n);
    int n() const { return n_; }
    Rational& at(int i, int j, int k);
    const Rational& at(int i, int j, int k) const;
    int nonzero_count() const;

private:
    int n_;
    std::vector<Rational> e_;
};

CubeTensor coefficient_tensor(const TwoStepAlgebra& alg);

/// Block sum: generators and center vectors of b are appended after a's.
TwoStepAlgebra direct_sum(const TwoStepAlgebra& a, const TwoStepAlgebra& b);

/// Largest center dimension an indecomposable n-dimensional two-step algebra
/// can have: the largest p with n <= q(q+1)/2 for q = n - p. Requires n >= 3.
int dimension_bound(int n);

}  // namespace twostep
