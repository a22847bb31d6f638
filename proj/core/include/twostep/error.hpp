#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace twostep {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input text (expression, file) could not be parsed.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

class NotSquarefree : public Error {
public:
    NotSquarefree() : Error("modulus is not squarefree") {}
};

/// Tensor entry pair violates a[i][j][k] = -a[j][i][k].
class SkewViolation : public Error {
public:
    SkewViolation(int i, int j, int k)
        : Error("skew-symmetry violated at (" + std::to_string(i) + "," + std::to_string(j) +
                "," + std::to_string(k) + ")"),
          i(i), j(j), k(k) {}
    int i, j, k;
};

/// The chosen center vectors do not span the derived algebra.
class DerivedDimDeficit : public Error {
public:
    DerivedDimDeficit(int actual, int expected)
        : Error("derived algebra has dimension " + std::to_string(actual) + ", expected " +
                std::to_string(expected)),
          actual(actual), expected(expected) {}
    int actual, expected;
};

/// Center related sequences are defined only for 3-uniform generating hypergraphs.
class NotThreeUniform : public Error {
public:
    NotThreeUniform()
        : Error("generating hypergraph is not 3-uniform; center sequences are withheld") {}
};

/// A relation ideal must be a proper subspace of the pair space.
class NonProperIdeal : public Error {
public:
    explicit NonProperIdeal(const std::string& what) : Error("non-proper ideal: " + what) {}
};

class UnknownId : public Error {
public:
    explicit UnknownId(const std::string& id) : Error("unknown catalog id: " + id), id(id) {}
    std::string id;
};

/// Two entries agree on every nomenclature tier; no index can be assigned.
class UnresolvedTie : public Error {
public:
    explicit UnresolvedTie(std::vector<std::string> ids)
        : Error("unresolved nomenclature tie"), ids(std::move(ids)) {}
    std::vector<std::string> ids;
};

/// A "cannot happen" condition; indicates a defect, not bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error("internal error: " + what) {}
};

}  // namespace twostep
