#pragma once

// Unimodular change of basis on (cubic form, c2 pairing) pairs and a bounded
// exhaustive search for an isomorphism between two invariant records.
// Distinct lambda already proves the pairs non-isomorphic, so the search only
// runs when the lambdas agree.

#include <variant>

#include "cydouble/invariants.hpp"

namespace cydouble {

// Basis change of H^2(M,Z).  Rows are the images of the basis vectors:
// e1 -> m11.e1 + m12.e2, e2 -> m21.e1 + m22.e2.
struct UnimodularMatrix {
    Int m11, m12, m21, m22;

    Int det() const { return m11 * m22 - m12 * m21; }
    bool is_unimodular() const;
    static UnimodularMatrix identity() { return {1, 0, 0, 1}; }

    bool operator==(const UnimodularMatrix&) const = default;
};

// Matrix product; composition of two transforms by P then Q acts like Q*P.
UnimodularMatrix operator*(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs);

struct DistinctByLambda {
    Int lambda_a, lambda_b;

    bool operator==(const DistinctByLambda&) const = default;
};

struct EquivalentWitness {
    UnimodularMatrix matrix;  // maps coordinates of record b into record a

    bool operator==(const EquivalentWitness&) const = default;
};

struct InconclusiveAtBound {
    long bound;

    bool operator==(const InconclusiveAtBound&) const = default;
};

using Verdict = std::variant<DistinctByLambda, EquivalentWitness, InconclusiveAtBound>;

// mu'(x,y,z) = mu(xP, yP, zP) and l'(x) = l(xP), expanded exactly.
// Throws NotUnimodular when |det P| != 1.
std::pair<CubicForm, ChernPairing> transform(const CubicForm& cubic,
                                             const ChernPairing& chern,
                                             const UnimodularMatrix& P);

// DistinctByLambda when the lambdas differ (conclusive, no search).
// Otherwise scan every matrix with entries in [-bound, bound] and |det| = 1
// in lexicographic (m11,m12,m21,m22) order and return the first P with
// transform(b.cubic, b.chern, P) == (a.cubic, a.chern).  jobs > 1 partitions
// the scan without changing the verdict or the witness.
Verdict equivalence_search(const InvariantRecord& a, const InvariantRecord& b,
                           long bound, int jobs = 1);

}  // namespace cydouble
