#pragma once

// Invariants of the doubling Calabi-Yau M glued from two copies of Y \ D:
// generators of H^2(M,Z), the cubic cup form, the c2 pairing, the kernel
// generator and the lambda-invariant.

#include <string>
#include <utility>

#include "cydouble/arith.hpp"
#include "cydouble/catalog.hpp"
#include "cydouble/intersection.hpp"

namespace cydouble {

// Coefficients of the symmetric cubic form in the basis (e1, e2):
// mu(e1,e1,e1), mu(e1,e1,e2), mu(e1,e2,e2), mu(e2,e2,e2).
struct CubicForm {
    Int c30, c21, c12, c03;

    bool operator==(const CubicForm&) const = default;
};

// The linear form x -> c2(M).x, stored as (c2.e1, c2.e2).
struct ChernPairing {
    Int l1, l2;

    bool operator==(const ChernPairing&) const = default;
};

// The unit of comparison for one doubling Calabi-Yau.
struct InvariantRecord {
    std::string id;
    std::pair<Int, Int> hodge;
    CubicForm cubic;
    ChernPairing chern;
    std::pair<Int, Int> kernel;  // primitive, first nonzero coordinate positive
    Int lambda;

    bool operator==(const InvariantRecord&) const = default;
};

// A degree-2 class on the two-copy normal crossing model.
struct DoubledClass {
    Deg2Class on_y1, on_y2;

    bool operator==(const DoubledClass&) const = default;
};

// Generators of H^2(M,Z): e1 = (H, H), e2 = (kH - E, 0).
std::pair<DoubledClass, DoubledClass> generators(const FanoFamily& family);

// mu(x,y,z) for coordinate vectors in the (e1,e2) basis; full multilinear
// expansion, symmetric in x,y,z.
Int cubic_eval(const CubicForm& c, const std::pair<Int, Int>& x,
               const std::pair<Int, Int>& y, const std::pair<Int, Int>& z);
// mu(v,v,v)
Int cubic_eval(const CubicForm& c, const std::pair<Int, Int>& v);

// The cubic cup form of M in the basis (e1, e2), evaluated from the triple
// products through the componentwise cup-product rule.
CubicForm cubic_form(const FanoFamily& family);

// Exact inverse of cubic_form's triangular system.  Throws
// OddLeadingCoefficient when c30 is odd (e1^3 = 2.H^3 is always even).
TripleTensor invert_tensor(const CubicForm& cubic, const Int& k);

// (c2(M).e1, c2(M).e2); throws NonIntegralPairing on corrupt catalog data.
ChernPairing chern_pairing(const FanoFamily& family);

// Primitive generator of { x : l1.x1 + l2.x2 = 0 }, sign-normalized so the
// first nonzero coordinate is positive.  Throws ZeroChernClass on (0,0).
std::pair<Int, Int> kernel_generator(const ChernPairing& chern);

// |mu(m,m,m)| for the kernel generator m; independent of the sign choice.
Int lambda_invariant(const CubicForm& cubic, const ChernPairing& chern);

InvariantRecord invariant_record(const FanoFamily& family);

// Diagnostic tensor from the standard blow-up rules (pi*a.E^2 = -(a.C),
// E^3 = -deg N_{C/V}), keeping the catalog t30.  Reported against the
// catalog tensor by the verifier, never substituted for it.
TripleTensor geometric_tensor(const FanoFamily& family);

}  // namespace cydouble
