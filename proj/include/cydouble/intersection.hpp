#pragma once

// Exact cup products on the blow-up Y = Bl_C(V) of a rank-one Fano threefold
// along a curve.  H^2(Y,Z) has rank two with basis (H, E) and every degree-6
// product is determined by the four symmetric triple products.

#include "cydouble/arith.hpp"

namespace cydouble {

// The triple products (H^3, H^2E, HE^2, E^3) in units of the point class.
// The tensor is the primitive datum: degree-4 expansions of E^2 are never
// formed, so no associativity assumption on published expansions is needed.
struct TripleTensor {
    Int t30;  // H.H.H
    Int t21;  // H.H.E
    Int t12;  // H.E.E
    Int t03;  // E.E.E

    bool operator==(const TripleTensor&) const = default;
};

// A degree-2 class a.H + b.E.
struct Deg2Class {
    Int a;
    Int b;

    bool operator==(const Deg2Class&) const = default;
};

// Full multilinear expansion of x.y.z against the tensor; symmetric in the
// three class arguments.
Int triple_product(const Deg2Class& x, const Deg2Class& y, const Deg2Class& z,
                   const TripleTensor& t);

// x.c2(Y) for c2(Y) = p.H^2 - q.HE, evaluated as a product of divisor
// classes.  Exact rational; integral for every catalog family.
Rat pair_c2(const Deg2Class& x, const Rat& p, const Int& q, const TripleTensor& t);

}  // namespace cydouble
