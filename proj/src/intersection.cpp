#include "cydouble/intersection.hpp"

namespace cydouble {

Int triple_product(const Deg2Class& x, const Deg2Class& y, const Deg2Class& z,
                   const TripleTensor& t) {
    Int w30 = x.a * y.a * z.a;
    Int w21 = x.a * y.a * z.b + x.a * y.b * z.a + x.b * y.a * z.a;
    Int w12 = x.a * y.b * z.b + x.b * y.a * z.b + x.b * y.b * z.a;
    Int w03 = x.b * y.b * z.b;
    return w30 * t.t30 + w21 * t.t21 + w12 * t.t12 + w03 * t.t03;
}

Rat pair_c2(const Deg2Class& x, const Rat& p, const Int& q, const TripleTensor& t) {
    // (aH + bE).(pH^2 - qHE) = p(a.t30 + b.t21) - q(a.t21 + b.t12)
    return p * (x.a * t.t30 + x.b * t.t21) - Rat(q * (x.a * t.t21 + x.b * t.t12));
}

}  // namespace cydouble
