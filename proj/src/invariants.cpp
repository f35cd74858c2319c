#include "cydouble/invariants.hpp"

#include "cydouble/errors.hpp"

namespace cydouble {

std::pair<DoubledClass, DoubledClass> generators(const FanoFamily& family) {
    DoubledClass e1{Deg2Class{1, 0}, Deg2Class{1, 0}};
    DoubledClass e2{Deg2Class{family.k, -1}, Deg2Class{0, 0}};
    return {e1, e2};
}

Int cubic_eval(const CubicForm& c, const std::pair<Int, Int>& x,
               const std::pair<Int, Int>& y, const std::pair<Int, Int>& z) {
    Int w30 = x.first * y.first * z.first;
    Int w21 = x.first * y.first * z.second + x.first * y.second * z.first +
              x.second * y.first * z.first;
    Int w12 = x.first * y.second * z.second + x.second * y.first * z.second +
              x.second * y.second * z.first;
    Int w03 = x.second * y.second * z.second;
    return w30 * c.c30 + w21 * c.c21 + w12 * c.c12 + w03 * c.c03;
}

Int cubic_eval(const CubicForm& c, const std::pair<Int, Int>& v) {
    return cubic_eval(c, v, v, v);
}

CubicForm cubic_form(const FanoFamily& family) {
    auto [e1, e2] = generators(family);
    const TripleTensor& t = family.tensor;
    // cup product on M is componentwise on the two copies
    auto mu = [&](const DoubledClass& x, const DoubledClass& y,
                  const DoubledClass& z) -> Int {
        return triple_product(x.on_y1, y.on_y1, z.on_y1, t) +
               triple_product(x.on_y2, y.on_y2, z.on_y2, t);
    };
    return {mu(e1, e1, e1), mu(e1, e1, e2), mu(e1, e2, e2), mu(e2, e2, e2)};
}

TripleTensor invert_tensor(const CubicForm& cubic, const Int& k) {
    if (cubic.c30 % 2 != 0)
        throw OddLeadingCoefficient("invert_tensor: c30 = " + str(cubic.c30) + " is odd");
    Int t30 = cubic.c30 / 2;
    Int t21 = k * t30 - cubic.c21;
    Int t12 = cubic.c12 - k * k * t30 + 2 * k * t21;
    Int t03 = k * k * k * t30 - 3 * k * k * t21 + 3 * k * t12 - cubic.c03;
    return {t30, t21, t12, t03};
}

ChernPairing chern_pairing(const FanoFamily& family) {
    auto [e1, e2] = generators(family);
    auto pair_on_m = [&](const DoubledClass& x) -> Rat {
        return pair_c2(x.on_y1, family.c2_p, family.c2_q, family.tensor) +
               pair_c2(x.on_y2, family.c2_p, family.c2_q, family.tensor);
    };
    Rat l1 = pair_on_m(e1);
    Rat l2 = pair_on_m(e2);
    if (!is_integer(l1) || !is_integer(l2))
        throw NonIntegralPairing("family " + family.id + ": c2 pairing (" + str(l1) +
                                 ", " + str(l2) + ") is not integral");
    return {l1.get_num(), l2.get_num()};
}

std::pair<Int, Int> kernel_generator(const ChernPairing& chern) {
    if (chern.l1 == 0 && chern.l2 == 0)
        throw ZeroChernClass("kernel_generator: c2 pairing is identically zero");
    Int g = gcd(chern.l1, chern.l2);
    Int a = chern.l2 / g;
    Int b = -chern.l1 / g;
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
    }
    return {a, b};
}

Int lambda_invariant(const CubicForm& cubic, const ChernPairing& chern) {
    Int value = cubic_eval(cubic, kernel_generator(chern));
    return abs(value);
}

InvariantRecord invariant_record(const FanoFamily& family) {
    InvariantRecord rec;
    rec.id = family.id;
    rec.hodge = hodge_numbers(family);
    rec.cubic = cubic_form(family);
    rec.chern = chern_pairing(family);
    rec.kernel = kernel_generator(rec.chern);
    rec.lambda = lambda_invariant(rec.cubic, rec.chern);
    return rec;
}

TripleTensor geometric_tensor(const FanoFamily& family) {
    if (family.deg_center < 1 || family.genus_center < 1 || family.index_r < 1)
        throw MissingGeometry("family " + family.id +
                              ": deg_center, genus_center and index_r are required");
    // deg N_{C/V} = 2g(C) - 2 - K_V.C = 2g(C) - 2 + r.d
    Int deg_normal = 2 * family.genus_center - 2 + family.index_r * family.deg_center;
    return {family.tensor.t30, 0, -family.deg_center, -deg_normal};
}

}  // namespace cydouble
