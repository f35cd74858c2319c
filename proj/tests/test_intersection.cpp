#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cydouble/intersection.hpp"
#include "helpers.hpp"

using namespace cydouble;

namespace {

const TripleTensor kTensor12{4, 0, -4, -8};      // family 1-2
const TripleTensor kTensor117{1, 0, -16, -128};  // family 1-17
const TripleTensor kTensor18{16, 0, -256, -44};  // family 1-8

const Deg2Class kH{1, 0};
const Deg2Class kE{0, 1};

Deg2Class random_class(long bound) {
    return {Int(rand_in(-bound, bound)), Int(rand_in(-bound, bound))};
}

}  // namespace

TEST_CASE("triple products reproduce the worked values") {
    CHECK(triple_product(kH, kH, kH, kTensor12) == 4);
    CHECK(triple_product(kH, kE, kE, kTensor117) == -16);
    CHECK(triple_product(kE, kE, kE, kTensor117) == -128);

    Deg2Class zero{0, 0};
    CHECK(triple_product(zero, random_class(50), random_class(50), kTensor18) == 0);
}

TEST_CASE("triple product is symmetric in its three arguments") {
    for (const auto& family : test_catalog().families) {
        for (int trial = 0; trial < 40; ++trial) {
            Deg2Class c[3] = {random_class(50), random_class(50), random_class(50)};
            Int reference = triple_product(c[0], c[1], c[2], family.tensor);
            int perm[3] = {0, 1, 2};
            do {
                CHECK(triple_product(c[perm[0]], c[perm[1]], c[perm[2]], family.tensor) ==
                      reference);
            } while (std::next_permutation(perm, perm + 3));
        }
    }
}

TEST_CASE("triple product is multilinear") {
    for (const auto& family : test_catalog().families) {
        for (int trial = 0; trial < 40; ++trial) {
            Deg2Class x = random_class(100), xp = random_class(100);
            Deg2Class y = random_class(100), z = random_class(100);
            Deg2Class sum{x.a + xp.a, x.b + xp.b};
            CHECK(triple_product(sum, y, z, family.tensor) ==
                  triple_product(x, y, z, family.tensor) +
                      triple_product(xp, y, z, family.tensor));
        }
    }
}

TEST_CASE("c2 pairing reproduces the worked values") {
    // 1-17: c2(Y) = 22 H^2 - 4 HE, H.c2 = 22 per copy
    CHECK(pair_c2(kH, Rat(22), 4, kTensor117) == 22);
    // 1-8: c2(Y) = 5/2 H^2 - HE
    CHECK(pair_c2(kE, make_rat(5, 2), 1, kTensor18) == 256);
    // cross-check (H - E).c2 = 40 - 256 = -216
    CHECK(pair_c2(Deg2Class{1, -1}, make_rat(5, 2), 1, kTensor18) == -216);
    CHECK(pair_c2(Deg2Class{0, 0}, make_rat(5, 2), 1, kTensor18) == 0);
}

TEST_CASE("c2 pairing is integral for every catalog family and integer class") {
    for (const auto& family : test_catalog().families) {
        for (int trial = 0; trial < 60; ++trial) {
            Rat v = pair_c2(random_class(100), family.c2_p, family.c2_q, family.tensor);
            CHECK(is_integer(v));
        }
    }
}
