#pragma once

#include <random>

#include "cydouble/catalog.hpp"
#include "cydouble/equivalence.hpp"

#ifndef CYDOUBLE_TEST_CATALOG
#define CYDOUBLE_TEST_CATALOG "data/fano_rank1.json"
#endif

inline const cydouble::Catalog& test_catalog() {
    static const cydouble::Catalog catalog = cydouble::load_catalog(CYDOUBLE_TEST_CATALOG);
    return catalog;
}

// Deterministic RNG so failures reproduce.
inline std::mt19937& test_rng() {
    static std::mt19937 rng(0x5eed);
    return rng;
}

inline long rand_in(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(test_rng());
}

// Random unimodular matrix with entries in [-entry_bound, entry_bound]:
// coprime first row, Bezout second row, randomized by a shear, a swap and a
// sign flip.
inline cydouble::UnimodularMatrix random_unimodular(long entry_bound) {
    using cydouble::Int;
    while (true) {
        Int a = rand_in(-entry_bound, entry_bound);
        Int b = rand_in(-entry_bound, entry_bound);
        if (cydouble::gcd(a, b) != 1) continue;
        Int g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        cydouble::UnimodularMatrix m{a, b, -y, x};  // det = ax + by = 1
        long t = rand_in(-2, 2);
        m.m21 += t * m.m11;
        m.m22 += t * m.m12;
        if (rand_in(0, 1)) {
            std::swap(m.m11, m.m21);
            std::swap(m.m12, m.m22);
        }
        if (rand_in(0, 1)) {
            m.m11 = -m.m11;
            m.m12 = -m.m12;
        }
        if (abs(m.m11) > entry_bound || abs(m.m12) > entry_bound ||
            abs(m.m21) > entry_bound || abs(m.m22) > entry_bound)
            continue;
        if (!m.is_unimodular()) continue;
        return m;
    }
}
