#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cydouble/equivalence.hpp"
#include "cydouble/errors.hpp"
#include "helpers.hpp"

using namespace cydouble;

namespace {

InvariantRecord transformed_record(const InvariantRecord& r, const UnimodularMatrix& P) {
    auto [cubic, chern] = transform(r.cubic, r.chern, P);
    InvariantRecord out = r;
    out.cubic = cubic;
    out.chern = chern;
    out.kernel = kernel_generator(chern);
    out.lambda = lambda_invariant(cubic, chern);
    return out;
}

InvariantRecord record_of(const char* id) {
    return invariant_record(test_catalog().at(id));
}

}  // namespace

TEST_CASE("transform basics") {
    InvariantRecord r17 = record_of("1-17");

    auto [c_id, l_id] = transform(r17.cubic, r17.chern, UnimodularMatrix::identity());
    CHECK(c_id == r17.cubic);
    CHECK(l_id == r17.chern);

    // swapping the basis vectors reverses the coefficient tuple
    auto [c_sw, l_sw] = transform(r17.cubic, r17.chern, UnimodularMatrix{0, 1, 1, 0});
    CHECK(c_sw == CubicForm{r17.cubic.c03, r17.cubic.c12, r17.cubic.c21, r17.cubic.c30});
    CHECK(l_sw == ChernPairing{r17.chern.l2, r17.chern.l1});

    // e1 -> e1 + e2 on the 1-17 form (2,4,0,0)
    auto [c_sh, l_sh] = transform(r17.cubic, r17.chern, UnimodularMatrix{1, 1, 0, 1});
    CHECK(c_sh == CubicForm{14, 4, 0, 0});
    CHECK(lambda_invariant(c_sh, l_sh) == 4320);

    CHECK_THROWS_AS(transform(r17.cubic, r17.chern, UnimodularMatrix{2, 0, 0, 1}),
                    NotUnimodular);
}

TEST_CASE("lambda is invariant under unimodular basis change") {
    std::vector<InvariantRecord> records;
    for (const auto& f : test_catalog().families)
        if (in_published_table(f)) records.push_back(invariant_record(f));
    REQUIRE(records.size() == 8);

    for (int trial = 0; trial < 1000; ++trial) {
        UnimodularMatrix P = random_unimodular(20);
        for (const auto& r : records) {
            auto [cubic, chern] = transform(r.cubic, r.chern, P);
            CHECK(lambda_invariant(cubic, chern) == r.lambda);
        }
    }
}

TEST_CASE("transforms compose as a group action") {
    InvariantRecord r = record_of("1-4");
    for (int trial = 0; trial < 200; ++trial) {
        UnimodularMatrix P = random_unimodular(10);
        UnimodularMatrix Q = random_unimodular(10);
        auto [c1, l1] = transform(r.cubic, r.chern, P);
        auto [c2, l2] = transform(c1, l1, Q);
        // applying P then Q accumulates to the product Q*P
        auto [c3, l3] = transform(r.cubic, r.chern, Q * P);
        CHECK(c2 == c3);
        CHECK(l2 == l3);
    }
}

TEST_CASE("search is conclusive on distinct lambdas") {
    Verdict v = equivalence_search(record_of("1-2"), record_of("1-17"), 10);
    CHECK(v == Verdict{DistinctByLambda{540, 4320}});

    v = equivalence_search(record_of("1-8"), record_of("1-9"), 10);
    CHECK(v == Verdict{DistinctByLambda{1672224, 5529560}});

    v = equivalence_search(record_of("1-12"), record_of("1-14"), 10);
    CHECK(v == Verdict{DistinctByLambda{208516, 3440828}});
}

TEST_CASE("search finds the lexicographically first witness") {
    InvariantRecord r = record_of("1-4");

    // self-comparison: identity is the first fixing matrix at bound 1
    Verdict v = equivalence_search(r, r, 1);
    CHECK(v == Verdict{EquivalentWitness{UnimodularMatrix::identity()}});

    // shear the record and search for the way back
    InvariantRecord sheared = transformed_record(r, UnimodularMatrix{1, 1, 0, 1});
    v = equivalence_search(r, sheared, 1);
    CHECK(v == Verdict{EquivalentWitness{UnimodularMatrix{1, -1, 0, 1}}});

    // a wider shear is out of reach at bound 1, found at bound 3
    InvariantRecord wide = transformed_record(r, UnimodularMatrix{1, 3, 0, 1});
    CHECK(equivalence_search(r, wide, 1) == Verdict{InconclusiveAtBound{1}});
    CHECK(equivalence_search(r, wide, 3) ==
          Verdict{EquivalentWitness{UnimodularMatrix{1, -3, 0, 1}}});
}

TEST_CASE("witnesses are sound") {
    InvariantRecord r = record_of("1-12");
    for (int trial = 0; trial < 25; ++trial) {
        UnimodularMatrix P = random_unimodular(4);
        InvariantRecord moved = transformed_record(r, P);
        Verdict v = equivalence_search(r, moved, 6);
        const auto* w = std::get_if<EquivalentWitness>(&v);
        REQUIRE(w != nullptr);
        auto [cubic, chern] = transform(moved.cubic, moved.chern, w->matrix);
        CHECK(cubic == r.cubic);
        CHECK(chern == r.chern);
    }
}

TEST_CASE("search verdict does not depend on the worker count") {
    InvariantRecord r8 = record_of("1-8");
    InvariantRecord r4 = record_of("1-4");
    InvariantRecord sheared = transformed_record(r4, UnimodularMatrix{1, 3, 0, 1});

    std::vector<std::pair<InvariantRecord, InvariantRecord>> cases = {
        {r8, r8},         // witness search over the full grid
        {r4, sheared},    // witness beyond bound 1, found at bound 4
        {r4, r4},
    };
    for (const auto& [a, b] : cases) {
        Verdict reference = equivalence_search(a, b, 4, 1);
        for (int jobs : {2, 3, 4, 8}) CHECK(equivalence_search(a, b, 4, jobs) == reference);
    }
}

TEST_CASE("search rejects nonsense bounds") {
    CHECK_THROWS_AS(equivalence_search(record_of("1-8"), record_of("1-8"), 0), Error);
}

TEST_CASE("search propagates an undefined lambda") {
    InvariantRecord r = record_of("1-8");
    InvariantRecord degenerate = r;
    degenerate.chern = ChernPairing{0, 0};
    CHECK_THROWS_AS(equivalence_search(r, degenerate, 2), ZeroChernClass);
}
