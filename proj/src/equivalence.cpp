#include "cydouble/equivalence.hpp"

#include <atomic>
#include <thread>
#include <vector>

#include "cydouble/errors.hpp"

namespace cydouble {

bool UnimodularMatrix::is_unimodular() const {
    Int d = det();
    return d == 1 || d == -1;
}

UnimodularMatrix operator*(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs) {
    return {lhs.m11 * rhs.m11 + lhs.m12 * rhs.m21, lhs.m11 * rhs.m12 + lhs.m12 * rhs.m22,
            lhs.m21 * rhs.m11 + lhs.m22 * rhs.m21, lhs.m21 * rhs.m12 + lhs.m22 * rhs.m22};
}

std::pair<CubicForm, ChernPairing> transform(const CubicForm& cubic,
                                             const ChernPairing& chern,
                                             const UnimodularMatrix& P) {
    if (!P.is_unimodular()) {
        Int d = abs(P.det());
        throw NotUnimodular("transform: |det| = " + str(d) + ", expected 1");
    }
    std::pair<Int, Int> r1{P.m11, P.m12};
    std::pair<Int, Int> r2{P.m21, P.m22};
    CubicForm c{cubic_eval(cubic, r1, r1, r1), cubic_eval(cubic, r1, r1, r2),
                cubic_eval(cubic, r1, r2, r2), cubic_eval(cubic, r2, r2, r2)};
    ChernPairing l{chern.l1 * P.m11 + chern.l2 * P.m12,
                   chern.l1 * P.m21 + chern.l2 * P.m22};
    return {c, l};
}

namespace {

// Candidate matrices are indexed lexicographically over the (m11,m12,m21,m22)
// grid so that "first witness" has the same meaning for any worker count.
struct Grid {
    long bound;
    long long side;  // 2*bound + 1

    long long total() const { return side * side * side * side; }

    UnimodularMatrix decode(long long idx) const {
        long e4 = static_cast<long>(idx % side);
        idx /= side;
        long e3 = static_cast<long>(idx % side);
        idx /= side;
        long e2 = static_cast<long>(idx % side);
        idx /= side;
        long e1 = static_cast<long>(idx);
        return {Int(e1 - bound), Int(e2 - bound), Int(e3 - bound), Int(e4 - bound)};
    }

    // |det| == 1 in plain integer arithmetic; cheap pre-filter.
    bool unimodular_at(long long idx) const {
        long long e4 = idx % side;
        idx /= side;
        long long e3 = idx % side;
        idx /= side;
        long long e2 = idx % side;
        idx /= side;
        long long e1 = idx;
        long long det = (e1 - bound) * (e4 - bound) - (e2 - bound) * (e3 - bound);
        return det == 1 || det == -1;
    }
};

}  // namespace

Verdict equivalence_search(const InvariantRecord& a, const InvariantRecord& b,
                           long bound, int jobs) {
    if (bound < 1) throw Error("equivalence_search: bound must be >= 1");
    if (bound > 20000) throw Error("equivalence_search: bound too large to enumerate");

    Int lambda_a = lambda_invariant(a.cubic, a.chern);
    Int lambda_b = lambda_invariant(b.cubic, b.chern);
    if (lambda_a != lambda_b) return DistinctByLambda{lambda_a, lambda_b};

    Grid grid{bound, 2 * static_cast<long long>(bound) + 1};
    const long long total = grid.total();

    auto matches = [&](long long idx) {
        UnimodularMatrix P = grid.decode(idx);
        auto [c, l] = transform(b.cubic, b.chern, P);
        return c == a.cubic && l == a.chern;
    };

    if (jobs <= 1) {
        for (long long idx = 0; idx < total; ++idx)
            if (grid.unimodular_at(idx) && matches(idx))
                return EquivalentWitness{grid.decode(idx)};
        return InconclusiveAtBound{bound};
    }

    // Each worker scans a contiguous index range; the shared minimum lets
    // later ranges stop early.  The merged result is the global minimum, so
    // the witness is identical to the single-threaded scan.
    std::atomic<long long> best{total};
    auto worker = [&](long long lo, long long hi) {
        for (long long idx = lo; idx < hi; ++idx) {
            if (idx >= best.load(std::memory_order_relaxed)) return;
            if (!grid.unimodular_at(idx) || !matches(idx)) continue;
            long long cur = best.load(std::memory_order_relaxed);
            while (idx < cur &&
                   !best.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
            }
            return;
        }
    };

    std::vector<std::thread> threads;
    long long chunk = (total + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
        long long lo = j * chunk;
        long long hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back(worker, lo, hi);
    }
    for (auto& t : threads) t.join();

    long long found = best.load();
    if (found < total) return EquivalentWitness{grid.decode(found)};
    return InconclusiveAtBound{bound};
}

}  // namespace cydouble
