#include "doctest.h"
#include "stg/snf.hpp"

#include <cstdint>

using namespace stg;

namespace {

// deterministic splitmix64 for reproducible random matrices
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

using Big = boost::multiprecision::cpp_int;

BigMat to_big(const IMat& a) {
    BigMat b(a.size());
    for (size_t i = 0; i < a.size(); ++i) b[i].assign(a[i].begin(), a[i].end());
    return b;
}

BigMat mat_mul(const BigMat& a, const BigMat& b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    BigMat c(n, std::vector<Big>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l)
            for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
}

}  // namespace

TEST_CASE("snf basic examples") {
    SUBCASE("diag(2,3) has single invariant 6") {
        auto r = smith_normal_form({{2, 0}, {0, 3}});
        CHECK(r.invariants.factors == std::vector<long long>{6});
        CHECK(r.invariants.free_rank == 0);
        CHECK(r.diagonal == std::vector<Big>{1, 6});
    }
    SUBCASE("identity") {
        auto r = smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        CHECK(r.invariants.factors.empty());
        CHECK(r.invariants.free_rank == 0);
    }
    SUBCASE("zero 2x3: free rank 3") {
        auto r = smith_normal_form({{0, 0, 0}, {0, 0, 0}});
        CHECK(r.invariants.factors.empty());
        CHECK(r.invariants.free_rank == 3);
    }
}

TEST_CASE("snf transforms verified by re-multiplication on random matrices") {
    Rng rng(20240917);
    for (int trial = 0; trial < 500; ++trial) {
        int rows = static_cast<int>(rng.range(1, 20));
        int cols = static_cast<int>(rng.range(1, 20));
        IMat m(rows, std::vector<long long>(cols));
        for (auto& r : m)
            for (auto& x : r) x = rng.range(-9, 9);
        auto res = smith_normal_form(m, true);
        REQUIRE(res.transforms_valid);
        BigMat prod = mat_mul(mat_mul(res.left, to_big(m)), res.right);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                Big want = 0;
                if (i == j && i < static_cast<int>(res.diagonal.size())) want = res.diagonal[i];
                CHECK(prod[i][j] == want);
            }
        // divisibility chain
        for (size_t i = 1; i < res.diagonal.size(); ++i) CHECK(res.diagonal[i] % res.diagonal[i - 1] == 0);
    }
}

TEST_CASE("invariants_from_cyclic merges to a divisibility chain") {
    auto inv = invariants_from_cyclic({2, 3});
    CHECK(inv.factors == std::vector<long long>{6});
    inv = invariants_from_cyclic({2, 2, 3});
    CHECK(inv.factors == std::vector<long long>{2, 6});
    inv = invariants_from_cyclic({4, 6});
    CHECK(inv.factors == std::vector<long long>{2, 12});
    inv = invariants_from_cyclic({1, 1});
    CHECK(inv.trivial());
    CHECK(invariants_from_cyclic({2, 2}).str() == "2,2;rank=0");
}
