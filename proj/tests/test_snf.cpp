#include <random>

#include "doctest.h"
#include "snres/snf.hpp"

using namespace snres;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.add(r, c, rows[r][c]);
    m.finalize();
    return m;
}

// 2x2 oracle: d1 = gcd of entries, d1*d2 = |det|.
std::vector<Int> oracle_2x2(long a, long b, long c, long d) {
    long g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::gcd(std::abs(c), std::abs(d)));
    long det = std::abs(a * d - b * c);
    if (g == 0) return {};
    if (det == 0) return {Int(g)};
    return {Int(g), Int(det / g)};
}

}  // namespace

TEST_CASE("Smith normal form examples") {
    auto s = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    CHECK(s.rank == 2);
    CHECK(s.invariant_factors == std::vector<Int>{6});
    s = smith_normal_form(IntMatrix(3, 4));
    CHECK(s.rank == 0);
    CHECK(s.invariant_factors.empty());
    s = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
    CHECK(s.rank == 2);
    CHECK(s.invariant_factors == std::vector<Int>{2, 4});
}

TEST_CASE("sparse and dense Smith forms agree with the 2x2 oracle and with witnesses") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 300; ++t) {
        long a = static_cast<long>(rng() % 21) - 10, b = static_cast<long>(rng() % 21) - 10;
        long c = static_cast<long>(rng() % 21) - 10, d = static_cast<long>(rng() % 21) - 10;
        auto m = from_rows({{a, b}, {c, d}});
        auto want = oracle_2x2(a, b, c, d);
        auto s = smith_normal_form(m);
        CHECK(s.rank == want.size());
        std::vector<Int> nonunit;
        for (auto& x : want)
            if (x > 1) nonunit.push_back(x);
        CHECK(s.invariant_factors == nonunit);
        auto ds = dense_smith(to_dense(m), 2, 2);
        CHECK(ds.diag == want);
    }
    for (int t = 0; t < 40; ++t) {
        const std::size_t R = 2 + rng() % 7, C = 2 + rng() % 7;
        IntMatrix m(R, C);
        for (std::size_t r = 0; r < R; ++r)
            for (std::size_t c = 0; c < C; ++c)
                if (rng() % 3 == 0) m.add(r, c, static_cast<long>(rng() % 13) - 6);
        m.finalize();
        auto ds = dense_smith(to_dense(m), R, C);
        auto prod = dense_multiply(dense_multiply(ds.U, to_dense(m)), ds.V);
        CHECK(prod == ds.D);
        auto I = dense_multiply(ds.U, ds.Uinv);
        for (std::size_t r = 0; r < R; ++r)
            for (std::size_t c = 0; c < R; ++c) CHECK(I[r][c] == (r == c ? 1 : 0));
        for (std::size_t i = 0; i + 1 < ds.diag.size(); ++i) CHECK(ds.diag[i + 1] % ds.diag[i] == 0);
        auto s = smith_normal_form(m);
        CHECK(s.rank == ds.rank);
        std::vector<Int> nonunit;
        for (auto& x : ds.diag)
            if (x > 1) nonunit.push_back(x);
        CHECK(s.invariant_factors == nonunit);
    }
}

TEST_CASE("invariant factors from a diagonal") {
    CHECK(invariant_factors_from_diagonal({2, 3}) == std::vector<Int>{1, 6});
    CHECK(invariant_factors_from_diagonal({4, 6, 2}) == std::vector<Int>{2, 2, 12});
    CHECK(group_from_factors(1, {2, 3, 4}).str() == "Z + Z/2 + Z/12");
}

TEST_CASE("large entries fall back to arbitrary precision") {
    IntMatrix m(2, 2);
    m.add(0, 0, Int(1) << 62);
    m.add(0, 1, 3);
    m.add(1, 0, 5);
    m.add(1, 1, Int(1) << 62);
    m.finalize();
    auto s = smith_normal_form(m);
    CHECK(s.rank == 2);
    Int det = (Int(1) << 124) - 15;
    Int prod = 1;
    for (auto& d : s.invariant_factors) prod *= d;
    CHECK(prod == det);
}
