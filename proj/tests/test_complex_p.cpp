#include "doctest.h"
#include "snres/complex_p.hpp"

using namespace snres;

TEST_CASE("cell enumeration") {
    CHECK(enumerate_p_cells(4, 1) == std::vector<PCell>{pe(1), pe(2), pe(3)});
    CHECK(enumerate_p_cells(4, 2) == std::vector<PCell>{pc(1), pc(2), pc(3), pb(1), pb(2), pd(1, 3)});
    const auto c3 = enumerate_p_cells(4, 3);
    CHECK(c3 == std::vector<PCell>{c31(1), c31(2), c31(3), c32(1, 3), c32(3, 1), c35(1), c35(2), c36(1),
                                   c36(2), c37(1)});
    for (int n = 4; n <= 12; ++n) {
        int d = 0;
        for (const PCell& c : enumerate_p_cells(n, 2)) d += c.kind == PKind::D;
        CHECK(d == (n - 2) * (n - 3) / 2);
        // closed-form counts of the three-cells
        std::map<PKind, int> cnt;
        for (const PCell& c : enumerate_p_cells(n, 3)) ++cnt[c.kind];
        CHECK(cnt[PKind::C31] == n - 1);
        CHECK(cnt[PKind::C32] == (n - 2) * (n - 3));
        CHECK(cnt[PKind::C33] == (n - 3) * (n - 4) * (n - 5) / 6);
        CHECK(cnt[PKind::C35] == n - 2);
        CHECK(cnt[PKind::C37] == n - 3);
    }
}

TEST_CASE("boundary examples") {
    const int n = 4;
    auto W = [&](std::vector<std::pair<int, std::vector<int>>> t) { return GroupRingElem::words(n, t); };
    CHECK(boundary_p(pc(2), n) == PChain::of(pe(2), W({{1, {2}}, {1, {}}})));
    PChain d13 = PChain::of(pe(1), W({{1, {3}}, {-1, {}}}));
    d13 += PChain::of(pe(3), W({{-1, {1}}, {1, {}}}));
    CHECK(boundary_p(pd(1, 3), n) == d13);
    const PChain b37 = boundary_p(c37(1), n);
    CHECK(b37.terms().size() == 3);
    CHECK(b37.terms().at(pd(1, 3)).terms().size() == 6);
    CHECK_THROWS(boundary_p(pd(1, 2), n));
}

TEST_CASE("boundary of boundary vanishes") {
    for (int n = 3; n <= 8; ++n) CHECK(check_d_squared(n).empty());
}

TEST_CASE("cell names round trip") {
    for (int d = 0; d <= 3; ++d)
        for (const PCell& c : enumerate_p_cells(7, d)) CHECK(parse_pcell(c.name()) == c);
    CHECK(parse_pcell("d13") == pd(1, 3));
    CHECK(parse_pcell("c34_1,4") == c34(1, 4));
}

TEST_CASE("augmented exactness for small n") {
    for (int n = 3; n <= 4; ++n) {
        const ExactnessReport r = verify_p_exactness(n);
        CHECK(r.d2_zero);
        CHECK(r.exact());
    }
    const ExpandedComplex ec = expand_p(4);
    CHECK(smith_normal_form(ec.matrix(1)).rank == 23);
}
