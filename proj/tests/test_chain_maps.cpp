#include "doctest.h"
#include "snres/chain_maps.hpp"

using namespace snres;

namespace {

BarSimplex B(const std::string& text, int n) { return parse_bar_simplex(text, n); }

GroupRingElem W(int n, const std::vector<std::pair<int, std::vector<int>>>& t) { return GroupRingElem::words(n, t); }

// Relabelling by conjugation: the edge e moves to e' when a^{-1} s_e a = s_{e'}.
std::optional<int> conjugated_edge(const Perm& alpha, int e, int n) {
    const Perm c = alpha.inverse() * Perm::transposition(n, e) * alpha;
    for (int f = 1; f < n; ++f)
        if (c == Perm::transposition(n, f)) return f;
    return std::nullopt;
}

}  // namespace

TEST_CASE("psi and phi examples") {
    CHECK(psi(B("[s1|s3]", 5), 5) == PChain::of(pd(1, 3), 5, -1));
    CHECK(psi(B("[s2|s1 s2]", 5), 5) == PChain::of(pb(1), 5));
    CHECK(psi(BarSimplex{}, 5) == PChain::of(pbase(), 5));
    CHECK(psi(B("[s2|s2]", 5), 5) == PChain::of(pc(2), 5));
    CHECK(psi3(B("[s2|s2|s2]", 5), 5) == PChain::of(c31(2), 5));
    CHECK(psi3(B("[s1|s3|s5]", 6), 6) == PChain::of(c33(1, 3, 5), 6, -1));
    CHECK(phi(pd(1, 3), 5) == BarChain::of(B("[s1|s3]", 5), 5, -1));
    CHECK(phi(pc(2), 5) == BarChain::of(B("[s2|s2]", 5), 5));
    CHECK(phi(pb(1), 5) == BarChain::of(B("[s2|s1 s2]", 5), 5));
    CHECK(phi(pe(3), 5) == BarChain::of(B("[s3]", 5), 5));
}

TEST_CASE("psi3 on [s_j|rho(i,j)|s_j]") {
    const int n = 5;
    // rho(1,1) c36_2 - rho(1,2) c35_2
    const PChain expected = PChain::of(c36(2), W(n, {{1, {1}}})) - PChain::of(c35(2), W(n, {{1, {1, 2}}}));
    CHECK(psi3(B("[s3|s1 s2 s3|s3]", n), n) == expected);
}

TEST_CASE("chain map battery") {
    for (int n = 3; n <= 8; ++n) {
        const ChainMapReport r = verify_chain_maps(n);
        CHECK(r.checked > 0);
        for (const auto& f : r.failures) MESSAGE(f.what << ": " << f.residual);
        CHECK(r.ok());
    }
}

TEST_CASE("n = 4 covers all 18 essential 3-cells") {
    const auto cells = enumerate_essential(4, 3);
    CHECK(cells.size() == 18);
    QRewriter qr(4, true);
    for (const BarSimplex& c : cells) CHECK(boundary_p(psi3(c, 4)) == psi(qr.boundary_q(c)));
}

TEST_CASE("prism examples") {
    const int n = 6;
    CHECK(prism(ConsecutiveCycle{2, 3}, pbase(), n) == PChain::of(pe(2), n));
    CHECK(prism(ConsecutiveCycle{1, 3}, pbase(), n) ==
          PChain::of(pe(1), n) + PChain::of(pe(2), W(n, {{1, {1}}})));
    CHECK(prism(ConsecutiveCycle{2, 4}, pc(3), n) == PChain::of(c35(2), n));
    CHECK(prism(ConsecutiveCycle{2, 5}, pb(3), n) == PChain::of(c37(2), n));
    CHECK(prism(ConsecutiveCycle{4, 5}, pb(1), n) == PChain::of(c34(1, 4), n));
    CHECK(prism(ConsecutiveCycle{1, 2}, pb(3), n) == PChain::of(c34(3, 1), n));
    CHECK(prism(ConsecutiveCycle{1, 3}, pe(2), n) == PChain::of(pb(1), n, -1));
    CHECK_FALSE(prism_admissible(ConsecutiveCycle{2, 4}, pe(1)));
    CHECK_FALSE(prism_admissible(ConsecutiveCycle{2, 4}, pe(2)));
    CHECK_FALSE(prism_admissible(ConsecutiveCycle{2, 4}, pe(4)));
    CHECK_THROWS(prism(ConsecutiveCycle{2, 4}, pe(4), n));
}

TEST_CASE("prism relabelling agrees with conjugation") {
    for (int n = 3; n <= 7; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const ConsecutiveCycle a{i, j};
                const Perm alpha = a.perm(n);
                CHECK(alpha(i) == i + 1);
                CHECK(alpha(j) == i);
                for (int e = 1; e < n; ++e) {
                    const auto f = conjugated_edge(alpha, e, n);
                    if (!prism_admissible(a, pe(e))) continue;
                    REQUIRE(f.has_value());
                    CHECK(prism_reindex(a, pe(e)) == pe(*f));
                }
            }
}

TEST_CASE("prism identity") {
    for (int n = 3; n <= 7; ++n) {
        const PrismReport r = verify_prism(n);
        CHECK(r.checked > 0);
        for (const auto& f : r.failures) MESSAGE(f.what << ": " << f.residual);
        CHECK(r.ok());
    }
}

TEST_CASE("product resolution") {
    const ProductResolution F(4, 2);
    const int n = 6;
    const TChain expected = TChain::of({pbase(), pe(1)}, W(n, {{1, {2}}, {-1, {}}})) -
                            TChain::of({pe(2), pbase()}, W(n, {{1, {5}}, {-1, {}}}));
    CHECK(F.boundary(TensorCell{pe(2), pe(1)}) == expected);
    CHECK(F.f(TensorCell{pb(1), pbase()}) == PChain::of(pb(1), n));
    CHECK(F.f(TensorCell{pbase(), pc(1)}) == PChain::of(pc(5), n));
    CHECK(F.f(TensorCell{pe(1), pe(1)}) == PChain::of(pd(1, 5), n, -1));
    CHECK(F.cells(0).size() == 1);
    CHECK(F.cells(1).size() == 4);
    for (int n2 = 2; n2 <= 8; ++n2)
        for (int k = 1; k <= n2 / 2; ++k) {
            const ProductReport r = verify_product_resolution(n2 - k, k);
            for (const auto& f : r.failures) MESSAGE(f.what << ": " << f.residual);
            CHECK(r.ok());
        }
}
