#include <random>

#include "doctest.h"
#include "snres/cocycles.hpp"
#include "snres/h3.hpp"

using namespace snres;

namespace {

AbelianGroupInfo G(std::size_t free_rank, std::vector<long> torsion) {
    AbelianGroupInfo g;
    g.free_rank = free_rank;
    for (long t : torsion) g.torsion.push_back(t);
    return g;
}

std::vector<Int> unit(std::size_t dim, std::size_t i, const Int& c = 1) {
    std::vector<Int> v(dim, 0);
    v[i] = c;
    return v;
}

std::vector<Int> apply_to(const IntMatrix& m, const std::vector<Int>& v) {
    std::vector<Int> out(m.rows(), 0);
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, x] : m.column(c)) out[r] += x * v[c];
    return out;
}

std::uint32_t top_subset(int n, int k) {
    std::uint32_t t = 0;
    for (int x = n - k + 1; x <= n; ++x) t |= 1u << (x - 1);
    return t;
}

Int gcd_order(const AbelianGroupInfo& g, long m) {
    Int out = 1;
    for (const Int& d : g.torsion) out *= boost::multiprecision::gcd(d, Int(m));
    for (std::size_t i = 0; i < g.free_rank; ++i) out *= m;
    return out;
}

Int tor_order(const AbelianGroupInfo& g, long m) {
    Int out = 1;
    for (const Int& d : g.torsion) out *= boost::multiprecision::gcd(d, Int(m));
    return out;
}

}  // namespace

TEST_CASE("coinvariant boundaries in degree 3") {
    const int n = 6;
    const FreeComplex P = p_complex(n);
    const IntMatrix d3 = coinvariant_matrix(P, CoefficientModule::trivial(n), 3);
    const std::size_t r3 = P.rank(3), r2 = P.rank(2);
    auto d = [&](const std::string& cell) { return apply_to(d3, unit(r3, P.index_of(3, cell))); };
    auto two = [&](std::initializer_list<std::pair<std::string, long>> t) {
        std::vector<Int> v(r2, 0);
        for (const auto& [c, k] : t) v[P.index_of(2, c)] += k;
        return v;
    };
    CHECK(d("c31_2") == two({}));
    CHECK(d("c32_1,3") == two({{"d1,3", -2}}));
    CHECK(d("c32_3,1") == two({{"d1,3", 2}}));
    CHECK(d("c33_1,3,5") == two({}));
    CHECK(d("c34_1,4") == two({{"d1,4", 1}, {"d2,4", -1}}));
    CHECK(d("c34_4,1") == two({{"d1,5", 1}, {"d1,4", -1}}));
    CHECK(d("c35_2") == two({{"b2", 2}, {"c2", 1}, {"c3", -1}}));
    CHECK(d("c36_1") == two({}));
    CHECK(d("c37_1") == two({{"d1,3", 2}}));
}

TEST_CASE("untwisted goldens with representatives") {
    for (int n = 4; n <= 8; ++n) {
        const FreeComplex P = p_complex(n);
        const CoefficientModule R = CoefficientModule::trivial(n);
        const HomologyReport h1 = compute_homology(P, R, 1, false);
        const HomologyReport h2 = compute_homology(P, R, 2, false);
        CHECK(h1.info == G(0, {2}));
        CHECK(h2.info == G(0, {2}));
        CHECK(h1.representatives == std::vector<std::string>{"e1"});
        CHECK(h2.representatives == std::vector<std::string>{"d1,3"});
        CHECK(cohomology(P, R, 1) == G(0, {}));
        CHECK(cohomology(P, R, 2) == G(0, {2}));
    }
}

TEST_CASE("twisted goldens") {
    const FreeComplex P8 = p_complex(8);
    CHECK(homology(P8, CoefficientModule::permutation(8, 1), 1) == G(0, {2}));
    for (int k = 2; k <= 4; ++k) {
        const CoefficientModule M = CoefficientModule::permutation(8, k);
        CHECK(homology(P8, M, 1) == G(0, {2, 2}));
    }
    for (int n = 8; n <= 8; ++n) {
        const CoefficientModule M = CoefficientModule::permutation(n, 4);
        CHECK(homology(P8, M, 2) == G(0, {2, 2, 2}));
        CHECK(cohomology(P8, M, 2) == G(0, {2, 2}));
    }
    const CoefficientModule M4 = CoefficientModule::permutation(8, 4, RingSpec::Zmod(4));
    CHECK(homology(P8, M4, 2) == G(0, {2, 2, 2, 2, 2}));
    CHECK(cohomology(P8, M4, 2) == G(0, {2, 2, 2, 2, 2}));

    const FreeComplex P6 = p_complex(6);
    const HomologyReport r = compute_homology(P6, CoefficientModule::permutation(6, 2), 2, false);
    CHECK(r.info == G(0, {2, 2}));
    CHECK(r.representatives == std::vector<std::string>{"d1,3 (x) v{5,6}", "d1,5 (x) v{5,6}"});
}

TEST_CASE("small cases") {
    // S_2 acting on its single 2-subset, and S_3 on 2-subsets (the complement of 1-subsets)
    const FreeComplex P2 = p_complex(2);
    const CoefficientModule M22 = CoefficientModule::permutation(2, 2);
    CHECK(M22.rank() == 1);
    CHECK(homology(P2, M22, 1) == G(0, {2}));
    CHECK(homology(P2, M22, 2) == G(0, {}));
    const FreeComplex P3 = p_complex(3);
    CHECK(homology(P3, CoefficientModule::permutation(3, 2), 1) == homology(P3, CoefficientModule::permutation(3, 1), 1));
    CHECK(homology(P3, CoefficientModule::permutation(3, 2), 2) == homology(P3, CoefficientModule::permutation(3, 1), 2));
    CHECK(homology(P3, CoefficientModule::trivial(3), 1) == G(0, {2}));
    CHECK(homology(P3, CoefficientModule::trivial(3), 2) == G(0, {}));
    CHECK(homology(p_complex(1), CoefficientModule::trivial(1), 1) == G(0, {}));
}

TEST_CASE("Shapiro cross-check") {
    for (const RingSpec ring : {RingSpec::Z(), RingSpec::Zmod(4)})
        for (int n = 2; n <= 8; ++n)
            for (int k = 1; k <= std::min(4, n / 2); ++k) {
                const ShapiroReport r = shapiro_crosscheck(n, k, ring);
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(ring.name());
                CHECK(r.entries.size() == 4);
                for (const ShapiroEntry& e : r.entries)
                    if (!e.ok())
                        MESSAGE((e.cohomology ? "H^" : "H_") << e.degree << " " << e.twisted.str() << " vs "
                                                            << e.product.str());
                CHECK(r.ok());
            }
}

TEST_CASE("universal coefficients") {
    for (int n = 4; n <= 6; ++n) {
        const FreeComplex P = p_complex(n);
        for (int k = 0; k <= 2; ++k) {
            auto module = [&](RingSpec ring) {
                return k == 0 ? CoefficientModule::trivial(n, ring) : CoefficientModule::permutation(n, k, ring);
            };
            const AbelianGroupInfo h1 = homology(P, module(RingSpec::Z()), 1);
            const AbelianGroupInfo h2 = homology(P, module(RingSpec::Z()), 2);
            for (long m : {2L, 4L}) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(m);
                const AbelianGroupInfo a2 = homology(P, module(RingSpec::Zmod(m)), 2);
                CHECK(a2.free_rank == 0);
                CHECK(a2.torsion_order() == gcd_order(h2, m) * tor_order(h1, m));
            }
            const AbelianGroupInfo c2 = cohomology(P, module(RingSpec::Z()), 2);
            CHECK(c2.free_rank == h2.free_rank);
            CHECK(c2.torsion == h1.torsion);
        }
    }
}

TEST_CASE("pairing is compatible with the boundary") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int n : {4, 5, 6})
        for (int k : {0, 2}) {
            const FreeComplex P = p_complex(n);
            const CoefficientModule M = k == 0 ? CoefficientModule::trivial(n) : CoefficientModule::permutation(n, k);
            for (int dim = 0; dim <= 1; ++dim)
                for (int trial = 0; trial < 5; ++trial) {
                    Cochain f{"f", dim, M, std::vector<Int>(P.rank(dim) * M.rank())};
                    for (Int& x : f.values) x = dist(rng);
                    std::vector<Int> z(P.rank(dim + 1) * M.rank());
                    for (Int& x : z) x = dist(rng);
                    const Cochain df{"df", dim + 1, M, coboundary(P, f)};
                    const std::vector<Int> dz = apply_to(coinvariant_matrix(P, M, dim + 1), z);
                    CHECK(pairing(df, z) == pairing(f, dz));
                }
        }
}

TEST_CASE("klein four complex against the bar oracle") {
    const int n = 4;
    const Perm g1 = Perm::transposition(n, 1), g2 = Perm::transposition(n, 3);
    const FreeComplex K = klein_complex(n, g1, g2, 4);
    const BarOracle bar(generated_group({g1, g2}));
    CHECK(bar.elements().size() == 3);
    for (int t = 1; t <= 3; ++t) {
        CAPTURE(t);
        CHECK(homology(K, CoefficientModule::trivial(n), t) == bar.homology(t));
    }
    CHECK(homology(K, CoefficientModule::trivial(n), 1) == G(0, {2, 2}));
    CHECK(homology(K, CoefficientModule::trivial(n), 2) == G(0, {2}));
    CHECK(homology(K, CoefficientModule::trivial(n), 3) == G(0, {2, 2, 2}));
}

TEST_CASE("the k-subset module is a permutation action") {
    const int n = 5;
    const std::vector<Perm> group = symmetric_group(n);
    for (int k = 1; k <= 3; ++k) {
        const CoefficientModule M = CoefficientModule::permutation(n, k);
        CHECK(M.rank() == (k == 1 ? 5u : 10u));
        for (std::size_t i = 0; i < M.rank(); ++i) CHECK(M.act(Perm(n), i) == i);
        for (std::size_t a = 0; a < group.size(); a += 7)
            for (std::size_t b = 0; b < group.size(); b += 11) {
                std::vector<bool> hit(M.rank(), false);
                for (std::size_t m = 0; m < M.rank(); ++m) {
                    CHECK(M.act(group[a] * group[b], m) == M.act(group[a], M.act(group[b], m)));
                    hit[M.act(group[a], m)] = true;
                }
                CHECK(std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }));
            }
    }
}

TEST_CASE("one shared parameter does not generate H_2 with 4-subsets") {
    const int n = 8, k = 4;
    const FreeComplex P = p_complex(n);
    const CoefficientModule M = CoefficientModule::permutation(n, k);
    const std::size_t vt = M.subset_index(top_subset(n, k));
    const std::vector<Int> d13 = basis_chain(P, M, 2, {{"d1,3", 1}}, vt);
    const std::vector<Int> d15 = basis_chain(P, M, 2, {{"d1,5", -1}}, vt);
    const std::vector<Int> d57 = basis_chain(P, M, 2, {{"d5,7", 1}}, vt);
    const std::vector<Int> shared = basis_chain(P, M, 2, {{"d1,5", -1}, {"d5,7", 1}}, vt);
    const IsomorphismCheck independent = check_generates_homology("independent", P, M, 2, {d13, d15, d57});
    const IsomorphismCheck one = check_generates_homology("shared", P, M, 2, {d13, shared});
    CHECK(independent.ok());
    CHECK(independent.generated == 8);
    CHECK_FALSE(one.ok());
    CHECK(one.generated == 4);
}

TEST_CASE("homology class coordinates") {
    const int n = 5;
    const FreeComplex P = p_complex(n);
    const CoefficientModule R = CoefficientModule::trivial(n);
    const IntMatrix d3 = coinvariant_matrix(P, R, 3), d2 = coinvariant_matrix(P, R, 2);
    HomologyClasses hc(d3, d2, P.rank(2));
    CHECK(hc.group() == G(0, {2}));
    const std::vector<Int> d13 = unit(P.rank(2), P.index_of(2, "d1,3"));
    CHECK(hc.is_cycle(d13));
    CHECK(hc.coordinates(d13) == std::vector<Int>{1});
    std::vector<Int> three = d13;
    for (Int& x : three) x *= 3;
    CHECK(hc.coordinates(three) == std::vector<Int>{1});
    const std::vector<Int> boundary = apply_to(d3, unit(P.rank(3), P.index_of(3, "c32_1,3")));
    CHECK(hc.coordinates(boundary) == std::vector<Int>{0});
    CHECK_FALSE(hc.coordinates(unit(P.rank(2), P.index_of(2, "c1"))).has_value());
}

TEST_CASE("argument checks") {
    const FreeComplex P = p_complex(4);
    CHECK_THROWS_AS(homology(P, CoefficientModule::trivial(4), 3), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientModule::parse("perm:x", 4), std::invalid_argument);
    CHECK(CoefficientModule::parse("perm:2", 4).rank() == 6);
    CHECK(CoefficientModule::parse("trivial", 4).rank() == 1);
}

TEST_CASE("cohomology small-case list") {
    // counts of R[2] and R/2R summands in H^1 and H^2
    struct Case {
        int n, k, h1_torsion, h2_torsion, h2_quotient;
    };
    const std::vector<Case> cases{{2, 1, 0, 0, 0}, {3, 1, 1, 0, 1}, {4, 1, 1, 0, 1},
                                  {4, 2, 2, 1, 2}, {5, 2, 2, 1, 2}, {6, 2, 2, 2, 2}};
    for (long m : {0L, 2L, 4L}) {
        const std::size_t r2 = m == 0 ? 0 : 1;
        for (const Case& c : cases) {
            CAPTURE(m);
            CAPTURE(c.n);
            CAPTURE(c.k);
            const FreeComplex P = p_complex(c.n);
            const CoefficientModule M = CoefficientModule::permutation(c.n, c.k, RingSpec{m});
            CHECK(cohomology(P, M, 1) == G(0, std::vector<long>(r2 * c.h1_torsion, 2)));
            CHECK(cohomology(P, M, 2) == G(0, std::vector<long>(r2 * c.h2_torsion + c.h2_quotient, 2)));
        }
    }
}
