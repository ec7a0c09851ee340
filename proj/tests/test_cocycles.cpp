#include "doctest.h"
#include "snres/cocycles.hpp"

using namespace snres;

TEST_CASE("hand values of the untwisted cocycles") {
    for (long m : {2L, 4L}) {
        const RingSpec ring = RingSpec::Zmod(m);
        const Int r = m / 2;
        for (int n = 4; n <= 6; ++n) {
            const FreeComplex P = p_complex(n);
            const CoefficientModule R = CoefficientModule::trivial(n, ring);
            const Cochain beta = build_cocycle("beta", r, n, 0, ring);
            const Cochain kappa = build_cocycle("kappa", r, n, 0, ring);
            const Cochain alpha = build_cocycle("alpha", 1, n, 0, ring);
            CHECK(verify_cocycle(P, beta));
            CHECK(verify_cocycle(P, kappa));
            CHECK(verify_cocycle(P, alpha));
            CHECK(pairing(beta, basis_chain(P, R, 2, {{"d1,3", 1}}, 0)) == r);
            CHECK(pairing(kappa, basis_chain(P, R, 1, {{"e1", 1}}, 0)) == r);
            CHECK(pairing(kappa, basis_chain(P, R, 1, {{"e2", 1}}, 0)) == r);
        }
    }
}

TEST_CASE("illegal parameters are rejected") {
    const RingSpec z4 = RingSpec::Zmod(4);
    CHECK(!cocycle_parameter_error("beta", 1, 6, 0, z4).empty());
    CHECK(cocycle_parameter_error("beta", 2, 6, 0, z4).empty());
    CHECK(cocycle_parameter_error("alpha", 3, 6, 0, z4).empty());
    CHECK(!cocycle_parameter_error("kappa_hat", 2, 6, 1, z4).empty());
    CHECK(cocycle_parameter_error("kappa_hat", 2, 6, 2, z4).empty());
    CHECK(!cocycle_parameter_error("beta_tilde", 2, 8, 3, z4).empty());
    CHECK(cocycle_parameter_error("beta_tilde", 2, 8, 4, z4).empty());
    CHECK_THROWS_AS(build_cocycle("beta", 1, 6, 0, z4), std::invalid_argument);
    CHECK_THROWS_AS(build_cocycle("gamma", 1, 6, 0, z4), std::invalid_argument);
    CHECK_THROWS_AS(build_product_cocycle("pi1_beta0", 1, 4, 2, z4), std::invalid_argument);
    CHECK(in_two_torsion(0, RingSpec::Z()));
    CHECK_FALSE(in_two_torsion(1, RingSpec::Z()));
    CHECK(in_two_torsion(1, RingSpec::Zmod(2)));
}

TEST_CASE("twisted cocycles are cocycles and pair with the stabilizer classes") {
    const RingSpec z2 = RingSpec::Zmod(2);
    const int n = 8, k = 4;
    const FreeComplex P = p_complex(n);
    for (const std::string& fam : cocycle_families()) {
        const Cochain f = build_cocycle(fam, 1, n, k, z2);
        CAPTURE(fam);
        CHECK(verify_cocycle(P, f));
    }
}

TEST_CASE("pairing matrix nondegeneracy") {
    PairingMatrix pm;
    pm.rows = {"a", "b"};
    pm.cols = {"x", "y"};
    pm.values = {{2, 2}, {0, 2}};
    CHECK(pm.nondegenerate());
    pm.values = {{2, 2}, {2, 2}};
    CHECK_FALSE(pm.nondegenerate());
    pm.values = {{1, 0}, {0, 1}};
    CHECK(pm.nondegenerate());
}

TEST_CASE("klein cocycle on the mixed cell") {
    const int n = 4;
    const FreeComplex K = klein_complex(n, Perm::transposition(n, 1), Perm::transposition(n, 3), 3);
    const Cochain f = build_klein_cocycle(1, K, RingSpec::Zmod(2));
    CHECK(verify_cocycle(K, f));
    const std::vector<Int> mixed = basis_chain(K, CoefficientModule::trivial(n, RingSpec::Zmod(2)), 2, {{"f1,1", 1}}, 0);
    CHECK(pairing(f, mixed) == 1);
}

TEST_CASE("cocycle suite") {
    const CocycleSuiteReport r = run_cocycle_suite(8, 4, {2, 4});
    for (const SuiteFailure& f : r.failures) MESSAGE(f.what << ": " << f.detail);
    CHECK(r.ok());
    CHECK(r.cochains > 700);
    CHECK(r.isomorphisms > 200);
    CHECK(r.pairings > 90);
    CHECK(r.illegal_rejected > 0);
}
