#include <random>

#include "doctest.h"
#include "snres/group_ring.hpp"

using namespace snres;

namespace {

GroupRingElem random_elem(std::mt19937_64& rng, int n, const std::vector<Perm>& G) {
    GroupRingElem a(n);
    for (int t = 0; t < 4; ++t) a.add_term(G[rng() % G.size()], static_cast<int>(rng() % 7) - 3);
    return a;
}

}  // namespace

TEST_CASE("group ring arithmetic examples") {
    const int n = 3;
    const GroupRingElem one = GroupRingElem::one(n);
    const GroupRingElem s1 = GroupRingElem::of(Perm::transposition(n, 1));
    CHECK((one + s1) * (one - s1) == GroupRingElem(n));
    CHECK((one + s1) * (one + s1) == Int(2) * (one + s1));
    const GroupRingElem x = GroupRingElem::words(n, {{1, {}}, {-1, {1}}, {1, {2, 1}}});
    REQUIRE(x.terms().size() == 3);
    CHECK(x.coeff(Perm(n)) == 1);
    CHECK(x.coeff(Perm::transposition(n, 1)) == -1);
    CHECK(x.coeff(word_to_perm(positive_word({2, 1}), n)) == 1);
}

TEST_CASE("ring axioms and word embedding") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 5; ++n) {
        const auto G = all_perms(n);
        for (int t = 0; t < 30; ++t) {
            auto a = random_elem(rng, n, G), b = random_elem(rng, n, G), c = random_elem(rng, n, G);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            const Perm g = G[rng() % G.size()], h = G[rng() % G.size()];
            CHECK(GroupRingElem::of(g) * GroupRingElem::of(h) == GroupRingElem::of(g * h));
            CHECK(a.left_mul(g) == GroupRingElem::of(g) * a);
        }
    }
}

TEST_CASE("Z/m coefficients are canonical") {
    const RingSpec z4 = RingSpec::Zmod(4);
    GroupRingElem a = GroupRingElem::of(Perm(3), 6, z4);
    CHECK(a.coeff(Perm(3)) == 2);
    a *= 2;
    CHECK(a.is_zero());
    GroupRingElem b = GroupRingElem::of(Perm(3), -1, z4);
    CHECK(b.coeff(Perm(3)) == 3);
    CHECK_THROWS(GroupRingElem::of(Perm(3)) + b);
}

TEST_CASE("serialization order") {
    GroupRingElem a(3);
    a.add_term(Perm::transposition(3, 2), 2);
    a.add_term(Perm(3), -1);
    CHECK(a.term_strings() == std::vector<std::string>{"-1 * [1,2,3]", "2 * [1,3,2]"});
}
