#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "snres/rewrite.hpp"

using namespace snres;

namespace {

// Bubble-sort factorization: a word for p built by sorting its one-line notation.
Word bubble_word(const Perm& p) {
    std::vector<int> v = p.images();
    std::vector<int> swaps;
    const int n = p.n();
    for (int pass = 0; pass < n; ++pass)
        for (int q = 0; q + 1 < n; ++q)
            if (v[q] > v[q + 1]) {
                std::swap(v[q], v[q + 1]);
                swaps.push_back(q + 1);
            }
    // v = p * s_{a1} * ... * s_{am} = id, so p = s_{am} ... s_{a1}
    Word w;
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) w.push_back({*it, false});
    return w;
}

Word random_word(std::mt19937_64& rng, int n, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> idx(1, n - 1);
    std::bernoulli_distribution inv(0.3);
    Word w;
    const std::size_t L = len(rng);
    for (std::size_t a = 0; a < L; ++a) w.push_back({idx(rng), inv(rng)});
    return w;
}

}  // namespace

TEST_CASE("word_to_perm") {
    CHECK(word_to_perm({}, 3).is_identity());
    CHECK(word_to_perm(parse_word("s1 s2"), 3) == Perm::from_images({2, 3, 1}));
    CHECK(word_to_perm(ramp_word(1, 3), 5)(4) == 1);
    CHECK_THROWS(word_to_perm(parse_word("s3"), 3));
}

TEST_CASE("reduce_step examples") {
    auto r0 = reduce_step(parse_word("s1'"));
    REQUIRE(r0);
    CHECK(r0->first == parse_word("s1"));
    CHECK(r0->second == Rule::R0);

    auto r1 = reduce_step(parse_word("s1 s1"));
    REQUIRE(r1);
    CHECK(r1->first.empty());
    CHECK(r1->second == Rule::R1);

    auto r3 = reduce_step(parse_word("s2 s1 s2"));
    REQUIRE(r3);
    CHECK(r3->first == parse_word("s1 s2 s1"));
    CHECK(r3->second == Rule::R3);

    CHECK_FALSE(reduce_step(parse_word("s1 s2 s1")));
}

TEST_CASE("normal_form_word examples") {
    NormalForm a = normal_form_word(parse_word("s1 s3"));
    CHECK(a.ramps == std::vector<Ramp>{{3, 3}, {1, 1}});
    const Word creep = parse_word("s1 s2 s3 s2 s1");
    CHECK(normal_form_word(creep).word() == creep);
    CHECK(normal_form_word(parse_word("s2 s1 s2")).word() == parse_word("s1 s2 s1"));
}

TEST_CASE("normal forms of S3 agree with brute-force matching of images") {
    // every word of length <= 4 reduces to the unique irreducible word of the same permutation
    std::map<std::uint64_t, Word> shortest;
    std::vector<Word> words{{}};
    for (int len = 0; len <= 4; ++len) {
        std::vector<Word> next;
        for (const Word& w : words) {
            const Perm p = word_to_perm(w, 3);
            if (is_irreducible(w)) {
                auto [it, fresh] = shortest.emplace(p.code(), w);
                CHECK((fresh || it->second == w));
            }
            for (int i = 1; i <= 2; ++i) {
                Word x = w;
                x.push_back({i, false});
                next.push_back(x);
            }
        }
        words = next;
    }
    CHECK(shortest.size() == 6);
    for (const auto& [code, w] : shortest) CHECK(nf_word(word_to_perm(w, 3)) == w);
}

TEST_CASE("normal_form_perm") {
    CHECK(normal_form_perm(Perm(5)).ramps.empty());
    for (int n = 2; n <= 6; ++n) CHECK(nf_word(Perm::transposition(n, 1)) == parse_word("s1"));
    for (const Perm& p : all_perms(4)) {
        const Word nf = nf_word(p);
        CHECK(word_to_perm(nf, 4) == p);
        CHECK(normal_form_word(bubble_word(p)).word() == nf);
        CHECK(word_to_perm(bubble_word(p), 4) == p);
    }
}

TEST_CASE("is_irreducible examples and characterization equivalence") {
    CHECK(is_irreducible(parse_word("s2 s3 s4 s5 s6 s1 s2 s3 s4 s3 s1 s2")));
    CHECK_FALSE(is_irreducible(parse_word("s1 s3")));
    CHECK_FALSE(is_irreducible(parse_word("s2'")));
    for (int n = 2; n <= 6; ++n) {
        std::vector<Word> layer{{}};
        for (int len = 0; len <= (n <= 4 ? 8 : 5); ++len) {
            std::vector<Word> next;
            for (const Word& w : layer) {
                CHECK(is_irreducible(w) == is_irreducible_by_ramps(w));
                for (int i = 1; i < n; ++i) {
                    Word x = w;
                    x.push_back({i, false});
                    next.push_back(x);
                }
            }
            layer = std::move(next);
        }
    }
}

TEST_CASE("complexity vector") {
    CHECK(complexity_vector(parse_word("s1 s1"), 3) == std::vector<int>{0, 0, 2, 0});
    const Word w = parse_word("s1 s3");
    CHECK(complexity_vector(w, 4) == std::vector<int>{0, 1, 0, 1, 1});
    CHECK(complexity_vector(reduce_step(w)->first, 4) == std::vector<int>{0, 1, 0, 1, 0});
}

TEST_CASE("random words: termination measure, soundness and confluence") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Word w = random_word(rng, n, 30);
        Word cur = w;
        while (auto next = reduce_step(cur)) {
            CHECK(complexity_vector(next->first, n) < complexity_vector(cur, n));
            cur = next->first;
        }
        CHECK(word_to_perm(cur, n) == word_to_perm(w, n));
        CHECK(reduce(w, Strategy::Rightmost) == cur);
        CHECK(reduce(w, Strategy::Random, &rng) == cur);
        CHECK(cur == nf_word(word_to_perm(w, n)));
    }
}

TEST_CASE("enumerate_normal_forms") {
    CHECK(enumerate_normal_forms(1).size() == 1);
    std::set<std::vector<int>> s3;
    for (const NormalForm& nf : enumerate_normal_forms(3)) {
        std::vector<int> idx;
        for (const Letter& l : nf.word()) idx.push_back(l.index);
        s3.insert(idx);
    }
    CHECK(s3 == std::set<std::vector<int>>{{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}});
    std::size_t fact = 1;
    for (int n = 2; n <= 7; ++n) {
        fact *= static_cast<std::size_t>(n);
        const auto forms = enumerate_normal_forms(n);
        CHECK(forms.size() == fact);
        std::set<std::uint64_t> images;
        for (const NormalForm& nf : forms) {
            CHECK(is_irreducible(nf.word()));
            images.insert(word_to_perm(nf.word(), n).code());
        }
        CHECK(images.size() == fact);
    }
}

TEST_CASE("word syntax") {
    CHECK(parse_word("s3 s3'") == Word{{3, false}, {3, true}});
    CHECK(format_word(parse_word("s1 s2'")) == "s1 s2'");
    CHECK(parse_word("").empty());
    CHECK_THROWS(parse_word("t3"));
}
