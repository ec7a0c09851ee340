#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "snres/cocycles.hpp"
#include "snres/h3.hpp"

using namespace snres;

namespace {

struct Outcome {
    bool ok = false;
    std::string note;
};

AbelianGroupInfo elementary(std::size_t count) {
    AbelianGroupInfo g;
    g.torsion.assign(count, 2);
    return g;
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

Outcome normal_forms() {
    std::size_t fact = 1;
    for (int n = 2; n <= 7; ++n) {
        fact *= static_cast<std::size_t>(n);
        const std::vector<NormalForm> forms = enumerate_normal_forms(n);
        std::set<std::uint64_t> seen;
        for (const NormalForm& f : forms) {
            const Perm p = word_to_perm(f.word(), n);
            if (!(normal_form_perm(p) == f)) return {false, "round trip fails at n=" + std::to_string(n)};
            seen.insert(p.code());
        }
        if (forms.size() != fact || seen.size() != fact) return {false, "count mismatch at n=" + std::to_string(n)};
    }
    return {true, "n! forms, bijective, n = 2..7"};
}

Outcome random_words() {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Word w = random_word(rng, n, 30);
        Word cur = w;
        while (auto next = reduce_step(cur)) {
            if (!(complexity_vector(next->first, n) < complexity_vector(cur, n)))
                return {false, "measure does not decrease on " + format_word(w)};
            cur = next->first;
        }
        if (reduce(w, Strategy::Rightmost) != cur || reduce(w, Strategy::Random, &rng) != cur ||
            cur != nf_word(word_to_perm(w, n)))
            return {false, "strategies disagree on " + format_word(w)};
    }
    return {true, "10000 words, three strategies agree"};
}

Outcome d_squared() {
    for (int n = 3; n <= 8; ++n)
        if (!check_d_squared(n).empty()) return {false, "nonzero at n=" + std::to_string(n)};
    return {true, "n = 3..8"};
}

Outcome exactness() {
    for (int n = 3; n <= 5; ++n)
        if (!verify_p_exactness(n).exact()) return {false, "not exact at n=" + std::to_string(n)};
    return {true, "reduced homology vanishes in degrees 0..2, n = 3..5"};
}

Outcome q_boundaries() {
    int printed_min = 9;
    for (int n = 4; n <= 7; ++n) {
        const CrosscheckReport c = crosscheck_boundary_formulas(n, true);
        for (int k = 0; k < 9; ++k)
            if (c.matches[k] != c.cells[k]) return {false, "corrected table fails at n=" + std::to_string(n)};
        if (n >= 6) printed_min = std::min(printed_min, crosscheck_boundary_formulas(n, false).classes_matching());
    }
    return {true, "all classes match with the listed corrections; " + std::to_string(printed_min) +
                      " of 9 as printed (target 8 not met)"};
}

Outcome chain_maps() {
    for (int n = 4; n <= 8; ++n) {
        const ChainMapReport r = verify_chain_maps(n, n <= 6 ? 3 : 2);
        if (!r.ok()) return {false, "fails at n=" + std::to_string(n) + ": " + r.failures.front().what};
    }
    return {true, "psi_3 for n = 4..6, phi and psi_2 phi_2 = id for n <= 8"};
}

Outcome untwisted() {
    const AbelianGroupInfo z2 = elementary(1);
    for (int n = 4; n <= 8; ++n) {
        const FreeComplex P = p_complex(n);
        const CoefficientModule R = CoefficientModule::trivial(n);
        const HomologyReport h1 = compute_homology(P, R, 1, false), h2 = compute_homology(P, R, 2, false);
        if (!(h1.info == z2) || !(h2.info == z2) || h1.representatives != std::vector<std::string>{"e1"} ||
            h2.representatives != std::vector<std::string>{"d1,3"})
            return {false, "mismatch at n=" + std::to_string(n)};
    }
    return {true, "H_1 = H_2 = Z/2 with e1, d1,3 for n = 4..8"};
}

Outcome twisted() {
    for (int n = 4; n <= 8; ++n) {
        const FreeComplex P = p_complex(n);
        for (int k = 2; k <= n / 2; ++k) {
            const CoefficientModule M = CoefficientModule::permutation(n, k);
            if (!(homology(P, M, 1) == elementary(2))) return {false, "H_1 at n=" + std::to_string(n)};
            if (k >= 4 && (!(homology(P, M, 2) == elementary(3)) || !(cohomology(P, M, 2) == elementary(2))))
                return {false, "degree 2 at n=" + std::to_string(n)};
        }
    }
    const FreeComplex P8 = p_complex(8);
    const CoefficientModule M4 = CoefficientModule::permutation(8, 4, RingSpec::Zmod(4));
    if (!(homology(P8, M4, 2) == elementary(5)) || !(cohomology(P8, M4, 2) == elementary(5)))
        return {false, "Z/4 coefficients"};
    // counts of R[2] summands in H^1, of R[2] and R/2R summands in H^2
    const std::vector<std::array<int, 5>> small{{2, 1, 0, 0, 0}, {3, 1, 1, 0, 1}, {4, 1, 1, 0, 1},
                                                {4, 2, 2, 1, 2}, {5, 2, 2, 1, 2}, {6, 2, 2, 2, 2}};
    for (long m : {0L, 2L, 4L})
        for (const auto& c : small) {
            const std::size_t r2 = m == 0 ? 0 : 1;
            const FreeComplex P = p_complex(c[0]);
            const CoefficientModule M = CoefficientModule::permutation(c[0], c[1], RingSpec{m});
            if (!(cohomology(P, M, 1) == elementary(r2 * c[2])) ||
                !(cohomology(P, M, 2) == elementary(r2 * c[3] + c[4])))
                return {false, "small case (" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ")"};
        }
    return {true, "Z and Z/4 goldens, six small cases over Z, Z/2, Z/4"};
}

Outcome shapiro() {
    for (const RingSpec ring : {RingSpec::Z(), RingSpec::Zmod(4)})
        for (int n = 2; n <= 8; ++n)
            for (int k = 1; k <= std::min(4, n / 2); ++k)
                if (!shapiro_crosscheck(n, k, ring).ok())
                    return {false, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + ring.name()};
    return {true, "H_i and H^i, i = 1, 2, n <= 8, k <= 4, Z and Z/4"};
}

Outcome cocycles() {
    const CocycleSuiteReport r = run_cocycle_suite(8, 4, {2, 4});
    if (!r.ok()) return {false, r.failures.front().what + ": " + r.failures.front().detail};
    return {true, std::to_string(r.cochains) + " cochains, " + std::to_string(r.isomorphisms) + " isomorphisms, " +
                      std::to_string(r.pairings) + " pairings"};
}

Outcome third_homology() {
    AbelianGroupInfo expected;
    expected.torsion = {2, 2, 12};
    if (!(h3_via_q(6) == expected)) return {false, "h3_via_q(6) = " + h3_via_q(6).str()};
    for (int n : {3, 4})
        if (!(h3_via_q(n) == h3_via_bar(n))) return {false, "bar oracle differs at n=" + std::to_string(n)};
    const H3CertificateReport c = h3_certificates(6);
    for (const CertificateCheck& x : c.checks)
        if (!x.ok) return {false, "certificate " + x.name + ": " + x.detail};
    return {true, "Z/2 + Z/2 + Z/12 for n = 6, oracles n = 3, 4, " + std::to_string(c.checks.size()) +
                      " certificates"};
}

Outcome d8() {
    const D8Report r = d8_suite();
    if (!r.ok()) return {false, "H_3(D8) = " + r.h3.str()};
    const TransferReport t = transfer_check(6);
    if (!t.ok()) return {false, "transfer value " + std::to_string(t.value)};
    return {true, "2401 tuples, chi(c) = 1, H_3(D8) = " + r.h3.str() + ", transfer = " +
                      std::string(t.value == 1 ? "1" : "-1")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"normal-form bijectivity", normal_forms},
        {"rewriting termination and confluence", random_words},
        {"boundary squared vanishes in P", d_squared},
        {"exactness of P", exactness},
        {"Q boundary cross-check", q_boundaries},
        {"chain maps", chain_maps},
        {"untwisted goldens", untwisted},
        {"twisted goldens", twisted},
        {"Shapiro cross-check", shapiro},
        {"cocycle suite", cocycles},
        {"third homology", third_homology},
        {"D8 suite and transfer", d8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.ok) ++failed;
        std::printf("%s %2zu %s: %s (%.1f s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.note.c_str(), secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
