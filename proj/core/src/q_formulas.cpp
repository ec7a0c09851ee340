#include <stdexcept>

#include "snres/bar_quotient.hpp"

namespace snres {

namespace {

Word cat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Word S(int i) { return Word{{i, false}}; }
Word R(int a, int b) { return ramp_word(a, b); }

class Table {
public:
    explicit Table(int n) : n_(n), out_(n) {}

    GroupRingElem g(const Word& w) const { return GroupRingElem::word(w, n_); }
    GroupRingElem one() const { return GroupRingElem::one(n_); }
    GroupRingElem s(int i) const { return g(S(i)); }

    // Adds coeff * [w1|w2]; a cell with an identity entry is degenerate and contributes 0.
    void add(const GroupRingElem& coeff, const Word& w1, const Word& w2) {
        for (const Word* w : {&w1, &w2})
            for (const Letter& l : *w)
                if (l.index < 1 || l.index >= n_)
                    throw std::out_of_range("formula references s" + std::to_string(l.index));
        BarSimplex c;
        for (const Word* w : {&w1, &w2}) {
            const Perm p = word_to_perm(*w, n_);
            if (p.is_identity()) return;
            c.entries.push_back(p);
        }
        out_.add(c, coeff);
    }

    BarChain result() const { return out_; }

private:
    int n_;
    BarChain out_;
};

int first_index(const Word& w) { return w.front().index; }

}  // namespace

BarChain formula_boundary(const BarSimplex& cell, int n, bool corrected) {
    const std::vector<int> types = essential_rule_types(cell);
    if (types.size() != 2) throw std::invalid_argument("formula_boundary: expected an essential 3-cell");
    const Word w2 = nf_word(cell.entries[1]);
    const Word w3 = nf_word(cell.entries[2]);
    const int a = nf_word(cell.entries[0]).front().index;
    Table T(n);
    auto s = [&](int i) { return T.s(i); };
    auto g = [&](const Word& w) { return T.g(w); };
    const auto one = T.one();
    const int cls = 3 * types[0] + types[1];
    switch (cls) {
        case 0: {  // [s_i|s_i|s_i]
            const int i = a;
            T.add(s(i) - one, S(i), S(i));
            break;
        }
        case 1: {  // [s_i|s_i|s_j]
            const int i = a, j = first_index(w3);
            T.add(s(i) + one, S(i), S(j));
            T.add(s(j) - one, S(i), S(i));
            break;
        }
        case 2: {  // [s_j|s_j|rho(i,j)]
            const int j = a, i = first_index(w3);
            T.add(s(j) + one, S(j), R(i, j));
            T.add(g(R(i, j)), S(j - 1), S(j - 1));
            T.add(-one, S(j), S(j));
            break;
        }
        case 3: {  // [s_i|s_j|s_j]
            const int i = a, j = first_index(w2);
            T.add(s(i) - one, S(j), S(j));
            T.add(-(s(j) + one), S(i), S(j));
            break;
        }
        case 4: {  // [s_i|s_j|s_k]
            const int i = a, j = first_index(w2), k = first_index(w3);
            T.add(s(i) - one, S(j), S(k));
            T.add(-(s(j) - one), S(i), S(k));
            T.add(s(k) - one, S(i), S(j));
            break;
        }
        case 5: {  // [s_i|s_j|rho(k,j)]
            const int i = a, j = first_index(w2), k = first_index(w3);
            if (i < k - 1) {
                T.add(s(i) - one, S(j), R(k, j));
                T.add(-one, S(i), S(j));
                T.add(g(R(k, j)), S(i), S(j - 1));
                for (int l = 0; l <= j - k; ++l) T.add((one - s(j)) * g(R(k, k + l - 1)), S(i), S(k + l));
            } else if (i == k - 1) {
                T.add(s(k - 1), S(j), R(k, j));
                T.add(-one, S(j), R(k - 1, j));
                T.add(-one, S(k - 1), S(j));
            } else if (i == k) {
                T.add(s(k), S(j), R(k, j));
                T.add(one - s(j), S(k), S(k));
                T.add(-one, S(j), R(k + 1, j));
                T.add(-one, S(k), S(j));
            } else {
                T.add(s(i) - one, S(j), R(k, j));
                T.add(one - s(j), S(i), R(k, i));
                T.add(g(corrected ? R(k, j) : R(k, i)), S(i - 1), S(j - 1));
                if (corrected) T.add(-one, S(i), S(j));
                for (int l = 0; l <= j - i - 1; ++l)
                    T.add((one - s(j)) * g(cat(R(k, i), R(i + 1, i + l))), S(i - 1), S(i + 1 + l));
            }
            break;
        }
        case 6: {  // [s_j|rho(i,j)|s_j]
            const int j = a, i = first_index(w2);
            T.add(s(j) * g(R(i, j - 1)), S(j), S(j));
            T.add(-g(R(i, j - 1)), S(j), cat(S(j - 1), S(j)));
            for (int k = i - 1; k <= j - 3; ++k) T.add(-g(R(i, k)), S(k + 1), S(j));
            T.add(-one, S(j), R(i, j));
            T.add(-g(R(i, j - 2)), S(j - 1), S(j - 1));
            break;
        }
        case 7: {  // [s_i|rho(k,i)|s_j]
            const int i = a, k = first_index(w2), j = first_index(w3);
            T.add(one, S(i), S(j));
            T.add(s(j) - one, S(i), R(k, i));
            T.add(-g(R(k, i)), S(i - 1), S(j));
            for (int l = 0; l <= i - k; ++l) T.add((s(i) - one) * g(R(k, k + l - 1)), S(k + l), S(j));
            break;
        }
        case 8: {  // [s_j|rho(i,j)|rho(k,j)]
            const int j = a, i = first_index(w2), k = first_index(w3);
            const auto sj1 = s(j) - one;
            if (i > k) {
                T.add(one, S(j), R(k, j));
                T.add(g(R(k, j)), S(j - 1), R(i - 1, j - 1));
                T.add(-g(R(i, j)), S(j - 1), R(k, j - 1));
                T.add(-g(corrected ? cat(R(i, j), R(k, j - 1)) : R(k, j - 1)), S(j - 2), S(j));
                T.add(-one, S(j), R(i, j));
                for (int l = 0; l <= j - i; ++l) T.add(sj1 * g(R(i, i + l - 1)), S(i + l), R(k, i + l));
                for (int l = 0; l <= j - i; ++l)
                    for (int t = 1; t <= j - i - l; ++t)
                        T.add(sj1 * g(cat(cat(R(i, i + l - 1), R(k, i + l)), R(i + l + 1, i + l + t - 1))),
                              S(i + l - 1), S(i + l + t));
            } else if (corrected && k == j - 1) {
                T.add(s(j) * g(R(i, j - 2)), S(j - 1), S(j - 1));
                T.add(s(j) * g(R(i, j - 1)), S(j), cat(S(j - 1), S(j)));
                for (int l = 0; l <= j - i - 2; ++l) T.add(s(j) * g(R(i, i + l - 1)), S(i + l), S(j));
                T.add(-g(R(i, j)), S(j - 1), S(j - 1));
                T.add(-g(R(i, j - 1)), S(j), S(j));
                T.add(one, S(j), S(j));
                T.add(-one, S(j), R(i, j));
            } else {
                T.add(one, S(j), R(k + 1, j));
                T.add(g(R(k + 1, j)), S(j - 1), R(i, j - 1));
                T.add(-g(R(i, j)), S(j - 1), R(k, j - 1));
                T.add(-g(cat(R(i, j), R(k, j - 1))), S(j - 2), S(j));
                T.add(-one, S(j), R(i, j));
                for (int l = k - i; l <= j - i; ++l)
                    T.add(sj1 * g(R(i, corrected ? i + l - 1 : i + l)), S(i + l), R(k, i + l));
                for (int l = 0; l <= k - i - 1; ++l)
                    for (int t = 1; t <= j - k; ++t)
                        T.add(sj1 * g(cat(R(i, i + l - 1), R(k + 1, k + t - 1))), S(i + l), S(k + t));
                for (int l = k - i + 1; l <= j - i; ++l)
                    for (int t = 1; t <= j - i - l; ++t)
                        T.add(sj1 * g(cat(cat(R(i, i + l - 1), R(k, i + l)), R(i + l + 1, i + l + t - 1))),
                              S(i + l - 1), S(i + l + t));
            }
            break;
        }
        default: throw std::logic_error("formula_boundary: bad class");
    }
    return T.result();
}

int CrosscheckReport::classes_matching() const {
    int c = 0;
    for (int k = 0; k < 9; ++k)
        if (cells[k] > 0 && cells[k] == matches[k]) ++c;
    return c;
}

CrosscheckReport crosscheck_boundary_formulas(int n, bool corrected) {
    CrosscheckReport rep;
    rep.n = n;
    rep.corrected = corrected;
    QRewriter qr(n, true);
    for (const BarSimplex& c : enumerate_essential(n, 3)) {
        CrosscheckEntry e;
        e.cell = c;
        e.cls = essential_class(c);
        const BarChain expected = qr.boundary_q(c);
        try {
            e.difference = qr.q(formula_boundary(c, n, corrected)) - expected;
            e.match = e.difference.is_zero();
        } catch (const std::out_of_range& err) {
            e.error = err.what();
        }
        ++rep.cells[e.cls];
        if (e.match) ++rep.matches[e.cls];
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace snres
