#include "snres/chain_maps.hpp"

#include <sstream>
#include <stdexcept>

namespace snres {

namespace {

Word cat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

class Builder {
public:
    explicit Builder(int n) : n_(n), out_(n) {}

    GroupRingElem g(const Word& w) const { return GroupRingElem::word(w, n_); }
    GroupRingElem r(int a, int b) const { return g(ramp_word(a, b)); }
    GroupRingElem one() const { return GroupRingElem::one(n_); }

    void add(const GroupRingElem& coeff, const PCell& c) {
        if (!is_valid_pcell(c, n_)) throw std::logic_error("chain references invalid cell " + c.name());
        out_.add(c, coeff);
    }

    PChain result() const { return out_; }

private:
    int n_;
    PChain out_;
};

std::string chain_str(const PChain& x) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, a] : x.terms()) {
        os << (first ? "" : " + ") << "(" << a.str() << ")" << c.name();
        first = false;
    }
    return first ? "0" : os.str();
}

std::string chain_str(const BarChain& x) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, a] : x.terms()) {
        os << (first ? "" : " + ") << "(" << a.str() << ")" << c.str();
        first = false;
    }
    return first ? "0" : os.str();
}

int first_index(const Perm& p) { return nf_word(p).front().index; }

}  // namespace

PChain psi(const BarSimplex& s, int n) {
    Builder B(n);
    switch (s.dim()) {
        case 0: B.add(B.one(), pbase()); break;
        case 1: B.add(B.one(), pe(first_index(s.entries[0]))); break;
        case 2: {
            const auto types = essential_rule_types(s);
            const int a = first_index(s.entries[0]);
            const int b = first_index(s.entries[1]);
            if (types[0] == 0) {
                B.add(B.one(), pc(a));
            } else if (types[0] == 1) {
                B.add(-B.one(), pd(a, b));
            } else {
                const int j = a, i = b;
                for (int l = i; l <= j - 2; ++l) B.add(B.r(i, l - 1), pd(l, j));
                B.add(B.r(i, j - 2), pb(j - 1));
            }
            break;
        }
        case 3: return psi3(s, n);
        default: throw std::invalid_argument("psi: dimension must be 0..3");
    }
    return B.result();
}

PChain psi(const BarChain& x) {
    const int n = x.n();
    return apply_linear<PCell>(x, [n](const BarSimplex& s) { return psi(s, n); });
}

PChain psi3(const BarSimplex& s, int n) {
    const auto types = essential_rule_types(s);
    if (types.size() != 2) throw std::invalid_argument("psi3: expected an essential 3-cell");
    Builder B(n);
    auto r = [&](int a, int b) { return B.r(a, b); };
    auto rr = [&](int a, int b, int c, int d) { return B.g(cat(ramp_word(a, b), ramp_word(c, d))); };
    const auto one = B.one();
    const int a = first_index(s.entries[0]);
    const int b = first_index(s.entries[1]);
    const int c = first_index(s.entries[2]);
    switch (3 * types[0] + types[1]) {
        case 0: B.add(one, c31(a)); break;
        case 1: B.add(one, c32(a, c)); break;
        case 2: {
            const int j = a, i = c;
            B.add(r(i, j - 2), c35(j - 1));
            for (int l = i; l <= j - 2; ++l) B.add(r(i, l - 1), c32(j, l));
            break;
        }
        case 3: B.add(one, c32(b, a)); break;
        case 4: B.add(-one, c33(a, b, c)); break;
        case 5: {
            const int i = a, j = b, k = c;
            if (i < k - 1) {
                for (int l = 0; l <= j - k - 2; ++l) B.add(r(k, k + l - 1), c33(i, k + l, j));
                B.add(r(k, j - 2), c34(j - 1, i));
            } else if (i == k) {
                B.add(-one, c32(k, j));
            } else if (i > k) {
                for (int l = k; l <= i - 2; ++l) B.add(-r(k, l - 1), c33(l, i, j));
                B.add(-r(k, i - 2), c34(i - 1, j));
                for (int l = i + 1; l <= j - 2; ++l) B.add(r(k, l - 1), c33(i - 1, l, j));
                B.add(r(k, j - 2), c34(j - 1, i - 1));
            }
            break;
        }
        case 6: {
            const int j = a, i = b;
            B.add(r(i, j - 2), c36(j - 1));
            B.add(-r(i, j - 1), c35(j - 1));
            break;
        }
        case 7: {
            const int i = a, k = b, j = c;
            for (int l = 0; l <= i - k - 2; ++l) B.add(r(k, k + l - 1), c33(k + l, i, j));
            B.add(r(k, i - 2), c34(i - 1, j));
            break;
        }
        case 8: {
            const int j = a, i = b, k = c;
            if (k == j - 1) {
                for (int t = 0; t <= j - i - 2; ++t) B.add(-r(i, i + t - 1), c32(j, i + t));
                B.add(B.g(cat(ramp_word(i, j - 2), positive_word({j, j - 1}))) - r(i, j - 2), c35(j - 1));
                B.add(-B.g(cat(ramp_word(i, j - 2), positive_word({j}))), c36(j - 1));
            } else if (k < i) {
                B.add(rr(i, j - 2, k, j - 3), c37(j - 2));
                for (int l = 0; l <= j - k - 3; ++l) B.add(rr(i, j - 2, k, k + l - 1), c34(j - 1, k + l));
                for (int l = 0; l <= j - i - 2; ++l) B.add(-rr(k, j - 2, i - 1, i - 2 + l), c34(j - 1, i - 1 + l));
                for (int l = 0; l <= j - i - 2; ++l)
                    for (int m = 0; m <= i - k - 2; ++m)
                        B.add(rr(i, i - 1 + l, k, k - 1 + m), c33(k + m, i + l, j));
                for (int l = 0; l <= j - i - 2; ++l) B.add(rr(i, i - 1 + l, k, i - 2 + l), c34(i - 1 + l, j));
                for (int l = 1; l <= j - i - 2; ++l)
                    for (int m = i - k - 1; m <= i - k + l - 2; ++m)
                        B.add(rr(i, i - 1 + l, k, k - 1 + m), c33(k + m, i + l, j));
                for (int l = 0; l <= j - i - 3; ++l)
                    for (int m = i - k + l + 1; m <= j - k - 2; ++m)
                        B.add(-rr(i, i - 1 + l, k, k - 1 + m), c33(i + l - 1, k + m, j));
            } else {
                B.add(rr(i, j - 2, k, j - 3), c37(j - 2));
                for (int l = 0; l <= j - k - 3; ++l) B.add(rr(i, j - 2, k, k + l - 1), c34(j - 1, k + l));
                for (int l = 0; l <= j - i - 3; ++l) B.add(-rr(k + 1, j - 2, i, i - 1 + l), c34(j - 1, i + l));
                for (int l = 0; l <= k - i - 1; ++l)
                    for (int m = 1; m <= j - k - 2; ++m)
                        B.add(-rr(i, i - 1 + l, k + 1, k - 1 + m), c33(i + l, k + m, j));
                B.add(r(i, k - 1), c32(k, j));
                for (int l = 0; l <= j - k - 3; ++l) B.add(rr(i, k + l, k, k - 1 + l), c34(k + l, j));
                for (int l = k - i + 2; l <= j - i - 2; ++l)
                    for (int m = 0; m <= l - k + i - 2; ++m)
                        B.add(rr(i, i - 1 + l, k, k - 1 + m), c33(k + m, i + l, j));
                for (int l = k - i; l <= j - i - 4; ++l)
                    for (int m = i + l - k + 2; m <= j - k - 2; ++m)
                        B.add(-rr(i, i + l, k, k - 1 + m), c33(i + l, k + m, j));
            }
            break;
        }
        default: throw std::logic_error("psi3: bad class");
    }
    return B.result();
}

BarChain phi(const PCell& cell, int n) {
    auto S = [n](std::vector<Word> w) { return bar_from_words(w, n); };
    auto s = [](int i) { return Word{{i, false}}; };
    switch (cell.kind) {
        case PKind::Base: return BarChain::of(BarSimplex{}, n);
        case PKind::E: return BarChain::of(S({s(cell.i)}), n);
        case PKind::C: return BarChain::of(S({s(cell.i), s(cell.i)}), n);
        case PKind::B: return BarChain::of(S({s(cell.i + 1), positive_word({cell.i, cell.i + 1})}), n);
        case PKind::D: return BarChain::of(S({s(cell.i), s(cell.j)}), n, -1);
        default: throw std::invalid_argument("phi: defined in dimensions 0..2 only");
    }
}

BarChain phi(const PChain& x) {
    const int n = x.n();
    return apply_linear<BarSimplex>(x, [n](const PCell& c) { return phi(c, n); });
}

ChainMapReport verify_chain_maps(int n, int max_psi_dim) {
    ChainMapReport rep;
    rep.n = n;
    QRewriter q(n, true);
    for (int t = 1; t <= max_psi_dim; ++t)
        for (const BarSimplex& s : enumerate_essential(n, t)) {
            ++rep.checked;
            try {
                const PChain res = boundary_p(psi(s, n)) - psi(q.boundary_q(s));
                if (!res.is_zero()) rep.failures.push_back({"psi " + s.str(), chain_str(res)});
            } catch (const std::exception& e) {
                rep.failures.push_back({"psi " + s.str(), e.what()});
            }
        }
    for (int d = 1; d <= 2; ++d)
        for (const PCell& c : enumerate_p_cells(n, d)) {
            ++rep.checked;
            const BarChain res = q.q(apply_linear<BarSimplex>(phi(c, n), [n](const BarSimplex& s) {
                                     return bar_boundary(s, n);
                                 })) - phi(boundary_p(c, n));
            if (!res.is_zero()) rep.failures.push_back({"phi " + c.name(), chain_str(res)});
            if (d == 2) {
                ++rep.checked;
                const PChain back = psi(phi(c, n)) - PChain::of(c, n);
                if (!back.is_zero()) rep.failures.push_back({"psi phi " + c.name(), chain_str(back)});
            }
        }
    return rep;
}

}  // namespace snres
