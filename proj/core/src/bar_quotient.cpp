#include "snres/bar_quotient.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace snres {

namespace {

const Word& word_of(const Perm& p) {
    thread_local std::unordered_map<Perm, Word> cache;
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, nf_word(p)).first;
    return it->second;
}

bool irreducible(const Word& w) { return is_irreducible_by_ramps(w); }

Word concat(const Word& a, const Word& b, std::size_t b_len) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.begin() + static_cast<std::ptrdiff_t>(b_len));
    return w;
}

// Pair (a, b) is a rule left-hand side: ab reducible, every proper prefix irreducible.
bool minimal_reducible(const Word& a, const Word& b) {
    return !irreducible(concat(a, b, b.size())) && irreducible(concat(a, b, b.size() - 1));
}

}  // namespace

std::size_t BarSimplexHash::operator()(const BarSimplex& s) const noexcept {
    std::size_t h = 0x12345;
    for (const Perm& p : s.entries) h = h * 0x100000001B3ULL ^ std::hash<Perm>{}(p);
    return h;
}

std::string BarSimplex::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "|" : "") << format_word(word_of(entries[i]));
    os << ']';
    return os.str();
}

BarSimplex bar_from_words(const std::vector<Word>& entries, int n) {
    BarSimplex s;
    for (const Word& w : entries) {
        Perm p = word_to_perm(w, n);
        if (p.is_identity()) throw std::invalid_argument("bar simplex entry is the identity");
        s.entries.push_back(p);
    }
    return s;
}

BarSimplex parse_bar_simplex(const std::string& text, int n) {
    std::string body = text;
    std::erase_if(body, [](char c) { return c == '[' || c == ']'; });
    std::vector<Word> words;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, '|')) words.push_back(parse_word(part));
    if (body.find_first_not_of(" \t") == std::string::npos) words.clear();
    return bar_from_words(words, n);
}

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::Essential: return "essential";
        case Classification::Collapsible: return "collapsible";
        case Classification::Redundant: return "redundant";
    }
    return "?";
}

Classification classify_simplex(const BarSimplex& s) {
    if (s.entries.empty()) return Classification::Essential;
    if (word_of(s.entries[0]).size() != 1) return Classification::Redundant;
    for (std::size_t i = 0; i + 1 < s.entries.size(); ++i) {
        const Word& a = word_of(s.entries[i]);
        const Word& b = word_of(s.entries[i + 1]);
        if (minimal_reducible(a, b)) continue;
        return irreducible(concat(a, b, b.size())) ? Classification::Collapsible : Classification::Redundant;
    }
    return Classification::Essential;
}

Collapse collapse_of(const BarSimplex& s) {
    if (classify_simplex(s) != Classification::Redundant)
        throw std::invalid_argument("collapse_of: simplex is not redundant: " + s.str());
    const int n = s.entries[0].n();
    const Word& w1 = word_of(s.entries[0]);
    Collapse c;
    if (w1.size() != 1) {
        c.cell.entries.push_back(Perm::transposition(n, w1[0].index));
        c.cell.entries.push_back(word_to_perm(Word(w1.begin() + 1, w1.end()), n));
        c.cell.entries.insert(c.cell.entries.end(), s.entries.begin() + 1, s.entries.end());
        c.face = 1;
        return c;
    }
    for (std::size_t i = 0; i + 1 < s.entries.size(); ++i) {
        const Word& a = word_of(s.entries[i]);
        const Word& b = word_of(s.entries[i + 1]);
        if (minimal_reducible(a, b)) continue;
        std::size_t m = 1;
        while (irreducible(concat(a, b, m))) ++m;
        c.cell.entries.assign(s.entries.begin(), s.entries.begin() + static_cast<std::ptrdiff_t>(i + 1));
        c.cell.entries.push_back(word_to_perm(Word(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(m)), n));
        c.cell.entries.push_back(word_to_perm(Word(b.begin() + static_cast<std::ptrdiff_t>(m), b.end()), n));
        c.cell.entries.insert(c.cell.entries.end(), s.entries.begin() + static_cast<std::ptrdiff_t>(i + 2),
                              s.entries.end());
        c.face = static_cast<int>(i) + 2;
        return c;
    }
    throw std::logic_error("collapse_of: no collapse found");
}

namespace {

// d_k of a simplex; returns false when the face is degenerate. For k = 0 the
// coefficient g1 is returned separately.
bool face(const BarSimplex& s, int k, BarSimplex& out, Perm& coeff) {
    const int t = s.dim();
    const int n = s.entries[0].n();
    coeff = Perm(n);
    out.entries.clear();
    if (k == 0) {
        coeff = s.entries[0];
        out.entries.assign(s.entries.begin() + 1, s.entries.end());
        return true;
    }
    if (k == t) {
        out.entries.assign(s.entries.begin(), s.entries.end() - 1);
        return true;
    }
    const Perm prod = s.entries[k - 1] * s.entries[k];
    if (prod.is_identity()) return false;
    out.entries.assign(s.entries.begin(), s.entries.begin() + (k - 1));
    out.entries.push_back(prod);
    out.entries.insert(out.entries.end(), s.entries.begin() + (k + 1), s.entries.end());
    return true;
}

}  // namespace

BarChain bar_boundary(const BarSimplex& s, int n) {
    BarChain out(n);
    BarSimplex f;
    Perm g;
    for (int k = 0; k <= s.dim(); ++k)
        if (face(s, k, f, g)) out.add(f, GroupRingElem::of(g, (k % 2 == 0) ? 1 : -1));
    return out;
}

const BarChain& QRewriter::q(const BarSimplex& s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    if (++depth_ > 100000) throw std::logic_error("q_rewrite: recursion limit exceeded");
    BarChain v = compute(s);
    --depth_;
    return memo_.emplace(s, std::move(v)).first->second;
}

BarChain QRewriter::q(const BarChain& x) {
    BarChain out(n_);
    for (const auto& [s, a] : x.terms()) out += q(s).left_mul(a);
    return out;
}

BarChain QRewriter::compute(const BarSimplex& s) {
    switch (classify_simplex(s)) {
        case Classification::Essential: return BarChain::of(s, n_);
        case Classification::Collapsible: return BarChain(n_);
        case Classification::Redundant: break;
    }
    const Word& w1 = word_of(s.entries[0]);
    if (fast_ && w1.size() > 1) {
        // q([s w'|g2|...]) = s q([w'|g2|...]) + q([s|w' g2|...])
        const Perm gen = Perm::transposition(n_, w1[0].index);
        const Perm rest = word_to_perm(Word(w1.begin() + 1, w1.end()), n_);
        BarSimplex a;
        a.entries.push_back(rest);
        a.entries.insert(a.entries.end(), s.entries.begin() + 1, s.entries.end());
        BarChain out = q(a).left_mul(gen);
        if (s.dim() == 1) {
            out += q(BarSimplex{{gen}});
        } else {
            const Perm merged = rest * s.entries[1];
            if (!merged.is_identity()) {
                BarSimplex b;
                b.entries.push_back(gen);
                b.entries.push_back(merged);
                b.entries.insert(b.entries.end(), s.entries.begin() + 2, s.entries.end());
                out += q(b);
            }
        }
        return out;
    }
    const Collapse c = collapse_of(s);
    BarChain out(n_);
    BarSimplex f;
    Perm g;
    // tau = -(-1)^i sum_{k != i} (-1)^k d_k c(tau)
    for (int k = 0; k <= c.cell.dim(); ++k) {
        if (k == c.face || !face(c.cell, k, f, g)) continue;
        const int sign = ((c.face + k) % 2 == 0) ? -1 : 1;
        BarChain part = q(f);
        if (k == 0) part = part.left_mul(g);
        if (sign < 0) part *= -1;
        out += part;
    }
    return out;
}

BarChain QRewriter::boundary_q(const BarSimplex& s) { return q(bar_boundary(s, n_)); }

std::vector<BarSimplex> enumerate_essential(int n, int t) {
    if (t < 0) throw std::invalid_argument("enumerate_essential: negative dimension");
    if (t == 0) return {BarSimplex{}};
    std::vector<Word> lhs;
    for (int i = 1; i < n; ++i) lhs.push_back(positive_word({i, i}));
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) lhs.push_back(positive_word({i, j}));
    for (int j = 1; j < n; ++j)
        for (int i = 1; i < j; ++i) {
            Word w{{j, false}};
            for (int l = i; l <= j; ++l) w.push_back({l, false});
            lhs.push_back(w);
        }
    std::vector<BarSimplex> cur;
    for (int i = 1; i < n; ++i) cur.push_back(BarSimplex{{Perm::transposition(n, i)}});
    for (int d = 2; d <= t; ++d) {
        std::vector<BarSimplex> next;
        for (const BarSimplex& s : cur) {
            const Word& w = word_of(s.entries.back());
            std::set<Word> found;
            for (const Word& L : lhs)
                for (std::size_t m = 1; m < L.size(); ++m) {
                    if (m > w.size()) break;
                    if (!std::equal(L.begin(), L.begin() + static_cast<std::ptrdiff_t>(m),
                                    w.end() - static_cast<std::ptrdiff_t>(m)))
                        continue;
                    Word g(L.begin() + static_cast<std::ptrdiff_t>(m), L.end());
                    if (!irreducible(g) || !minimal_reducible(w, g)) continue;
                    found.insert(g);
                }
            for (const Word& g : found) {
                BarSimplex e = s;
                e.entries.push_back(word_to_perm(g, n));
                next.push_back(std::move(e));
            }
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

std::vector<int> essential_rule_types(const BarSimplex& s) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < s.entries.size(); ++i) {
        const Word ab = concat(word_of(s.entries[i]), word_of(s.entries[i + 1]),
                               word_of(s.entries[i + 1]).size());
        int type = -1;
        for (const Redex& r : find_redexes(ab))
            if (r.pos + r.length == ab.size()) type = static_cast<int>(r.rule) - 1;
        if (type < 0) throw std::invalid_argument("essential_rule_types: not essential");
        out.push_back(type);
    }
    return out;
}

int essential_class(const BarSimplex& s) {
    const auto t = essential_rule_types(s);
    if (t.size() != 2) throw std::invalid_argument("essential_class: not a 3-cell");
    return 3 * t[0] + t[1];
}

}  // namespace snres
