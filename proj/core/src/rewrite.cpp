#include "snres/rewrite.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace snres {

Word NormalForm::word() const {
    Word w;
    for (const Ramp& r : ramps)
        for (int l = r.j; l <= r.k; ++l) w.push_back({l, false});
    return w;
}

Word parse_word(const std::string& text) {
    static const std::regex token(R"(s(\d+)('?))");
    Word w;
    std::string rest = text;
    std::smatch m;
    std::string::const_iterator it = text.begin();
    while (std::regex_search(it, text.end(), m, token)) {
        for (auto c = it; c != it + m.position(0); ++c)
            if (!std::isspace(static_cast<unsigned char>(*c)) && *c != '*' && *c != '.')
                throw std::invalid_argument("cannot parse word: " + text);
        w.push_back({std::stoi(m[1].str()), m[2].length() > 0});
        it += m.position(0) + m.length(0);
    }
    for (; it != text.end(); ++it)
        if (!std::isspace(static_cast<unsigned char>(*it)) && *it != '1')
            throw std::invalid_argument("cannot parse word: " + text);
    return w;
}

std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i)
        os << (i ? " " : "") << 's' << w[i].index << (w[i].inverse ? "'" : "");
    return os.str();
}

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::R0: return "R0";
        case Rule::R1: return "R1";
        case Rule::R2: return "R2";
        case Rule::R3: return "R3";
    }
    return "?";
}

Word positive_word(const std::vector<int>& indices) {
    Word w;
    for (int i : indices) w.push_back({i, false});
    return w;
}

Word ramp_word(int j, int k) {
    Word w;
    for (int l = j; l <= k; ++l) w.push_back({l, false});
    return w;
}

Perm word_to_perm(const Word& w, int n) {
    Perm p(n);
    for (const Letter& l : w) {
        if (l.index < 1 || l.index >= n) throw std::invalid_argument("word index out of range for n");
        p = p * Perm::transposition(n, l.index);
    }
    return p;
}

namespace {

// Length of an R3 left-hand side s_j s_i s_{i+1} ... s_j starting at pos, or 0.
std::size_t r3_length(const Word& w, std::size_t pos) {
    const int j = w[pos].index;
    if (pos + 1 >= w.size() || w[pos + 1].inverse) return 0;
    int cur = w[pos + 1].index;
    if (cur >= j) return 0;
    std::size_t q = pos + 1;
    while (cur < j) {
        if (q + 1 >= w.size() || w[q + 1].inverse || w[q + 1].index != cur + 1) return 0;
        ++q;
        ++cur;
    }
    return q - pos + 1;
}

}  // namespace

std::vector<Redex> find_redexes(const Word& w) {
    std::vector<Redex> out;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p].inverse) {
            out.push_back({p, Rule::R0, 1});
            continue;
        }
        if (p + 1 < w.size() && !w[p + 1].inverse) {
            const int i = w[p].index, j = w[p + 1].index;
            if (i == j) out.push_back({p, Rule::R1, 2});
            if (i < j - 1) out.push_back({p, Rule::R2, 2});
        }
        if (std::size_t len = r3_length(w, p)) out.push_back({p, Rule::R3, len});
    }
    return out;
}

Word apply_redex(const Word& w, const Redex& r) {
    Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r.pos));
    switch (r.rule) {
        case Rule::R0:
            out.push_back({w[r.pos].index, false});
            break;
        case Rule::R1:
            break;
        case Rule::R2:
            out.push_back(w[r.pos + 1]);
            out.push_back(w[r.pos]);
            break;
        case Rule::R3: {
            const int j = w[r.pos].index;
            for (std::size_t q = r.pos + 1; q < r.pos + r.length; ++q) out.push_back(w[q]);
            out.push_back({j - 1, false});
            break;
        }
    }
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(r.pos + r.length), w.end());
    return out;
}

std::optional<std::pair<Word, Rule>> reduce_step(const Word& w, Strategy s, std::mt19937_64* rng) {
    const std::vector<Redex> rs = find_redexes(w);
    if (rs.empty()) return std::nullopt;
    // find_redexes lists redexes by position, then by rule priority
    std::size_t pick = 0;
    if (s == Strategy::Rightmost) {
        pick = rs.size() - 1;
        while (pick > 0 && rs[pick - 1].pos == rs[pick].pos) --pick;
    } else if (s == Strategy::Random) {
        if (!rng) throw std::invalid_argument("reduce_step: random strategy needs a generator");
        pick = std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(*rng);
    }
    return std::make_pair(apply_redex(w, rs[pick]), rs[pick].rule);
}

Word reduce(const Word& w, Strategy s, std::mt19937_64* rng) {
    Word cur = w;
    std::size_t guard = 0;
    const std::size_t limit = 100000 + 100 * w.size() * w.size() * w.size();
    while (auto next = reduce_step(cur, s, rng)) {
        cur = std::move(next->first);
        if (++guard > limit) throw std::logic_error("reduce: step limit exceeded");
    }
    return cur;
}

std::optional<NormalForm> parse_ramps(const Word& w) {
    NormalForm nf;
    for (const Letter& l : w) {
        if (l.inverse) return std::nullopt;
        if (!nf.ramps.empty() && l.index == nf.ramps.back().k + 1)
            nf.ramps.back().k = l.index;
        else
            nf.ramps.push_back({l.index, l.index});
    }
    for (std::size_t r = 1; r < nf.ramps.size(); ++r)
        if (nf.ramps[r].k >= nf.ramps[r - 1].k) return std::nullopt;
    return nf;
}

NormalForm normal_form_word(const Word& w) {
    auto nf = parse_ramps(reduce(w));
    if (!nf) throw std::logic_error("normal_form_word: irreducible word is not a ramp product");
    return *nf;
}

NormalForm normal_form_perm(const Perm& p) {
    NormalForm nf;
    Perm cur = p;
    const int n = p.n();
    for (int m = n; m >= 2; --m) {
        const int img = cur(m);
        if (img == m) continue;
        nf.ramps.push_back({img, m - 1});
        cur = Perm::cycle_up(n, img, m).inverse() * cur;
    }
    return nf;
}

Word nf_word(const Perm& p) { return normal_form_perm(p).word(); }

bool is_irreducible(const Word& w) { return find_redexes(w).empty(); }

bool is_irreducible_by_ramps(const Word& w) { return parse_ramps(w).has_value(); }

std::vector<int> complexity_vector(const Word& w, int n) {
    std::vector<int> c(static_cast<std::size_t>(n) + 1, 0);
    for (const Letter& l : w) {
        if (l.inverse) ++c[0];
        ++c[static_cast<std::size_t>(n - l.index)];
    }
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a].index < w[b].index) ++c[static_cast<std::size_t>(n)];
    return c;
}

std::vector<NormalForm> enumerate_normal_forms(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("enumerate_normal_forms: n out of range");
    // each peak k in 1..n-1 is either absent or carries a ramp start j in 1..k
    std::vector<NormalForm> out{NormalForm{}};
    for (int k = 1; k < n; ++k) {
        std::vector<NormalForm> next;
        for (const NormalForm& nf : out) {
            next.push_back(nf);
            for (int j = 1; j <= k; ++j) {
                NormalForm ext;
                ext.ramps.push_back({j, k});
                ext.ramps.insert(ext.ramps.end(), nf.ramps.begin(), nf.ramps.end());
                next.push_back(std::move(ext));
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace snres
