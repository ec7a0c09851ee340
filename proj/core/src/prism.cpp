#include <sstream>
#include <stdexcept>

#include "snres/chain_maps.hpp"

namespace snres {

Perm ConsecutiveCycle::perm(int n) const { return Perm::cycle_up(n, i, j); }

std::string ConsecutiveCycle::str() const {
    std::ostringstream os;
    os << '(';
    for (int x = i; x <= j; ++x) os << (x > i ? "," : "") << x;
    os << ')';
    return os.str();
}

namespace {

std::vector<int> edges_of(const PCell& c) {
    switch (c.kind) {
        case PKind::Base: return {};
        case PKind::E:
        case PKind::C: return {c.i};
        case PKind::B: return {c.i, c.i + 1};
        case PKind::D: return {c.i, c.j};
        default: throw std::invalid_argument("prism: cell of dimension 3: " + c.name());
    }
}

bool far(int m, int k) { return m < k - 1 || m > k + 1; }

// Pi(s_m, c) for a cell whose edges commute with s_m.
PChain single_step(int m, const PCell& c, int n) {
    PChain x(n);
    switch (c.kind) {
        case PKind::Base: x = PChain::of(pe(m), n); break;
        case PKind::E:
            if (!far(m, c.i)) break;
            x = m < c.i ? PChain::of(pd(m, c.i), n, -1) : PChain::of(pd(c.i, m), n);
            break;
        case PKind::C:
            if (far(m, c.i)) x = PChain::of(c32(c.i, m), n);
            break;
        case PKind::B:
            if (m < c.i - 1 || m > c.i + 2) x = PChain::of(c34(c.i, m), n);
            break;
        case PKind::D: {
            const int p = c.i, q = c.j;
            if (!far(m, p) || !far(m, q)) break;
            if (m < p)
                x = PChain::of(c33(m, p, q), n);
            else if (m < q)
                x = PChain::of(c33(p, m, q), n, -1);
            else
                x = PChain::of(c33(p, q, m), n);
            break;
        }
        default: break;
    }
    if (x.is_zero()) throw std::invalid_argument("prism: step s" + std::to_string(m) + " undefined on " + c.name());
    return x;
}

struct Walk {
    PChain value;
    PCell end;
};

Walk walk(const ConsecutiveCycle& a, const PCell& c, int n) {
    if (a.i < 1 || a.j > n || a.i >= a.j) throw std::invalid_argument("prism: bad cycle " + a.str());
    if (!is_valid_pcell(c, n)) throw std::invalid_argument("prism: invalid cell " + c.name());
    if (!prism_admissible(a, c)) throw std::invalid_argument("prism: inadmissible pair " + a.str() + ", " + c.name());
    Walk w{PChain(n), c};
    Perm prefix(n);
    int l = a.i;
    auto advance = [&](int len) {
        for (int t = 0; t < len; ++t) prefix = prefix * Perm::transposition(n, l + t);
        l += len;
    };
    while (l < a.j) {
        PCell& cur = w.end;
        const bool room2 = l + 1 < a.j, room3 = l + 2 < a.j;
        if ((cur.kind == PKind::E || cur.kind == PKind::C) && cur.i == l + 1 && room2) {
            w.value += prefix * (cur.kind == PKind::E ? PChain::of(pb(l), n, -1) : PChain::of(c35(l), n));
            cur.i = l;
            advance(2);
        } else if (cur.kind == PKind::B && cur.i == l + 1 && room3) {
            w.value += prefix * PChain::of(c37(l), n);
            cur.i = l;
            advance(3);
        } else if (cur.kind == PKind::D && cur.i == l + 1 && room2) {
            w.value += prefix * PChain::of(c34(l, cur.j), n);
            cur.i = l;
            advance(2);
        } else if (cur.kind == PKind::D && cur.j == l + 1 && room2) {
            w.value += prefix * PChain::of(c34(l, cur.i), n, -1);
            cur.j = l;
            advance(2);
        } else {
            w.value += prefix * single_step(l, cur, n);
            advance(1);
        }
    }
    return w;
}

}  // namespace

bool prism_admissible(const ConsecutiveCycle& a, const PCell& c) {
    for (int e : edges_of(c))
        if (e == a.i - 1 || e == a.i || e == a.j) return false;
    return true;
}

PCell prism_reindex(const ConsecutiveCycle& a, const PCell& c) {
    PCell out = c;
    for (int* idx : {&out.i, &out.j, &out.k})
        if (*idx > a.i && *idx < a.j) --*idx;
    if (c.kind == PKind::Base) out = c;
    return out;
}

PChain prism(const ConsecutiveCycle& a, const PCell& c, int n) { return walk(a, c, n).value; }

PChain prism(const ConsecutiveCycle& a, const PChain& x) {
    const int n = x.n();
    return apply_linear<PCell>(x, [&](const PCell& c) { return prism(a, c, n); });
}

PrismReport verify_prism(int n) {
    PrismReport rep;
    rep.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const ConsecutiveCycle a{i, j};
            const Perm alpha = a.perm(n);
            for (int d = 0; d <= 2; ++d)
                for (const PCell& c : enumerate_p_cells(n, d)) {
                    if (!prism_admissible(a, c)) continue;
                    ++rep.checked;
                    const std::string what = "prism " + a.str() + " " + c.name();
                    try {
                        const Walk w = walk(a, c, n);
                        PChain expected = alpha * PChain::of(w.end, n) - PChain::of(c, n);
                        if (d > 0) expected -= prism(a, boundary_p(c, n));
                        const PChain residual = boundary_p(w.value) - expected;
                        if (w.end != prism_reindex(a, c))
                            rep.failures.push_back({what, "relabelled cell " + w.end.name()});
                        else if (!residual.is_zero())
                            rep.failures.push_back({what, std::to_string(residual.terms().size()) + " terms"});
                    } catch (const std::exception& e) {
                        rep.failures.push_back({what, e.what()});
                    }
                }
        }
    return rep;
}

}  // namespace snres
