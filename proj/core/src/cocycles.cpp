#include "snres/cocycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "snres/chain_maps.hpp"
#include "snres/complex_p.hpp"

namespace snres {

const std::vector<std::string>& cocycle_families() {
    static const std::vector<std::string> f{"kappa", "kappa_hat", "alpha",     "alpha_hat",
                                            "beta",  "beta_hat",  "beta_tilde"};
    return f;
}

const std::vector<std::string>& product_cocycle_families() {
    static const std::vector<std::string> f{"pi1_kappa0", "pi2_kappa0", "pi1_alpha0",   "pi2_alpha0",
                                            "pi1_beta0",  "pi2_beta0",  "pi3_beta_hat0"};
    return f;
}

bool in_two_torsion(const Int& r, RingSpec ring) { return ring.normalize(2 * r) == 0; }

namespace {

bool needs_two_torsion(const std::string& family) { return family.find("alpha") == std::string::npos; }

int family_dim(const std::string& family) { return family.find("kappa") != std::string::npos ? 1 : 2; }

int popcount(std::uint32_t x) { return __builtin_popcount(x); }

std::uint32_t bit(int x) { return 1u << (x - 1); }

CoefficientModule module_for(int n, int k, RingSpec ring) {
    return k == 0 ? CoefficientModule::trivial(n, ring) : CoefficientModule::permutation(n, k, ring);
}

// Which basis subsets receive r on the given cell.
bool selects(const std::string& family, const PCell& c, std::uint32_t s, bool trivial) {
    const auto in = [&](int x) { return (s & bit(x)) != 0; };
    if (family == "kappa") return c.kind == PKind::E;
    if (family == "alpha") return c.kind == PKind::C;
    if (family == "beta") return c.kind == PKind::D;
    if (trivial) return false;
    if (family == "kappa_hat") return c.kind == PKind::E && in(c.i) && in(c.i + 1);
    if (family == "alpha_hat") return c.kind == PKind::C && in(c.i) && in(c.i + 1);
    if (c.kind != PKind::D) return false;
    const std::uint32_t q = bit(c.i) | bit(c.i + 1) | bit(c.j) | bit(c.j + 1);
    if (family == "beta_hat") return popcount(s & q) == 2;
    if (family == "beta_tilde") return (s & q) == q;
    throw std::invalid_argument("unknown cocycle family " + family);
}

}  // namespace

std::string cocycle_parameter_error(const std::string& family, const Int& r, int n, int k, RingSpec ring) {
    if (std::find(cocycle_families().begin(), cocycle_families().end(), family) == cocycle_families().end())
        return "unknown cocycle family " + family;
    if (n < 2) return "need n >= 2";
    if (k < 0 || k > n) return "need 0 <= k <= n";
    if (needs_two_torsion(family) && !in_two_torsion(r, ring)) return "r must satisfy 2r = 0 in " + ring.name();
    const bool hat = family.find("_hat") != std::string::npos;
    if (hat && k < 2) return family + " needs k >= 2";
    if (family == "beta_tilde" && k < 4) return "beta_tilde needs k >= 4";
    return "";
}

Cochain build_cocycle(const std::string& family, const Int& r, int n, int k, RingSpec ring) {
    const std::string err = cocycle_parameter_error(family, r, n, k, ring);
    if (!err.empty()) throw std::invalid_argument(err);
    Cochain f;
    f.dim = family_dim(family);
    f.module = module_for(n, k, ring);
    f.label = family + (k == 0 ? "0" : "^" + std::to_string(k)) + "_" + to_string(ring.normalize(r));
    const std::vector<PCell> cells = enumerate_p_cells(n, f.dim);
    const std::size_t rk = f.module.rank();
    f.values.assign(cells.size() * rk, 0);
    const bool trivial = k == 0;
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (std::size_t m = 0; m < rk; ++m) {
            const std::uint32_t s = trivial ? 0 : f.module.subsets[m];
            if (selects(family, cells[c], s, trivial)) f.values[c * rk + m] = ring.normalize(r);
        }
    return f;
}

Cochain build_product_cocycle(const std::string& family, const Int& r, int a, int b, RingSpec ring) {
    const auto& fams = product_cocycle_families();
    if (std::find(fams.begin(), fams.end(), family) == fams.end())
        throw std::invalid_argument("unknown product cocycle family " + family);
    const bool alpha = family.find("alpha") != std::string::npos;
    if (!alpha && !in_two_torsion(r, ring)) throw std::invalid_argument("r must satisfy 2r = 0 in " + ring.name());
    const ProductResolution F(a, b);
    Cochain f;
    f.dim = family.find("kappa") != std::string::npos ? 1 : 2;
    f.module = CoefficientModule::trivial(a + b, ring);
    f.label = family + "_" + to_string(ring.normalize(r));
    const std::vector<TensorCell> cells = F.cells(f.dim);
    f.values.assign(cells.size(), 0);
    const PKind kind = f.dim == 1 ? PKind::E : alpha ? PKind::C : PKind::D;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const TensorCell& t = cells[c];
        bool hit = false;
        if (family.rfind("pi1", 0) == 0) hit = t.left.kind == kind && t.right.kind == PKind::Base;
        if (family.rfind("pi2", 0) == 0) hit = t.right.kind == kind && t.left.kind == PKind::Base;
        if (family == "pi3_beta_hat0") hit = t.left.kind == PKind::E && t.right.kind == PKind::E;
        if (hit) f.values[c] = ring.normalize(r);
    }
    return f;
}

Cochain build_klein_cocycle(const Int& r, const FreeComplex& klein, RingSpec ring) {
    if (!in_two_torsion(r, ring)) throw std::invalid_argument("r must satisfy 2r = 0 in " + ring.name());
    Cochain f;
    f.dim = 2;
    f.module = CoefficientModule::trivial(klein.n, ring);
    f.label = "beta_hat0_" + to_string(ring.normalize(r));
    f.values.assign(klein.rank(2), 0);
    f.values[klein.index_of(2, "f1,1")] = ring.normalize(r);
    return f;
}

std::vector<Int> coboundary(const FreeComplex& x, const Cochain& f) {
    if (f.dim + 1 > x.top()) throw std::invalid_argument("coboundary: complex too short");
    const std::size_t rk = f.module.rank();
    if (f.values.size() != x.rank(f.dim) * rk) throw std::invalid_argument("coboundary: cochain does not fit complex");
    const auto& bd = x.boundary[static_cast<std::size_t>(f.dim + 1)];
    std::vector<Int> out(bd.size() * rk, 0);
    for (std::size_t y = 0; y < bd.size(); ++y)
        for (const auto& [j, a] : bd[y])
            for (const auto& [g, coef] : a.terms())
                for (std::size_t m = 0; m < rk; ++m) {
                    const Int& v = f.values[j * rk + m];
                    if (v != 0) out[y * rk + f.module.act(g, m)] += coef * v;
                }
    for (auto& v : out) v = f.module.ring.normalize(v);
    return out;
}

bool verify_cocycle(const FreeComplex& x, const Cochain& f) {
    const auto d = coboundary(x, f);
    return std::all_of(d.begin(), d.end(), [](const Int& v) { return v == 0; });
}

Int pairing(const Cochain& f, const std::vector<Int>& chain) {
    if (chain.size() != f.values.size()) throw std::invalid_argument("pairing: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < chain.size(); ++i) s += f.values[i] * chain[i];
    return f.module.ring.normalize(s);
}

std::vector<Int> basis_chain(const FreeComplex& x, const CoefficientModule& m, int dim,
                             const std::vector<std::pair<std::string, Int>>& cells, std::size_t module_index) {
    std::vector<Int> v(x.rank(dim) * m.rank(), 0);
    for (const auto& [name, c] : cells) v[x.index_of(dim, name) * m.rank() + module_index] += c;
    return v;
}

IsomorphismCheck check_generates_homology(const std::string& what, const FreeComplex& x, const CoefficientModule& m,
                                          int k, const std::vector<std::vector<Int>>& cycles) {
    IsomorphismCheck c;
    c.what = what;
    const IntMatrix in = coinvariant_matrix(x, m, k + 1), out = coinvariant_matrix(x, m, k);
    const std::size_t dim = x.rank(k) * m.rank();
    c.group = subquotient(in, out, dim, m.ring.modulus);
    c.generated = generated_order(in, out, dim, cycles, m.ring.modulus);
    return c;
}

IsomorphismCheck check_generates_cohomology(const std::string& what, const FreeComplex& x, const CoefficientModule& m,
                                            int k, const std::vector<Cochain>& cocycles) {
    IsomorphismCheck c;
    c.what = what;
    const std::size_t dim = x.rank(k) * m.rank();
    const IntMatrix in = k == 0 ? IntMatrix(dim, 0) : hom_matrix(x, m, k - 1), out = hom_matrix(x, m, k);
    std::vector<std::vector<Int>> vs;
    for (const auto& f : cocycles) vs.push_back(f.values);
    c.group = subquotient(in, out, dim, m.ring.modulus);
    c.generated = generated_order(in, out, dim, vs, m.ring.modulus);
    return c;
}

bool PairingMatrix::nondegenerate() const {
    const std::size_t g = rows.size();
    if (g != cols.size()) return false;
    if (g == 0) return true;
    Int unit = 0;
    for (const auto& row : values)
        for (const Int& v : row)
            if (v != 0 && (unit == 0 || v < unit)) unit = v;
    if (unit == 0) return false;
    std::vector<std::vector<int>> a(g, std::vector<int>(g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            if (values[i][j] % unit != 0) return false;
            a[i][j] = static_cast<int>((values[i][j] / unit) % 2);
        }
    for (std::size_t c = 0; c < g; ++c) {
        std::size_t p = c;
        while (p < g && a[p][c] == 0) ++p;
        if (p == g) return false;
        std::swap(a[p], a[c]);
        for (std::size_t r = 0; r < g; ++r)
            if (r != c && a[r][c])
                for (std::size_t j = 0; j < g; ++j) a[r][j] ^= a[c][j];
    }
    return true;
}

PairingMatrix pairing_matrix(const std::vector<Cochain>& cocycles, const std::vector<std::string>& cycle_names,
                             const std::vector<std::vector<Int>>& cycles) {
    PairingMatrix p;
    p.cols = cycle_names;
    for (const auto& f : cocycles) {
        p.rows.push_back(f.label);
        std::vector<Int> row;
        for (const auto& z : cycles) row.push_back(pairing(f, z));
        p.values.push_back(std::move(row));
    }
    return p;
}

bool ShapiroReport::ok() const {
    return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const ShapiroEntry& e) { return e.ok(); });
}

ShapiroReport shapiro_crosscheck(int n, int k, RingSpec ring) {
    if (k < 1 || 2 * k > n) throw std::invalid_argument("shapiro_crosscheck: need 1 <= k <= n/2");
    ShapiroReport rep;
    rep.n = n;
    rep.k = k;
    rep.ring = ring;
    const FreeComplex P = p_complex(n);
    const FreeComplex F = product_complex(n - k, k);
    const CoefficientModule Mk = CoefficientModule::permutation(n, k, ring);
    const CoefficientModule R = CoefficientModule::trivial(n, ring);
    for (int co = 0; co <= 1; ++co)
        for (int i = 1; i <= 2; ++i) {
            ShapiroEntry e;
            e.degree = i;
            e.cohomology = co == 1;
            e.twisted = co ? cohomology(P, Mk, i) : homology(P, Mk, i);
            e.product = co ? cohomology(F, R, i) : homology(F, R, i);
            rep.entries.push_back(e);
        }
    return rep;
}

namespace {

struct Generators {
    std::vector<std::string> names;
    std::vector<std::vector<Int>> cycles;
    std::vector<Cochain> cocycles;
};

// Classes expected to generate H_i and H^i of S_n with M^k (trivial for k = 0),
// built from the stabilizer S_{n-k} x S_k of v_T, T = {n-k+1..n}.
Generators expected_generators(const FreeComplex& P, const CoefficientModule& M, int n, int k, int degree) {
    const RingSpec ring = M.ring;
    const int a = n - k, b = k;
    const Int r2 = ring.modulus == 0 ? Int(0) : Int(ring.modulus % 2 == 0 ? ring.modulus / 2 : 0);
    std::uint32_t t = 0;
    for (int x = a + 1; x <= n; ++x) t |= bit(x);
    const std::size_t vt = k == 0 ? 0 : M.subset_index(t);
    Generators g;
    auto cyc = [&](const std::string& name, const std::string& cell, const Int& c) {
        if (c == 0) return;
        g.names.push_back(name);
        g.cycles.push_back(basis_chain(P, M, degree, {{cell, c}}, vt));
    };
    auto coc = [&](const std::string& fam, const Int& r) {
        if (r != 0) g.cocycles.push_back(build_cocycle(fam, r, n, k, ring));
    };
    const std::string s1 = std::to_string(a + 1), s3 = std::to_string(a + 3);
    if (degree == 1) {
        if (a >= 2) cyc("e1", "e1", 1);
        if (b >= 2) cyc("e" + s1, "e" + s1, 1);
        if (a >= 2 || b >= 2) coc("kappa", r2);
        if (a >= 2 && b >= 2) coc("kappa_hat", r2);
    } else {
        if (a >= 2) cyc(to_string(r2) + " c1", "c1", r2);
        if (b >= 2) cyc(to_string(r2) + " c" + s1, "c" + s1, r2);
        if (a >= 4) cyc("d1,3", "d1,3", 1);
        if (a >= 2 && b >= 2) cyc("-d1," + s1, "d1," + s1, -1);
        if (b >= 4) cyc("d" + s1 + "," + s3, "d" + s1 + "," + s3, 1);
        if (a >= 2 || b >= 2) coc("alpha", 1);
        if (a >= 2 && b >= 2) coc("alpha_hat", 1);
        if (a >= 4) coc("beta", r2);
        if (a >= 2 && b >= 2) coc("beta_hat", r2);
        if (b >= 4) coc("beta_tilde", r2);
    }
    return g;
}

}  // namespace

CocycleSuiteReport run_cocycle_suite(int nmax, int kmax, const std::vector<long>& moduli) {
    CocycleSuiteReport rep;
    auto fail = [&](const std::string& what, const std::string& detail) { rep.failures.push_back({what, detail}); };
    std::vector<std::pair<int, int>> cases;
    for (int n = 2; n <= nmax; ++n)
        for (int k = 0; k <= std::min(kmax, n / 2); ++k) cases.push_back({n, k});
    for (const auto& extra : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}})
        if (extra.first <= nmax && extra.second <= kmax) cases.push_back(extra);
    for (long mod : moduli) {
        const RingSpec ring{mod};
        for (const auto& [n, k] : cases) {
            const FreeComplex P = p_complex(n);
            const CoefficientModule M =
                k == 0 ? CoefficientModule::trivial(n, ring) : CoefficientModule::permutation(n, k, ring);
            const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " R=" + ring.name();
            for (const std::string& fam : cocycle_families())
                for (long r = 0; r < mod; ++r) {
                    if (!cocycle_parameter_error(fam, r, n, k, ring).empty()) {
                        ++rep.illegal_rejected;
                        continue;
                    }
                    ++rep.cochains;
                    const Cochain f = build_cocycle(fam, r, n, k, ring);
                    if (!verify_cocycle(P, f)) fail(f.label + " " + where, "not a cocycle");
                }
            for (int degree = 1; degree <= 2; ++degree) {
                const Generators g = expected_generators(P, M, n, k, degree);
                const IsomorphismCheck ch = check_generates_cohomology(where, P, M, degree, g.cocycles);
                const IsomorphismCheck hh = check_generates_homology(where, P, M, degree, g.cycles);
                rep.isomorphisms += 2;
                if (!ch.ok())
                    fail("H^" + std::to_string(degree) + " " + where,
                         "group " + ch.group.str() + ", generated order " + to_string(ch.generated));
                if (!hh.ok())
                    fail("H_" + std::to_string(degree) + " " + where,
                         "group " + hh.group.str() + ", generated order " + to_string(hh.generated));
                if (mod % 2 != 0) continue;
                ++rep.pairings;
                const PairingMatrix pm = pairing_matrix(g.cocycles, g.names, g.cycles);
                if (!pm.nondegenerate()) fail("pairing degree " + std::to_string(degree) + " " + where, "degenerate");
            }
        }
        for (int a = 2; a <= nmax; ++a)
            for (int b = 2; a + b <= nmax && b <= a; ++b) {
                const FreeComplex F = product_complex(a, b);
                const std::string where = "S" + std::to_string(a) + "xS" + std::to_string(b) + " R=" + ring.name();
                std::vector<Cochain> deg2;
                for (const std::string& fam : product_cocycle_families())
                    for (long r = 0; r < mod; ++r) {
                        const bool alpha = fam.find("alpha") != std::string::npos;
                        if (!alpha && !in_two_torsion(r, ring)) {
                            ++rep.illegal_rejected;
                            continue;
                        }
                        ++rep.cochains;
                        const Cochain f = build_product_cocycle(fam, r, a, b, ring);
                        if (!verify_cocycle(F, f)) fail(f.label + " " + where, "not a cocycle");
                    }
                const Int r2 = mod % 2 == 0 ? Int(mod / 2) : Int(0);
                auto add = [&](const std::string& fam, const Int& r) {
                    if (r != 0) deg2.push_back(build_product_cocycle(fam, r, a, b, ring));
                };
                add("pi1_alpha0", 1);
                add("pi2_alpha0", 1);
                if (a >= 4) add("pi1_beta0", r2);
                if (b >= 4) add("pi2_beta0", r2);
                add("pi3_beta_hat0", r2);
                const IsomorphismCheck c =
                    check_generates_cohomology(where, F, CoefficientModule::trivial(a + b, ring), 2, deg2);
                ++rep.isomorphisms;
                if (!c.ok()) fail("H^2 " + where, "group " + c.group.str() + ", generated order " + to_string(c.generated));
            }
    }
    return rep;
}

}  // namespace snres
