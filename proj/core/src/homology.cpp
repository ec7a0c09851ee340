#include "snres/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "snres/bar_quotient.hpp"
#include "snres/chain_maps.hpp"
#include "snres/complex_p.hpp"

namespace snres {

std::string subset_name(std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int x = 1; x <= 32; ++x)
        if (mask & (1u << (x - 1))) {
            s += (first ? "" : ",") + std::to_string(x);
            first = false;
        }
    return s + "}";
}

CoefficientModule CoefficientModule::trivial(int n, RingSpec ring) {
    CoefficientModule m;
    m.kind = Kind::Trivial;
    m.ring = ring;
    m.n = n;
    m.basis = {"1"};
    return m;
}

CoefficientModule CoefficientModule::permutation(int n, int k, RingSpec ring) {
    if (k < 0 || k > n) throw std::invalid_argument("permutation module: need 0 <= k <= n");
    CoefficientModule m;
    m.kind = Kind::Permutation;
    m.ring = ring;
    m.n = n;
    m.k = k;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) pick[static_cast<std::size_t>(t)] = t + 1;
    while (true) {
        std::uint32_t mask = 0;
        for (int x : pick) mask |= 1u << (x - 1);
        m.subsets.push_back(mask);
        m.basis.push_back("v" + subset_name(mask));
        int t = k - 1;
        while (t >= 0 && pick[static_cast<std::size_t>(t)] == n - k + t + 1) --t;
        if (t < 0) break;
        ++pick[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < k; ++u) pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
    }
    return m;
}

CoefficientModule CoefficientModule::external(int n, std::vector<std::string> basis,
                                              std::unordered_map<Perm, std::vector<std::size_t>> table,
                                              RingSpec ring) {
    CoefficientModule m;
    m.kind = Kind::External;
    m.ring = ring;
    m.n = n;
    m.basis = std::move(basis);
    for (const auto& [g, row] : table)
        if (row.size() != m.basis.size()) throw std::invalid_argument("external module: table row has wrong length");
    m.table = std::move(table);
    return m;
}

CoefficientModule CoefficientModule::parse(const std::string& descriptor, int n, RingSpec ring) {
    if (descriptor == "trivial") return trivial(n, ring);
    if (descriptor.rfind("perm:", 0) == 0) {
        std::size_t used = 0;
        const int k = std::stoi(descriptor.substr(5), &used);
        if (used != descriptor.size() - 5) throw std::invalid_argument("bad module descriptor: " + descriptor);
        return permutation(n, k, ring);
    }
    throw std::invalid_argument("bad module descriptor: " + descriptor);
}

std::size_t CoefficientModule::subset_index(std::uint32_t mask) const {
    const auto it = std::lower_bound(subsets.begin(), subsets.end(), mask, [](std::uint32_t a, std::uint32_t b) {
        for (int x = 0; x < 32; ++x) {
            const bool ia = a & (1u << x), ib = b & (1u << x);
            if (ia != ib) return ia;
        }
        return false;
    });
    if (it == subsets.end() || *it != mask) throw std::invalid_argument("subset_index: not a basis subset");
    return static_cast<std::size_t>(it - subsets.begin());
}

std::size_t CoefficientModule::act(const Perm& g, std::size_t m) const {
    switch (kind) {
        case Kind::Trivial: return m;
        case Kind::Permutation: {
            std::uint32_t out = 0;
            for (int x = 1; x <= n; ++x)
                if (subsets[m] & (1u << (x - 1))) out |= 1u << (g(x) - 1);
            return subset_index(out);
        }
        case Kind::External: {
            const auto it = table.find(g);
            if (it == table.end()) throw std::invalid_argument("external module: no action for " + g.str());
            return it->second.at(m);
        }
    }
    return m;
}

std::string CoefficientModule::descriptor() const {
    switch (kind) {
        case Kind::Trivial: return "trivial";
        case Kind::Permutation: return "perm:" + std::to_string(k);
        case Kind::External: return "external";
    }
    return "";
}

std::size_t FreeComplex::index_of(int k, const std::string& name) const {
    const auto& v = cells.at(static_cast<std::size_t>(k));
    const auto it = std::find(v.begin(), v.end(), name);
    if (it == v.end()) throw std::invalid_argument("no cell " + name + " in degree " + std::to_string(k));
    return static_cast<std::size_t>(it - v.begin());
}

namespace {

template <class Cell, class Name, class Boundary>
FreeComplex build_complex(int n, std::string group, const std::vector<std::vector<Cell>>& cells, Name name,
                          Boundary boundary) {
    FreeComplex x;
    x.n = n;
    x.group = std::move(group);
    x.boundary.resize(cells.size());
    std::vector<std::map<Cell, std::size_t>> index(cells.size());
    for (std::size_t d = 0; d < cells.size(); ++d) {
        std::vector<std::string> names;
        for (std::size_t c = 0; c < cells[d].size(); ++c) {
            names.push_back(name(cells[d][c]));
            index[d][cells[d][c]] = c;
        }
        x.cells.push_back(std::move(names));
        if (d == 0) continue;
        for (const Cell& c : cells[d]) {
            const Chain<Cell> b = boundary(c);
            std::vector<std::pair<std::size_t, GroupRingElem>> row;
            for (const auto& [f, a] : b.terms()) {
                const auto it = index[d - 1].find(f);
                if (it == index[d - 1].end()) throw std::logic_error("boundary leaves the complex: " + name(f));
                row.emplace_back(it->second, a);
            }
            x.boundary[d].push_back(std::move(row));
        }
    }
    return x;
}

Int mod_of(const Int& x, const Int& m) {
    Int r = x % m;
    return r < 0 ? Int(r + m) : r;
}

Int inverse_mod(const Int& a, const Int& m) {
    Int r0 = m, r1 = mod_of(a, m), t0 = 0, t1 = 1;
    while (r1 != 0) {
        const Int q = r0 / r1;
        Int tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 != 1) throw std::invalid_argument("inverse_mod: not a unit");
    return mod_of(t0, m);
}

IntMatrix identity_block(std::size_t rows, std::size_t cols, std::size_t r0, std::size_t c0, std::size_t len,
                         long m) {
    IntMatrix out(rows, cols);
    for (std::size_t t = 0; t < len; ++t) out.add(r0 + t, c0 + t, m);
    return out;
}

// Block matrix from column-sparse blocks placed at given offsets.
IntMatrix assemble(std::size_t rows, std::size_t cols,
                   const std::vector<std::tuple<const IntMatrix*, std::size_t, std::size_t, int>>& blocks) {
    IntMatrix out(rows, cols);
    for (const auto& [b, r0, c0, sign] : blocks)
        for (std::size_t c = 0; c < b->cols(); ++c)
            for (const auto& [r, v] : b->column(c)) out.add(r0 + r, c0 + c, sign * v);
    out.finalize();
    return out;
}

struct Cone {
    IntMatrix in, out;
    std::size_t dim;
};

Cone mod_cone(const IntMatrix& in, const IntMatrix& out, std::size_t dim, long m) {
    const std::size_t prev = out.rows(), next = in.cols();
    const IntMatrix mid = identity_block(dim, dim, 0, 0, dim, m);
    const IntMatrix low = identity_block(prev, prev, 0, 0, prev, m);
    Cone c;
    c.dim = dim + prev;
    c.out = assemble(prev, dim + prev, {{&out, 0, 0, 1}, {&low, 0, dim, 1}});
    c.in = assemble(dim + prev, next + dim, {{&in, 0, 0, 1}, {&mid, 0, next, 1}, {&out, dim, next, -1}});
    return c;
}

void check_shapes(const IntMatrix& in, const IntMatrix& out, std::size_t dim) {
    if (in.rows() != dim || out.cols() != dim) throw std::invalid_argument("subquotient: shape mismatch");
}

IntMatrix with_cycles(const IntMatrix& in, const IntMatrix& out, std::size_t dim,
                      const std::vector<std::vector<Int>>& cycles, long modulus, std::size_t cone_dim) {
    IntMatrix a = in;
    for (const auto& z : cycles) {
        if (z.size() != dim) throw std::invalid_argument("cycle has wrong length");
        std::vector<std::pair<std::size_t, Int>> col;
        for (std::size_t i = 0; i < dim; ++i)
            if (z[i] != 0) col.emplace_back(i, z[i]);
        std::vector<Int> dz(out.rows(), 0);
        for (std::size_t i = 0; i < dim; ++i)
            if (z[i] != 0)
                for (const auto& [r, v] : out.column(i)) dz[r] += v * z[i];
        for (std::size_t r = 0; r < dz.size(); ++r) {
            if (modulus == 0) {
                if (dz[r] != 0) throw std::invalid_argument("generated subgroup: element is not a cycle");
            } else {
                if (dz[r] % modulus != 0) throw std::invalid_argument("generated subgroup: element is not a cycle mod m");
                if (dz[r] != 0) col.emplace_back(dim + r, Int(-dz[r] / modulus));
            }
        }
        std::vector<std::pair<std::size_t, Int>> sized;
        for (auto& e : col)
            if (e.first < cone_dim) sized.push_back(e);
        a.append_column(std::move(sized));
    }
    return a;
}

}  // namespace

FreeComplex p_complex(int n) {
    std::vector<std::vector<PCell>> cells;
    for (int d = 0; d <= 3; ++d) cells.push_back(enumerate_p_cells(n, d));
    return build_complex<PCell>(
        n, "S" + std::to_string(n), cells, [](const PCell& c) { return c.name(); },
        [n](const PCell& c) { return boundary_p(c, n); });
}

FreeComplex q_complex(int n, int top) {
    if (top < 0) throw std::invalid_argument("q_complex: negative top degree");
    std::vector<std::vector<BarSimplex>> cells;
    for (int d = 0; d <= top; ++d) cells.push_back(enumerate_essential(n, d));
    QRewriter qr(n, true);
    return build_complex<BarSimplex>(
        n, "S" + std::to_string(n), cells, [](const BarSimplex& s) { return s.str(); },
        [&qr](const BarSimplex& s) { return qr.boundary_q(s); });
}

FreeComplex product_complex(int a, int b) {
    const ProductResolution F(a, b);
    std::vector<std::vector<TensorCell>> cells;
    for (int d = 0; d <= 3; ++d) cells.push_back(F.cells(d));
    return build_complex<TensorCell>(
        a + b, "S" + std::to_string(a) + " x S" + std::to_string(b), cells,
        [](const TensorCell& c) { return c.name(); }, [&F](const TensorCell& c) { return F.boundary(c); });
}

FreeComplex klein_complex(int n, const Perm& g1, const Perm& g2, int top) {
    using Cell = std::pair<int, int>;
    std::vector<std::vector<Cell>> cells;
    for (int d = 0; d <= top; ++d) {
        cells.emplace_back();
        for (int p = d; p >= 0; --p) cells.back().push_back({p, d - p});
    }
    auto u = [n](const Perm& g, int deg) {
        return GroupRingElem::of(g) + GroupRingElem::of(Perm(n), deg % 2 == 1 ? -1 : 1);
    };
    return build_complex<Cell>(
        n, "<" + g1.str() + "," + g2.str() + ">", cells,
        [](const Cell& c) { return "f" + std::to_string(c.first) + "," + std::to_string(c.second); },
        [&](const Cell& c) {
            Chain<Cell> out(n);
            if (c.first > 0) out.add({c.first - 1, c.second}, u(g1, c.first));
            if (c.second > 0) out.add({c.first, c.second - 1}, (c.first % 2 == 0 ? 1 : -1) * u(g2, c.second));
            return out;
        });
}

IntMatrix coinvariant_matrix(const FreeComplex& x, const CoefficientModule& m, int k) {
    if (k < 0 || k > x.top()) throw std::invalid_argument("coinvariant_matrix: degree out of range");
    const std::size_t r = m.rank();
    const std::size_t cols = x.rank(k) * r;
    if (k == 0) return IntMatrix(0, cols);
    IntMatrix out(x.rank(k - 1) * r, cols);
    const auto& bd = x.boundary[static_cast<std::size_t>(k)];
    for (std::size_t c = 0; c < bd.size(); ++c)
        for (std::size_t v = 0; v < r; ++v)
            for (const auto& [j, a] : bd[c])
                for (const auto& [g, coef] : a.terms()) out.add(j * r + m.act(g.inverse(), v), c * r + v, coef);
    out.finalize();
    return out;
}

std::vector<IntMatrix> coinvariants_complex(const FreeComplex& x, const CoefficientModule& m) {
    std::vector<IntMatrix> out;
    for (int k = 0; k <= x.top(); ++k) out.push_back(coinvariant_matrix(x, m, k));
    return out;
}

IntMatrix hom_matrix(const FreeComplex& x, const CoefficientModule& m, int k) {
    if (k < 0 || k >= x.top()) throw std::invalid_argument("hom_matrix: degree out of range");
    const std::size_t r = m.rank();
    IntMatrix out(x.rank(k + 1) * r, x.rank(k) * r);
    const auto& bd = x.boundary[static_cast<std::size_t>(k + 1)];
    for (std::size_t c = 0; c < bd.size(); ++c)
        for (const auto& [j, a] : bd[c])
            for (const auto& [g, coef] : a.terms())
                for (std::size_t v = 0; v < r; ++v) out.add(c * r + m.act(g, v), j * r + v, coef);
    out.finalize();
    return out;
}

std::vector<IntMatrix> hom_complex(const FreeComplex& x, const CoefficientModule& m) {
    std::vector<IntMatrix> out;
    for (int k = 0; k < x.top(); ++k) out.push_back(hom_matrix(x, m, k));
    return out;
}

AbelianGroupInfo subquotient(const IntMatrix& in, const IntMatrix& out, std::size_t dim, long modulus) {
    check_shapes(in, out, dim);
    if (modulus < 0) throw std::invalid_argument("subquotient: negative modulus");
    if (modulus == 1) return {};
    if (modulus > 1) {
        const Cone c = mod_cone(in, out, dim, modulus);
        return subquotient(c.in, c.out, c.dim, 0);
    }
    const std::size_t rank_out = smith_normal_form(out).rank;
    const SmithResult s = smith_normal_form(in);
    return group_from_factors(dim - rank_out - s.rank, s.invariant_factors);
}

AbelianGroupInfo subquotient_mod_cycles(const IntMatrix& in, const IntMatrix& out, std::size_t dim,
                                        const std::vector<std::vector<Int>>& cycles, long modulus) {
    check_shapes(in, out, dim);
    if (modulus > 1) {
        const Cone c = mod_cone(in, out, dim, modulus);
        return subquotient(with_cycles(c.in, out, dim, cycles, modulus, c.dim), c.out, c.dim, 0);
    }
    return subquotient(with_cycles(in, out, dim, cycles, 0, dim), out, dim, 0);
}

Int generated_order(const IntMatrix& in, const IntMatrix& out, std::size_t dim,
                    const std::vector<std::vector<Int>>& cycles, long modulus) {
    const AbelianGroupInfo whole = subquotient(in, out, dim, modulus);
    if (whole.free_rank > 0) return 0;
    const AbelianGroupInfo rest = subquotient_mod_cycles(in, out, dim, cycles, modulus);
    return whole.torsion_order() / rest.torsion_order();
}

AbelianGroupInfo homology(const FreeComplex& x, const CoefficientModule& m, int k) {
    if (k < 0 || k + 1 > x.top()) throw std::invalid_argument("homology: degree needs cells one degree higher");
    return subquotient(coinvariant_matrix(x, m, k + 1), coinvariant_matrix(x, m, k), x.rank(k) * m.rank(),
                       m.ring.modulus);
}

AbelianGroupInfo cohomology(const FreeComplex& x, const CoefficientModule& m, int k) {
    if (k < 0 || k + 1 > x.top()) throw std::invalid_argument("cohomology: degree needs cells one degree higher");
    const std::size_t dim = x.rank(k) * m.rank();
    const IntMatrix in = k == 0 ? IntMatrix(dim, 0) : hom_matrix(x, m, k - 1);
    return subquotient(in, hom_matrix(x, m, k), dim, m.ring.modulus);
}

HomologyClasses::HomologyClasses(const IntMatrix& in, const IntMatrix& out, std::size_t dim) : out_(out), dim_(dim) {
    check_shapes(in, out, dim);
    const DenseSmith so = dense_smith(to_dense(out.transpose()), dim, out.rows());
    const std::size_t kr = dim - so.rank;
    DenseMatrix zrows(kr, std::vector<Int>(dim));
    zleft_.assign(kr, std::vector<Int>(dim));
    for (std::size_t a = 0; a < kr; ++a)
        for (std::size_t x = 0; x < dim; ++x) {
            zrows[a][x] = so.U[so.rank + a][x];
            zleft_[a][x] = so.Uinv[x][so.rank + a];
        }
    const DenseMatrix ap = dense_multiply(zleft_, to_dense(in));
    const DenseSmith sa = dense_smith(ap.empty() ? DenseMatrix(kr, std::vector<Int>(in.cols())) : ap, kr, in.cols());
    uprime_ = sa.U;
    std::vector<Int> torsion;
    for (std::size_t i = 0; i < kr; ++i) {
        const bool bounded = i < sa.rank;
        if (bounded && sa.diag[i] == 1) continue;
        gen_rows_.push_back(i);
        orders_.push_back(bounded ? sa.diag[i] : Int(0));
        if (bounded) torsion.push_back(sa.diag[i]);
        std::vector<Int> g(dim, 0);
        for (std::size_t a = 0; a < kr; ++a)
            if (sa.Uinv[a][i] != 0)
                for (std::size_t x = 0; x < dim; ++x) g[x] += zrows[a][x] * sa.Uinv[a][i];
        generators_.push_back(std::move(g));
    }
    group_ = group_from_factors(kr - sa.rank, torsion);
}

bool HomologyClasses::is_cycle(const std::vector<Int>& z) const {
    if (z.size() != dim_) return false;
    std::vector<Int> dz(out_.rows(), 0);
    for (std::size_t i = 0; i < dim_; ++i)
        if (z[i] != 0)
            for (const auto& [r, v] : out_.column(i)) dz[r] += v * z[i];
    return std::all_of(dz.begin(), dz.end(), [](const Int& v) { return v == 0; });
}

std::optional<std::vector<Int>> HomologyClasses::coordinates(const std::vector<Int>& z) const {
    if (!is_cycle(z)) return std::nullopt;
    const std::size_t kr = zleft_.size();
    std::vector<Int> c(kr, 0);
    for (std::size_t a = 0; a < kr; ++a)
        for (std::size_t x = 0; x < dim_; ++x)
            if (z[x] != 0) c[a] += zleft_[a][x] * z[x];
    std::vector<Int> out;
    for (std::size_t t = 0; t < gen_rows_.size(); ++t) {
        Int y = 0;
        for (std::size_t a = 0; a < kr; ++a) y += uprime_[gen_rows_[t]][a] * c[a];
        out.push_back(orders_[t] == 0 ? y : mod_of(y, orders_[t]));
    }
    if (!rebase_.empty()) {
        std::vector<Int> r(out.size(), 0);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j < out.size(); ++j) r[i] += rebase_[i][j] * out[j];
        for (std::size_t i = 0; i < out.size(); ++i) r[i] = mod_of(r[i], orders_[i]);
        out = std::move(r);
    }
    return out;
}

bool HomologyClasses::prefer_basis_cycles(const std::vector<std::size_t>& order) {
    const std::size_t g = orders_.size();
    if (g == 0) return true;
    const Int d = orders_[0];
    if (d == 0 || std::any_of(orders_.begin(), orders_.end(), [&](const Int& o) { return o != d; })) return false;
    if (g > 1) {
        for (Int p = 2; p * p <= d; ++p)
            if (d % p == 0) return false;
    }
    // Gaussian elimination over Z/d on coordinate vectors of single basis cycles
    std::vector<std::size_t> chosen;
    DenseMatrix cols;
    std::vector<std::vector<Int>> reduced;
    std::vector<std::size_t> pivots;
    for (std::size_t idx : order) {
        if (chosen.size() == g) break;
        if (idx >= dim_) continue;
        std::vector<Int> e(dim_, 0);
        e[idx] = 1;
        const auto co = coordinates(e);
        if (!co) continue;
        std::vector<Int> v = *co;
        for (std::size_t t = 0; t < reduced.size(); ++t) {
            const Int f = v[pivots[t]];
            if (f == 0) continue;
            for (std::size_t i = 0; i < g; ++i) v[i] = mod_of(v[i] - f * reduced[t][i], d);
        }
        std::size_t piv = g;
        for (std::size_t i = 0; i < g && piv == g; ++i)
            if (v[i] != 0 && gcd(v[i], d) == 1) piv = i;
        if (piv == g) continue;
        const Int inv = inverse_mod(v[piv], d);
        for (auto& x : v) x = mod_of(x * inv, d);
        for (auto& r : reduced) {
            const Int f = r[piv];
            if (f == 0) continue;
            for (std::size_t i = 0; i < g; ++i) r[i] = mod_of(r[i] - f * v[i], d);
        }
        reduced.push_back(v);
        pivots.push_back(piv);
        chosen.push_back(idx);
        cols.push_back(*co);
    }
    if (chosen.size() < g) return false;
    // rebase_ inverts the matrix whose columns are the chosen coordinate vectors
    DenseMatrix aug(g, std::vector<Int>(2 * g, 0));
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j) aug[i][j] = cols[j][i];
        aug[i][g + i] = 1;
    }
    for (std::size_t c = 0; c < g; ++c) {
        std::size_t p = c;
        while (p < g && gcd(aug[p][c], d) != 1) ++p;
        if (p == g) return false;
        std::swap(aug[p], aug[c]);
        const Int inv = inverse_mod(aug[c][c], d);
        for (auto& x : aug[c]) x = mod_of(x * inv, d);
        for (std::size_t r = 0; r < g; ++r) {
            if (r == c || aug[r][c] == 0) continue;
            const Int f = aug[r][c];
            for (std::size_t j = 0; j < 2 * g; ++j) aug[r][j] = mod_of(aug[r][j] - f * aug[c][j], d);
        }
    }
    DenseMatrix inv(g, std::vector<Int>(g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) inv[i][j] = aug[i][g + j];
    if (!rebase_.empty()) inv = dense_multiply(inv, rebase_);
    rebase_ = std::move(inv);
    for (std::size_t t = 0; t < g; ++t) {
        generators_[t].assign(dim_, 0);
        generators_[t][chosen[t]] = 1;
    }
    return true;
}

std::string format_chain(const FreeComplex& x, const CoefficientModule& m, int k, const std::vector<Int>& v) {
    std::ostringstream os;
    bool first = true;
    const std::size_t r = m.rank();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        const Int a = abs(v[i]);
        os << (first ? (v[i] < 0 ? "-" : "") : (v[i] < 0 ? " - " : " + "));
        if (a != 1) os << a << " ";
        os << x.cells.at(static_cast<std::size_t>(k)).at(i / r);
        if (m.kind != CoefficientModule::Kind::Trivial) os << " (x) " << m.basis[i % r];
        first = false;
    }
    return first ? "0" : os.str();
}

HomologyReport compute_homology(const FreeComplex& x, const CoefficientModule& m, int k, bool cohomology_flag,
                                bool representatives) {
    HomologyReport rep;
    rep.group = x.group;
    rep.module = m.descriptor();
    rep.ring = m.ring;
    rep.degree = k;
    rep.cohomology = cohomology_flag;
    rep.info = cohomology_flag ? cohomology(x, m, k) : homology(x, m, k);
    if (!representatives || m.ring.modulus != 0) return rep;
    const std::size_t dim = x.rank(k) * m.rank();
    IntMatrix in, out;
    if (cohomology_flag) {
        in = k == 0 ? IntMatrix(dim, 0) : hom_matrix(x, m, k - 1);
        out = hom_matrix(x, m, k);
    } else {
        in = coinvariant_matrix(x, m, k + 1);
        out = coinvariant_matrix(x, m, k);
    }
    if (dim > 600 || in.cols() > 4000 || out.rows() > 4000) return rep;
    HomologyClasses hc(in, out, dim);
    const std::size_t r = m.rank();
    std::vector<std::size_t> order;
    for (std::size_t v = r; v-- > 0;)
        for (std::size_t c = 0; c < x.rank(k); ++c) order.push_back(c * r + v);
    hc.prefer_basis_cycles(order);
    for (const auto& g : hc.generators()) rep.representatives.push_back(format_chain(x, m, k, g));
    return rep;
}

}  // namespace snres
