#include "snres/complex_p.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace snres {

int PCell::dim() const {
    switch (kind) {
        case PKind::Base: return 0;
        case PKind::E: return 1;
        case PKind::C:
        case PKind::B:
        case PKind::D: return 2;
        default: return 3;
    }
}

std::string PCell::name() const {
    std::ostringstream os;
    switch (kind) {
        case PKind::Base: return "*";
        case PKind::E: os << "e" << i; break;
        case PKind::C: os << "c" << i; break;
        case PKind::B: os << "b" << i; break;
        case PKind::D: os << "d" << i << "," << j; break;
        case PKind::C31: os << "c31_" << i; break;
        case PKind::C32: os << "c32_" << i << "," << j; break;
        case PKind::C33: os << "c33_" << i << "," << j << "," << k; break;
        case PKind::C34: os << "c34_" << i << "," << j; break;
        case PKind::C35: os << "c35_" << i; break;
        case PKind::C36: os << "c36_" << i; break;
        case PKind::C37: os << "c37_" << i; break;
    }
    return os.str();
}

PCell parse_pcell(const std::string& text) {
    if (text == "*") return pbase();
    static const std::regex re(R"(^(e|c|b|d|c31|c32|c33|c34|c35|c36|c37)_?([0-9,]+)$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw std::invalid_argument("cannot parse cell: " + text);
    const std::string kind = m[1];
    const std::string idx = m[2];
    std::vector<int> v;
    if (idx.find(',') != std::string::npos) {
        std::stringstream ss(idx);
        std::string tok;
        while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
    } else {
        for (char ch : idx) v.push_back(ch - '0');
    }
    auto need = [&](std::size_t k) {
        if (v.size() != k) throw std::invalid_argument("wrong number of indices in cell: " + text);
    };
    static const std::map<std::string, std::pair<PKind, std::size_t>> kinds = {
        {"e", {PKind::E, 1}},     {"c", {PKind::C, 1}},     {"b", {PKind::B, 1}},
        {"d", {PKind::D, 2}},     {"c31", {PKind::C31, 1}}, {"c32", {PKind::C32, 2}},
        {"c33", {PKind::C33, 3}}, {"c34", {PKind::C34, 2}}, {"c35", {PKind::C35, 1}},
        {"c36", {PKind::C36, 1}}, {"c37", {PKind::C37, 1}}};
    const auto& [k, arity] = kinds.at(kind);
    if (kind == "c" && v.size() == 2 && idx.find(',') == std::string::npos)
        throw std::invalid_argument("ambiguous cell: " + text);
    need(arity);
    PCell c{k};
    c.i = v[0];
    if (arity > 1) c.j = v[1];
    if (arity > 2) c.k = v[2];
    return c;
}

bool is_valid_pcell(const PCell& c, int n) {
    const int i = c.i, j = c.j, k = c.k;
    switch (c.kind) {
        case PKind::Base: return true;
        case PKind::E:
        case PKind::C:
        case PKind::C31: return 1 <= i && i <= n - 1;
        case PKind::B:
        case PKind::C35:
        case PKind::C36: return 1 <= i && i <= n - 2;
        case PKind::C37: return 1 <= i && i <= n - 3;
        case PKind::D: return 1 <= i && j <= n - 1 && j >= i + 2;
        case PKind::C32: return 1 <= i && i <= n - 1 && 1 <= j && j <= n - 1 && std::abs(i - j) >= 2;
        case PKind::C33: return 1 <= i && j > i + 1 && k > j + 1 && k <= n - 1;
        case PKind::C34: return 1 <= i && i <= n - 2 && 1 <= j && j <= n - 1 && (j < i - 1 || j > i + 2);
    }
    return false;
}

std::vector<PCell> enumerate_p_cells(int n, int dim) {
    std::vector<PCell> out;
    auto push = [&](PCell c) {
        if (is_valid_pcell(c, n)) out.push_back(c);
    };
    switch (dim) {
        case 0: out.push_back(pbase()); break;
        case 1:
            for (int i = 1; i < n; ++i) push(pe(i));
            break;
        case 2:
            for (int i = 1; i < n; ++i) push(pc(i));
            for (int i = 1; i < n; ++i) push(pb(i));
            for (int i = 1; i < n; ++i)
                for (int j = i + 2; j < n; ++j) push(pd(i, j));
            break;
        case 3:
            for (int i = 1; i < n; ++i) push(c31(i));
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j) push(c32(i, j));
            for (int i = 1; i < n; ++i)
                for (int j = i + 2; j < n; ++j)
                    for (int k = j + 2; k < n; ++k) push(c33(i, j, k));
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j) push(c34(i, j));
            for (int i = 1; i < n; ++i) push(c35(i));
            for (int i = 1; i < n; ++i) push(c36(i));
            for (int i = 1; i < n; ++i) push(c37(i));
            break;
        default: throw std::invalid_argument("enumerate_p_cells: dimension must be 0..3");
    }
    return out;
}

namespace {

using Terms = std::vector<std::pair<int, std::vector<int>>>;

}  // namespace

PChain boundary_p(const PCell& c, int n) {
    if (!is_valid_pcell(c, n)) throw std::invalid_argument("boundary_p: invalid cell " + c.name());
    auto W = [n](const Terms& t) { return GroupRingElem::words(n, t); };
    const int i = c.i, j = c.j, k = c.k;
    PChain x(n);
    switch (c.kind) {
        case PKind::Base: break;
        case PKind::E: x.add(pbase(), W({{1, {i}}, {-1, {}}})); break;
        case PKind::C: x.add(pe(i), W({{1, {i}}, {1, {}}})); break;
        case PKind::B:
            x.add(pe(i + 1), W({{1, {}}, {-1, {i}}, {1, {i + 1, i}}}));
            x.add(pe(i), W({{-1, {}}, {1, {i + 1}}, {-1, {i, i + 1}}}));
            break;
        case PKind::D:
            x.add(pe(i), W({{1, {j}}, {-1, {}}}));
            x.add(pe(j), W({{-1, {i}}, {1, {}}}));
            break;
        case PKind::C31: x.add(pc(i), W({{1, {i}}, {-1, {}}})); break;
        case PKind::C32:
            x.add(pc(i), W({{1, {j}}, {-1, {}}}));
            if (i < j)
                x.add(pd(i, j), W({{-1, {i}}, {-1, {}}}));
            else
                x.add(pd(j, i), W({{1, {i}}, {1, {}}}));
            break;
        case PKind::C33:
            x.add(pd(j, k), W({{1, {i}}, {-1, {}}}));
            x.add(pd(i, k), W({{-1, {j}}, {1, {}}}));
            x.add(pd(i, j), W({{1, {k}}, {-1, {}}}));
            break;
        case PKind::C34:
            x.add(pb(i), W({{1, {j}}, {-1, {}}}));
            if (j > i) {
                x.add(pd(i + 1, j), W({{-1, {}}, {1, {i}}, {-1, {i + 1, i}}}));
                x.add(pd(i, j), W({{1, {}}, {-1, {i + 1}}, {1, {i, i + 1}}}));
            } else {
                x.add(pd(j, i + 1), W({{1, {}}, {-1, {i}}, {1, {i + 1, i}}}));
                x.add(pd(j, i), W({{-1, {}}, {1, {i + 1}}, {-1, {i, i + 1}}}));
            }
            break;
        case PKind::C35:
            x.add(pb(i), W({{1, {i + 1}}, {1, {}}}));
            x.add(pc(i + 1), W({{-1, {}}}));
            x.add(pc(i), W({{1, {i, i + 1}}}));
            break;
        case PKind::C36:
            x.add(pb(i), W({{1, {i, i + 1}}, {-1, {}}}));
            x.add(pc(i + 1), W({{1, {i + 1, i}}, {-1, {i}}}));
            x.add(pc(i), W({{1, {i + 1}}, {-1, {}}}));
            break;
        case PKind::C37:
            x.add(pd(i, i + 2), W({{1, {}},
                                   {-1, {i + 1}},
                                   {1, {i, i + 1}},
                                   {-1, {i + 2, i, i + 1}},
                                   {1, {i + 2, i + 1}},
                                   {1, {i + 1, i + 2, i, i + 1}}}));
            x.add(pb(i), W({{1, {i + 2}}, {-1, {}}, {1, {i, i + 1, i + 2}}, {-1, {i + 1, i + 2}}}));
            x.add(pb(i + 1), W({{1, {i}}, {-1, {}}, {1, {i + 2, i + 1, i}}, {-1, {i + 1, i}}}));
            break;
    }
    return x;
}

PChain boundary_p(const PChain& x) {
    const int n = x.n();
    return apply_linear<PCell>(x, [n](const PCell& c) { return boundary_p(c, n); });
}

std::vector<PCheckFailure> check_d_squared(int n) {
    std::vector<PCheckFailure> out;
    for (int d = 2; d <= 3; ++d)
        for (const PCell& c : enumerate_p_cells(n, d)) {
            PChain r = boundary_p(boundary_p(c, n));
            if (!r.is_zero()) out.push_back({c, r});
        }
    return out;
}

ExpandedComplex expand_p(int n) {
    ExpandedComplex ec;
    ec.n = n;
    ec.group = all_perms(n);
    for (int d = 0; d <= 3; ++d) ec.cells.push_back(enumerate_p_cells(n, d));
    return ec;
}

IntMatrix ExpandedComplex::matrix(int k) const {
    const std::size_t G = group.size();
    if (k == 0) {
        IntMatrix m(1, G);
        for (std::size_t g = 0; g < G; ++g) m.add(0, g, 1);
        return m;
    }
    std::unordered_map<Perm, std::size_t> gidx;
    for (std::size_t g = 0; g < G; ++g) gidx[group[g]] = g;
    std::map<PCell, std::size_t> cidx;
    for (std::size_t c = 0; c < cells[k - 1].size(); ++c) cidx[cells[k - 1][c]] = c;
    const std::size_t src = cells[k].size(), tgt = cells[k - 1].size();
    IntMatrix m(G * tgt, G * src);
    for (std::size_t c = 0; c < src; ++c) {
        const PChain bd = boundary_p(cells[k][c], n);
        for (std::size_t g = 0; g < G; ++g)
            for (const auto& [cell, a] : bd.terms())
                for (const auto& [h, v] : a.terms())
                    m.add(gidx.at(group[g] * h) * tgt + cidx.at(cell), g * src + c, v);
    }
    m.finalize();
    return m;
}

bool ExactnessReport::exact() const {
    if (!d2_zero) return false;
    for (const auto& h : reduced_homology)
        if (!(h == AbelianGroupInfo{})) return false;
    return true;
}

ExactnessReport verify_p_exactness(int n) {
    ExactnessReport rep;
    rep.d2_zero = check_d_squared(n).empty();
    const ExpandedComplex ec = expand_p(n);
    std::vector<SmithResult> s;
    std::vector<std::size_t> dims;
    for (int k = 0; k <= 3; ++k) {
        s.push_back(smith_normal_form(ec.matrix(k)));
        dims.push_back(ec.group.size() * ec.cells[k].size());
    }
    for (int k = 0; k <= 2; ++k) {
        const std::size_t free = dims[k] - s[k].rank - s[k + 1].rank;
        rep.reduced_homology.push_back(group_from_factors(free, s[k + 1].invariant_factors));
    }
    return rep;
}

}  // namespace snres
