#include <stdexcept>

#include "snres/chain_maps.hpp"

namespace snres {

std::string TensorCell::name() const { return left.name() + " x " + right.name(); }

GroupRingElem embed_group_ring(const GroupRingElem& x, int n, int offset) {
    GroupRingElem out(n, x.ring());
    for (const auto& [p, c] : x.terms()) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) img[static_cast<std::size_t>(v - 1)] = v;
        for (int v = 1; v <= p.n(); ++v) img[static_cast<std::size_t>(offset + v - 1)] = offset + p(v);
        out.add_term(Perm::from_images(img), c);
    }
    return out;
}

PCell shift_cell(const PCell& c, int offset) {
    PCell out = c;
    if (c.kind == PKind::Base) return out;
    for (int* idx : {&out.i, &out.j, &out.k})
        if (*idx != 0) *idx += offset;
    return out;
}

ProductResolution::ProductResolution(int a, int b) : a_(a), b_(b) {
    if (a < 1 || b < 1 || a + b > Perm::kMaxN) throw std::invalid_argument("product_resolution: bad sizes");
}

std::vector<TensorCell> ProductResolution::cells(int dim) const {
    if (dim < 0 || dim > 3) throw std::invalid_argument("product_resolution: dimension must be 0..3");
    std::vector<TensorCell> out;
    for (int p = 0; p <= dim; ++p)
        for (const PCell& x : enumerate_p_cells(a_, p))
            for (const PCell& y : enumerate_p_cells(b_, dim - p)) out.push_back({x, y});
    return out;
}

TChain ProductResolution::boundary(const TensorCell& c) const {
    const int n = a_ + b_;
    TChain out(n);
    const PChain dl = boundary_p(c.left, a_);
    const PChain dr = boundary_p(c.right, b_);
    for (const auto& [x, g] : dl.terms()) out.add({x, c.right}, embed_group_ring(g, n, 0));
    const int sign = c.left.dim() % 2 == 0 ? 1 : -1;
    for (const auto& [y, g] : dr.terms())
        out.add({c.left, y}, sign * embed_group_ring(g, n, a_));
    return out;
}

TChain ProductResolution::boundary(const TChain& x) const {
    return apply_linear<TensorCell>(x, [this](const TensorCell& c) { return boundary(c); });
}

PChain ProductResolution::f(const TensorCell& c) const {
    const int n = a_ + b_;
    if (c.dim() > 2) throw std::invalid_argument("product_resolution: f is defined in dimensions 0..2");
    if (c.right.kind == PKind::Base) return PChain::of(c.left, n);
    if (c.left.kind == PKind::Base) return PChain::of(shift_cell(c.right, a_), n);
    return PChain::of(pd(c.left.i, a_ + c.right.i), n, -1);
}

PChain ProductResolution::f(const TChain& x) const {
    return apply_linear<PCell>(x, [this](const TensorCell& c) { return f(c); });
}

ProductReport verify_product_resolution(int a, int b) {
    ProductReport rep;
    rep.a = a;
    rep.b = b;
    const ProductResolution F(a, b);
    for (int d = 1; d <= 3; ++d)
        for (const TensorCell& c : F.cells(d)) {
            ++rep.checked;
            const TChain dd = F.boundary(F.boundary(c));
            if (!dd.is_zero()) rep.failures.push_back({"d^2 " + c.name(), std::to_string(dd.terms().size()) + " terms"});
            if (d > 2) continue;
            ++rep.checked;
            const PChain r = boundary_p(F.f(c)) - F.f(F.boundary(c));
            if (!r.is_zero()) rep.failures.push_back({"f " + c.name(), std::to_string(r.terms().size()) + " terms"});
        }
    return rep;
}

}  // namespace snres
