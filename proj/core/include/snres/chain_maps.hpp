#pragma once

#include <string>
#include <vector>

#include "snres/bar_quotient.hpp"
#include "snres/complex_p.hpp"

namespace snres {

// psi: Q_* -> P_* on essential cells of dimension 0..3.
PChain psi(const BarSimplex& essential, int n);
PChain psi(const BarChain& x);
PChain psi3(const BarSimplex& essential, int n);

// phi: P_* -> Q_* on cells of dimension 0..2.
BarChain phi(const PCell& cell, int n);
BarChain phi(const PChain& x);

struct ChainMapFailure {
    std::string what;  // "psi3 [s3|s2 s3|s3]", "phi d1,3", ...
    std::string residual;
};

struct ChainMapReport {
    int n = 0;
    std::size_t checked = 0;
    std::vector<ChainMapFailure> failures;
    bool ok() const { return failures.empty(); }
};

// (a) d psi = psi dQ in dims 1..max_psi_dim, (b) dQ phi = phi d in dims 1..2,
// (c) psi2 phi2 = id.
ChainMapReport verify_chain_maps(int n, int max_psi_dim = 3);

}  // namespace snres

namespace snres {

// The consecutive cycle (i, i+1, ..., j), realized as the ramp s_i s_{i+1} ... s_{j-1}.
struct ConsecutiveCycle {
    int i = 1, j = 2;
    Perm perm(int n) const;
    std::string str() const;  // "(2,3,4)"
};

// True when no 1-cell of the cell is e_{i-1}, e_i or e_j.
bool prism_admissible(const ConsecutiveCycle& a, const PCell& c);
// Indices of the cell relabelled by the cycle, the cell c_{a.I}.
PCell prism_reindex(const ConsecutiveCycle& a, const PCell& c);
// Partial prism operator on cells of dimension 0..2, extended equivariantly.
PChain prism(const ConsecutiveCycle& a, const PCell& c, int n);
PChain prism(const ConsecutiveCycle& a, const PChain& x);

struct PrismReport {
    int n = 0;
    std::size_t checked = 0;
    std::vector<ChainMapFailure> failures;
    bool ok() const { return failures.empty(); }
};
// d Pi(a, c) = a c' - c - Pi(a, dc) for every admissible pair.
PrismReport verify_prism(int n);

// Cells of P^a (x) P^b. The right factor is indexed in S_b.
struct TensorCell {
    PCell left, right;
    int dim() const { return left.dim() + right.dim(); }
    std::string name() const;  // "e1 x *", "e2 x e1"
    friend bool operator==(const TensorCell&, const TensorCell&) = default;
    friend auto operator<=>(const TensorCell&, const TensorCell&) = default;
};
using TChain = Chain<TensorCell>;

// P^a (x) P^b over Z[S_a x S_b], with S_a on {1..a} and S_b on {a+1..a+b}.
class ProductResolution {
public:
    ProductResolution(int a, int b);
    int a() const { return a_; }
    int b() const { return b_; }
    int n() const { return a_ + b_; }
    std::vector<TensorCell> cells(int dim) const;  // dim 0..3
    TChain boundary(const TensorCell& c) const;
    TChain boundary(const TChain& x) const;
    PChain f(const TensorCell& c) const;  // comparison map to P^n, dims 0..2
    PChain f(const TChain& x) const;

private:
    int a_, b_;
};

GroupRingElem embed_group_ring(const GroupRingElem& x, int n, int offset);
PCell shift_cell(const PCell& c, int offset);

struct ProductReport {
    int a = 0, b = 0;
    std::size_t checked = 0;
    std::vector<ChainMapFailure> failures;
    bool ok() const { return failures.empty(); }
};
// d^2 = 0 on dims 1..3 and f d = d f on dims 1..2.
ProductReport verify_product_resolution(int a, int b);

}  // namespace snres
