#pragma once

#include <string>
#include <vector>

#include "snres/homology.hpp"

namespace snres {

// Equivariant cochain X_dim -> M given on generators: values[cell * rank(M) + m]
// is the coefficient of basis element m in f(cell).
struct Cochain {
    std::string label;
    int dim = 0;
    CoefficientModule module;
    std::vector<Int> values;

    Int value(std::size_t cell, std::size_t m) const { return values.at(cell * module.rank() + m); }
};

// Families on P_* for S_n with coefficients M^k (k = 0 means the trivial module):
// kappa, kappa_hat, alpha, alpha_hat, beta, beta_hat, beta_tilde.
const std::vector<std::string>& cocycle_families();
// Pullbacks on the product resolution for S_a x S_b with trivial coefficients:
// pi1_kappa0, pi2_kappa0, pi1_alpha0, pi2_alpha0, pi1_beta0, pi2_beta0, pi3_beta_hat0.
const std::vector<std::string>& product_cocycle_families();

bool in_two_torsion(const Int& r, RingSpec ring);
// Empty when the parameters are legal, otherwise the reason.
std::string cocycle_parameter_error(const std::string& family, const Int& r, int n, int k, RingSpec ring);

Cochain build_cocycle(const std::string& family, const Int& r, int n, int k, RingSpec ring);
Cochain build_product_cocycle(const std::string& family, const Int& r, int a, int b, RingSpec ring);
// beta_hat0 on klein_complex: r on the mixed 2-cell f1,1.
Cochain build_klein_cocycle(const Int& r, const FreeComplex& klein, RingSpec ring);

// delta f = 0, evaluating f on the boundary of every (dim+1)-cell.
bool verify_cocycle(const FreeComplex& x, const Cochain& f);
// Residual delta f as a vector in the (dim+1)-cochain coordinates.
std::vector<Int> coboundary(const FreeComplex& x, const Cochain& f);
// <f, z> for a chain z in X_dim (x)_G M, using the invariant form on the permutation basis.
Int pairing(const Cochain& f, const std::vector<Int>& chain);

// Chain sum_t coeffs[t] * cells[t] (x) v in X_dim (x)_G M.
std::vector<Int> basis_chain(const FreeComplex& x, const CoefficientModule& m, int dim,
                             const std::vector<std::pair<std::string, Int>>& cells, std::size_t module_index);

struct IsomorphismCheck {
    std::string what;
    AbelianGroupInfo group;
    Int generated;  // order of the subgroup generated by the given classes
    bool ok() const { return group.free_rank == 0 && generated == group.torsion_order(); }
};
IsomorphismCheck check_generates_homology(const std::string& what, const FreeComplex& x, const CoefficientModule& m,
                                          int k, const std::vector<std::vector<Int>>& cycles);
IsomorphismCheck check_generates_cohomology(const std::string& what, const FreeComplex& x, const CoefficientModule& m,
                                            int k, const std::vector<Cochain>& cocycles);

// Pairing of cocycles against cycles, all values in (m/2)Z/m for m even; nondegenerate
// when the matrix divided by m/2 is invertible over F_2.
struct PairingMatrix {
    std::vector<std::string> rows, cols;
    std::vector<std::vector<Int>> values;
    bool nondegenerate() const;
};
PairingMatrix pairing_matrix(const std::vector<Cochain>& cocycles, const std::vector<std::string>& cycle_names,
                             const std::vector<std::vector<Int>>& cycles);

struct ShapiroEntry {
    int degree = 0;
    bool cohomology = false;
    AbelianGroupInfo twisted;  // S_n with M^k
    AbelianGroupInfo product;  // S_{n-k} x S_k with R
    bool ok() const { return twisted == product; }
};
struct ShapiroReport {
    int n = 0, k = 0;
    RingSpec ring;
    std::vector<ShapiroEntry> entries;
    bool ok() const;
};
ShapiroReport shapiro_crosscheck(int n, int k, RingSpec ring);

struct SuiteFailure {
    std::string what;
    std::string detail;
};
struct CocycleSuiteReport {
    std::size_t cochains = 0;
    std::size_t illegal_rejected = 0;
    std::size_t isomorphisms = 0;
    std::size_t pairings = 0;
    std::vector<SuiteFailure> failures;
    bool ok() const { return failures.empty(); }
};
// Every family with every legal parameter for 2 <= n <= nmax, 0 <= k <= min(kmax, n/2),
// rings Z/m for m in moduli; generation and pairing checks where isomorphisms are asserted.
CocycleSuiteReport run_cocycle_suite(int nmax, int kmax, const std::vector<long>& moduli);

}  // namespace snres
