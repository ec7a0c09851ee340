#pragma once

#include <array>
#include <string>
#include <vector>

#include "snres/chain_maps.hpp"
#include "snres/homology.hpp"

namespace snres {

// Normalized bar complex of a finite permutation group with trivial integer
// coefficients; t-cells are tuples of non-identity elements, indexed in
// mixed radix with the first entry most significant.
class BarOracle {
public:
    explicit BarOracle(std::vector<Perm> group);

    const std::vector<Perm>& elements() const { return elems_; }  // identity excluded
    std::size_t cells(int t) const;
    std::size_t index(const std::vector<Perm>& simplex) const;  // throws on identity entries
    IntMatrix boundary(int t) const;                            // C_t -> C_{t-1}
    // Coinvariant boundary of a simplex with possibly trivial entries.
    std::vector<std::pair<std::size_t, Int>> boundary_terms(const std::vector<Perm>& simplex) const;
    AbelianGroupInfo homology(int t) const;

private:
    std::vector<Perm> elems_;
    std::unordered_map<Perm, std::size_t> pos_;
};

std::vector<Perm> symmetric_group(int n);
std::vector<Perm> generated_group(const std::vector<Perm>& generators);

// H_3(S_n; Z) from the essential-cell complex in degrees 0..4.
AbelianGroupInfo h3_via_q(int n, bool unsafe_large = false);
AbelianGroupInfo h3_via_bar(int n);

struct CertificateCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};
struct H3CertificateReport {
    int n = 0;
    std::vector<CertificateCheck> checks;
    bool ok() const;
};
// Chain-level certificates in P_*: null-homology witnesses, the generating list
// for ker of the coinvariant boundary in degree 3, and subscript independence.
H3CertificateReport h3_certificates(int n);

// Generators of ker(d_3) on the coinvariants of P_3 for S_n as coinvariant
// chains over the degree-3 cells; corrected = false gives the printed list.
std::vector<std::pair<std::string, std::vector<Int>>> xhomology_generators(int n, bool corrected = true);
std::vector<Int> coinvariant_vector(const PChain& x, const FreeComplex& p, int degree);

// D_8 = <r, s> inside S_4 with r = (1 2 3 4), s = (2 4); element r^a s^b.
struct D8 {
    static Perm r(int n = 4);
    static Perm s(int n = 4);
    static Perm element(int a, int b, int n = 4);
    static std::pair<int, int> decompose(const Perm& g);  // throws outside D_8; uses points 1..4
    static std::vector<Perm> elements();                 // a-major, identity first
};
// chi on a bar 3-simplex of D_8, values in Z/4.
int d8_chi(const Perm& g1, const Perm& g2, const Perm& g3);
// chi(s0) - chi(s1), chi(s2), -chi(s3), chi(s4) on the boundary of [g1|g2|g3|g4], in Z/4.
std::array<int, 4> d8_boundary_contributions(const Perm& g1, const Perm& g2, const Perm& g3, const Perm& g4);
// The four per-simplex contributions of chi on the boundary of [g1|g2|g3|g4],
// divided by the normalizer (-1)^{b1} a1 with a1 = 1, b1 = 0.
std::array<int, 4> d8_boundary_row(int a2, int b2, int a3, int b3, int a4, int b4 = 0);

struct D8Report {
    std::size_t tuples = 0;
    std::size_t coboundary_nonzero = 0;
    bool c_is_cycle = false;
    int chi_on_c = 0;
    AbelianGroupInfo h3;
    Int c_order = 0;  // order of [c] in H_3(D_8)
    bool has_order_four = false;
    bool ok() const;
};
D8Report d8_suite();

struct TransferReport {
    int n = 0;
    std::size_t cosets = 0;
    int value = 0;                       // in Z/4
    int identity_contribution = 0;
    std::array<std::size_t, 5> orbits{};  // number of orbits by size 1, 2, 4
    std::array<int, 5> by_orbit_size{};   // contributions mod 4 by orbit size
    bool size_four_orbits_vanish = false;
    bool ok() const { return value == 1 || value == 3; }
};
TransferReport transfer_check(int n = 6);

}  // namespace snres
