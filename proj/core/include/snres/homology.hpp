#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "snres/group_ring.hpp"
#include "snres/snf.hpp"

namespace snres {

// Coefficient module over R with a permutation basis: trivial, the k-subset
// module M^k, or an explicit action table.
struct CoefficientModule {
    enum class Kind { Trivial, Permutation, External };

    Kind kind = Kind::Trivial;
    RingSpec ring;
    int n = 0;
    int k = 0;
    std::vector<std::string> basis;
    std::vector<std::uint32_t> subsets;  // bit x-1 set when x is in the subset
    std::unordered_map<Perm, std::vector<std::size_t>> table;

    static CoefficientModule trivial(int n, RingSpec ring = {});
    static CoefficientModule permutation(int n, int k, RingSpec ring = {});
    static CoefficientModule external(int n, std::vector<std::string> basis,
                                      std::unordered_map<Perm, std::vector<std::size_t>> table,
                                      RingSpec ring = {});
    // "trivial", "perm:2"
    static CoefficientModule parse(const std::string& descriptor, int n, RingSpec ring = {});

    std::size_t rank() const { return basis.size(); }
    std::size_t act(const Perm& g, std::size_t m) const;
    std::size_t subset_index(std::uint32_t mask) const;
    std::string descriptor() const;
};

std::string subset_name(std::uint32_t mask);  // "{1,3}"

// Finitely generated free Z[G]-complex, G a subgroup of S_n; boundary[k][c]
// lists (cell index in degree k-1, coefficient) for k >= 1.
struct FreeComplex {
    int n = 0;
    std::string group;
    std::vector<std::vector<std::string>> cells;
    std::vector<std::vector<std::vector<std::pair<std::size_t, GroupRingElem>>>> boundary;

    int top() const { return static_cast<int>(cells.size()) - 1; }
    std::size_t rank(int k) const { return cells.at(static_cast<std::size_t>(k)).size(); }
    std::size_t index_of(int k, const std::string& name) const;
};

FreeComplex p_complex(int n);
FreeComplex q_complex(int n, int top);
FreeComplex product_complex(int a, int b);
// Tensor product of two periodic resolutions of Z/2, generated by the given
// involutions, in degrees 0..top.
FreeComplex klein_complex(int n, const Perm& g1, const Perm& g2, int top);

// C_k = X_k (x)_G M with basis (cell, module basis element) at cell * rank(M) + m.
// Entry k is the boundary C_k -> C_{k-1}; entry 0 maps onto the zero module.
IntMatrix coinvariant_matrix(const FreeComplex& x, const CoefficientModule& m, int k);
std::vector<IntMatrix> coinvariants_complex(const FreeComplex& x, const CoefficientModule& m);
// Entry k is the coboundary Hom_G(X_k, M) -> Hom_G(X_{k+1}, M), k = 0..top-1.
IntMatrix hom_matrix(const FreeComplex& x, const CoefficientModule& m, int k);
std::vector<IntMatrix> hom_complex(const FreeComplex& x, const CoefficientModule& m);

// ker(out) / im(in) at a free group of rank dim. With modulus m > 0 this is the
// homology of the complex reduced mod m, realized by appending m-identity blocks.
AbelianGroupInfo subquotient(const IntMatrix& in, const IntMatrix& out, std::size_t dim, long modulus = 0);
// Same group further divided by the classes of the given cycles (integer lifts).
AbelianGroupInfo subquotient_mod_cycles(const IntMatrix& in, const IntMatrix& out, std::size_t dim,
                                        const std::vector<std::vector<Int>>& cycles, long modulus = 0);
// Order of the subgroup generated by the cycles; 0 when the group is infinite.
Int generated_order(const IntMatrix& in, const IntMatrix& out, std::size_t dim,
                    const std::vector<std::vector<Int>>& cycles, long modulus = 0);

AbelianGroupInfo homology(const FreeComplex& x, const CoefficientModule& m, int k);
AbelianGroupInfo cohomology(const FreeComplex& x, const CoefficientModule& m, int k);

// Integer homology classes with explicit generators, via dense Smith forms.
class HomologyClasses {
public:
    HomologyClasses(const IntMatrix& in, const IntMatrix& out, std::size_t dim);

    const AbelianGroupInfo& group() const { return group_; }
    const std::vector<std::vector<Int>>& generators() const { return generators_; }
    const std::vector<Int>& orders() const { return orders_; }  // 0 for free generators
    bool is_cycle(const std::vector<Int>& z) const;
    // Coordinates in the generator basis, torsion entries reduced; nullopt off cycles.
    std::optional<std::vector<Int>> coordinates(const std::vector<Int>& z) const;
    // Replace generators by basis cycles in the given order when that yields a
    // basis (elementary abelian or cyclic groups); returns true on success.
    bool prefer_basis_cycles(const std::vector<std::size_t>& order);

private:
    IntMatrix out_;
    std::size_t dim_ = 0;
    DenseMatrix zleft_;   // left inverse of the kernel basis, rows = kernel rank
    DenseMatrix uprime_;  // Smith transform of the boundary lattice in kernel coordinates
    std::vector<std::size_t> gen_rows_;
    DenseMatrix rebase_;  // applied to coordinates after prefer_basis_cycles
    AbelianGroupInfo group_;
    std::vector<std::vector<Int>> generators_;
    std::vector<Int> orders_;
};

struct HomologyReport {
    std::string group;
    std::string module;
    RingSpec ring;
    int degree = 0;
    bool cohomology = false;
    AbelianGroupInfo info;
    std::vector<std::string> representatives;  // formatted chains
};

// Full report, with representatives for integer homology when the matrices are small.
HomologyReport compute_homology(const FreeComplex& x, const CoefficientModule& m, int k, bool cohomology,
                                bool representatives = true);
std::string format_chain(const FreeComplex& x, const CoefficientModule& m, int k, const std::vector<Int>& v);

}  // namespace snres
