#pragma once

#include <string>
#include <vector>

#include "snres/group_ring.hpp"
#include "snres/snf.hpp"

namespace snres {

enum class PKind { Base, E, C, B, D, C31, C32, C33, C34, C35, C36, C37 };

struct PCell {
    PKind kind = PKind::Base;
    int i = 0, j = 0, k = 0;

    int dim() const;
    std::string name() const;  // "*", "e1", "d1,3", "c34_2,5", "c33_1,3,5"
    friend bool operator==(const PCell&, const PCell&) = default;
    friend auto operator<=>(const PCell&, const PCell&) = default;
};

using PChain = Chain<PCell>;

PCell parse_pcell(const std::string& text);
bool is_valid_pcell(const PCell& c, int n);
std::vector<PCell> enumerate_p_cells(int n, int dim);
PChain boundary_p(const PCell& c, int n);
PChain boundary_p(const PChain& x);

// Constructors for the cells, checked against n when used in a boundary.
inline PCell pbase() { return {PKind::Base}; }
inline PCell pe(int i) { return {PKind::E, i}; }
inline PCell pc(int i) { return {PKind::C, i}; }
inline PCell pb(int i) { return {PKind::B, i}; }
inline PCell pd(int i, int j) { return {PKind::D, i, j}; }
inline PCell c31(int i) { return {PKind::C31, i}; }
inline PCell c32(int i, int j) { return {PKind::C32, i, j}; }
inline PCell c33(int i, int j, int k) { return {PKind::C33, i, j, k}; }
inline PCell c34(int i, int j) { return {PKind::C34, i, j}; }
inline PCell c35(int i) { return {PKind::C35, i}; }
inline PCell c36(int i) { return {PKind::C36, i}; }
inline PCell c37(int i) { return {PKind::C37, i}; }

struct PCheckFailure {
    PCell cell;
    PChain residual;
};

// Cells whose boundary of boundary is nonzero, with the residual.
std::vector<PCheckFailure> check_d_squared(int n);

// P_* expanded over Z: basis (permutation, cell), permutations in canonical order.
// matrix(k) is the boundary P_k -> P_{k-1}; matrix(0) is the augmentation P_0 -> Z.
struct ExpandedComplex {
    int n = 0;
    std::vector<Perm> group;
    std::vector<std::vector<PCell>> cells;  // per dimension 0..3
    IntMatrix matrix(int k) const;
};
ExpandedComplex expand_p(int n);

struct ExactnessReport {
    bool d2_zero = true;
    std::vector<AbelianGroupInfo> reduced_homology;  // degrees 0, 1, 2
    bool exact() const;
};
ExactnessReport verify_p_exactness(int n);

}  // namespace snres
