#pragma once

#include <array>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "snres/group_ring.hpp"
#include "snres/rewrite.hpp"

namespace snres {

// [g1|...|gt] in the normalized bar resolution; entries are never the identity.
struct BarSimplex {
    std::vector<Perm> entries;

    int dim() const { return static_cast<int>(entries.size()); }
    std::string str() const;  // "[s1|s1 s2|s3]" using normal-form words
    friend bool operator==(const BarSimplex&, const BarSimplex&) = default;
    friend bool operator<(const BarSimplex& a, const BarSimplex& b) { return a.entries < b.entries; }
};

struct BarSimplexHash {
    std::size_t operator()(const BarSimplex& s) const noexcept;
};

using BarChain = Chain<BarSimplex>;

enum class Classification { Essential, Collapsible, Redundant };

BarSimplex bar_from_words(const std::vector<Word>& entries, int n);
BarSimplex parse_bar_simplex(const std::string& text, int n);  // "[s1|s2 s1|s3]"

Classification classify_simplex(const BarSimplex& s);
std::string classification_name(Classification c);

struct Collapse {
    BarSimplex cell;  // the collapsible (t+1)-simplex c(tau)
    int face = 0;     // tau = d_face c(tau)
};
Collapse collapse_of(const BarSimplex& s);

// Alternating face sum in the normalized bar resolution.
BarChain bar_boundary(const BarSimplex& s, int n);

// Brown's retraction q onto the essential simplices, memoized per simplex.
class QRewriter {
public:
    explicit QRewriter(int n, bool fast_paths = false) : n_(n), fast_(fast_paths) {}
    const BarChain& q(const BarSimplex& s);
    BarChain q(const BarChain& x);
    BarChain boundary_q(const BarSimplex& essential);
    std::size_t memo_size() const { return memo_.size(); }
    int n() const { return n_; }

private:
    BarChain compute(const BarSimplex& s);

    int n_;
    bool fast_;
    std::unordered_map<BarSimplex, BarChain, BarSimplexHash> memo_;
    std::size_t depth_ = 0;
};

std::vector<BarSimplex> enumerate_essential(int n, int t);

// Rule types (0 = R1, 1 = R2, 2 = R3) of consecutive entries of an essential cell.
std::vector<int> essential_rule_types(const BarSimplex& s);
// Class number 0..8 of an essential 3-cell, ordered (R1,R1), (R1,R2), ..., (R3,R3).
int essential_class(const BarSimplex& s);

}  // namespace snres

namespace snres {

// Closed-form boundary of an essential 3-cell from the hand-written table of the
// nine classes. With corrected = false the table is used as printed; with
// corrected = true the entries listed in CHANGES-FROM-PAPER are applied.
BarChain formula_boundary(const BarSimplex& cell, int n, bool corrected);

struct CrosscheckEntry {
    BarSimplex cell;
    int cls = 0;
    bool match = false;
    std::string error;     // set when the formula references an invalid cell
    BarChain difference;   // q(formula) - boundary_q(cell)
};

struct CrosscheckReport {
    int n = 0;
    bool corrected = false;
    std::vector<CrosscheckEntry> entries;
    std::array<int, 9> cells{};
    std::array<int, 9> matches{};
    int classes_matching() const;  // classes with every cell matching
};

CrosscheckReport crosscheck_boundary_formulas(int n, bool corrected = false);

}  // namespace snres
