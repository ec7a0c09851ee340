#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "snres/perm.hpp"
#include "snres/rewrite.hpp"

namespace snres {

using Int = boost::multiprecision::cpp_int;

// Coefficient ring: modulus 0 means Z, otherwise Z/m with representatives 0..m-1.
struct RingSpec {
    long modulus = 0;
    static RingSpec Z() { return {0}; }
    static RingSpec Zmod(long m) { return {m}; }
    Int normalize(const Int& x) const;
    std::string name() const;
    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// Element of R[S_n]: terms sorted by one-line notation, no zero coefficients.
class GroupRingElem {
public:
    using Term = std::pair<Perm, Int>;

    GroupRingElem() = default;
    explicit GroupRingElem(int n, RingSpec ring = {}) : n_(n), ring_(ring) {}
    static GroupRingElem of(const Perm& g, const Int& c = 1, RingSpec ring = {});
    static GroupRingElem one(int n, RingSpec ring = {});
    static GroupRingElem word(const Word& w, int n, RingSpec ring = {});
    // sum of signed words, e.g. {{1, {}}, {-1, {1}}, {1, {2, 1}}} = 1 - s1 + s2 s1
    static GroupRingElem words(int n, const std::vector<std::pair<int, std::vector<int>>>& terms);

    int n() const { return n_; }
    const RingSpec& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int augmentation() const;
    Int coeff(const Perm& g) const;

    void add_term(const Perm& g, const Int& c);
    GroupRingElem& operator+=(const GroupRingElem& o);
    GroupRingElem& operator-=(const GroupRingElem& o);
    GroupRingElem& operator*=(const Int& c);
    GroupRingElem left_mul(const Perm& g) const;
    GroupRingElem right_mul(const Perm& g) const;
    GroupRingElem reduced(RingSpec ring) const;

    friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
    friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
    friend GroupRingElem operator-(GroupRingElem a) { return a *= -1; }
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator*(const Int& c, GroupRingElem a) { return a *= c; }
    friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;  // "1*[1,2,3] - 1*[2,1,3]"
    std::vector<std::string> term_strings() const;  // "coeff * [perm]"

private:
    void check(const GroupRingElem& o) const;
    void normalize();

    int n_ = 0;
    RingSpec ring_{};
    std::vector<Term> terms_;
};

// Finite formal combination of cells with group-ring coefficients: an element
// of a free R[G]-module with basis indexed by Cell.
template <class Cell>
class Chain {
public:
    Chain() = default;
    explicit Chain(int n) : n_(n) {}
    static Chain of(const Cell& c, const GroupRingElem& a) {
        Chain ch(a.n());
        ch.add(c, a);
        return ch;
    }
    static Chain of(const Cell& c, int n, const Int& k = 1) {
        return of(c, GroupRingElem::of(Perm(n), k));
    }

    int n() const { return n_; }
    const std::map<Cell, GroupRingElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Cell& c, const GroupRingElem& a) {
        if (a.is_zero()) return;
        if (n_ == 0) n_ = a.n();
        auto it = terms_.find(c);
        if (it == terms_.end()) {
            terms_.emplace(c, a);
        } else {
            it->second += a;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    Chain& operator+=(const Chain& o) {
        for (const auto& [c, a] : o.terms_) add(c, a);
        if (n_ == 0) n_ = o.n_;
        return *this;
    }
    Chain& operator-=(const Chain& o) {
        for (const auto& [c, a] : o.terms_) add(c, -a);
        if (n_ == 0) n_ = o.n_;
        return *this;
    }
    Chain& operator*=(const Int& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [c, a] : terms_) a *= k;
        return *this;
    }
    Chain left_mul(const GroupRingElem& g) const {
        Chain out(n_);
        for (const auto& [c, a] : terms_) out.add(c, g * a);
        return out;
    }
    Chain left_mul(const Perm& g) const {
        Chain out(n_);
        for (const auto& [c, a] : terms_) out.terms_.emplace(c, a.left_mul(g));
        return out;
    }

    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator-(Chain a) { return a *= -1; }
    friend Chain operator*(const GroupRingElem& g, const Chain& a) { return a.left_mul(g); }
    friend Chain operator*(const Perm& g, const Chain& a) { return a.left_mul(g); }
    friend bool operator==(const Chain& a, const Chain& b) { return a.terms_ == b.terms_; }

private:
    int n_ = 0;
    std::map<Cell, GroupRingElem> terms_;
};

// Apply a Cell-linear map given on basis cells, extended R[G]-linearly.
template <class Out, class In, class F>
Chain<Out> apply_linear(const Chain<In>& x, F&& f) {
    Chain<Out> out(x.n());
    for (const auto& [c, a] : x.terms()) out += f(c).left_mul(a);
    return out;
}

std::string to_string(const Int& x);

}  // namespace snres
