#include "snres/group_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace snres {

std::string to_string(const Int& x) { return x.str(); }

Int RingSpec::normalize(const Int& x) const {
    if (modulus == 0) return x;
    Int r = x % modulus;
    if (r < 0) r += modulus;
    return r;
}

std::string RingSpec::name() const {
    return modulus == 0 ? std::string("Z") : "Z/" + std::to_string(modulus);
}

GroupRingElem GroupRingElem::of(const Perm& g, const Int& c, RingSpec ring) {
    GroupRingElem a(g.n(), ring);
    a.add_term(g, c);
    return a;
}

GroupRingElem GroupRingElem::one(int n, RingSpec ring) { return of(Perm(n), 1, ring); }

GroupRingElem GroupRingElem::word(const Word& w, int n, RingSpec ring) {
    return of(word_to_perm(w, n), 1, ring);
}

GroupRingElem GroupRingElem::words(int n, const std::vector<std::pair<int, std::vector<int>>>& terms) {
    GroupRingElem a(n);
    for (const auto& [c, idx] : terms) a.add_term(word_to_perm(positive_word(idx), n), c);
    return a;
}

Int GroupRingElem::augmentation() const {
    Int s = 0;
    for (const auto& t : terms_) s += t.second;
    return ring_.normalize(s);
}

Int GroupRingElem::coeff(const Perm& g) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                               [](const Term& t, const Perm& p) { return t.first < p; });
    return (it != terms_.end() && it->first == g) ? it->second : Int(0);
}

void GroupRingElem::check(const GroupRingElem& o) const {
    if (!(ring_ == o.ring_)) throw std::invalid_argument("group ring: ring mismatch");
    if (n_ != 0 && o.n_ != 0 && n_ != o.n_) throw std::invalid_argument("group ring: arity mismatch");
}

void GroupRingElem::add_term(const Perm& g, const Int& c) {
    if (n_ == 0) n_ = g.n();
    if (g.n() != n_) throw std::invalid_argument("group ring: arity mismatch");
    const Int v = ring_.normalize(c);
    if (v == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                               [](const Term& t, const Perm& p) { return t.first < p; });
    if (it != terms_.end() && it->first == g) {
        it->second = ring_.normalize(it->second + v);
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {g, v});
    }
}

void GroupRingElem::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
    }
    terms_.clear();
    for (auto& t : out) {
        t.second = ring_.normalize(t.second);
        if (t.second != 0) terms_.push_back(std::move(t));
    }
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
    check(o);
    if (n_ == 0) n_ = o.n_;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Int s = ring_.normalize(a->second + b->second);
            if (s != 0) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) { return *this += -GroupRingElem(o); }

GroupRingElem& GroupRingElem::operator*=(const Int& c) {
    for (auto& t : terms_) t.second = ring_.normalize(t.second * c);
    std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
    return *this;
}

GroupRingElem GroupRingElem::left_mul(const Perm& g) const {
    GroupRingElem r(n_, ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(g * t.first, t.second);
    r.normalize();
    return r;
}

GroupRingElem GroupRingElem::right_mul(const Perm& g) const {
    GroupRingElem r(n_, ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first * g, t.second);
    r.normalize();
    return r;
}

GroupRingElem GroupRingElem::reduced(RingSpec ring) const {
    GroupRingElem r(n_, ring);
    r.terms_ = terms_;
    r.normalize();
    return r;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    a.check(b);
    GroupRingElem r(a.n_ ? a.n_ : b.n_, a.ring_);
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) r.terms_.emplace_back(x.first * y.first, x.second * y.second);
    r.normalize();
    return r;
}

std::vector<std::string> GroupRingElem::term_strings() const {
    std::vector<std::string> out;
    for (const auto& [g, c] : terms_) out.push_back(c.str() + " * " + g.str());
    return out;
}

std::string GroupRingElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (first)
            os << c << "*" << g.str();
        else if (c < 0)
            os << " - " << Int(-c) << "*" << g.str();
        else
            os << " + " << c << "*" << g.str();
        first = false;
    }
    return os.str();
}

}  // namespace snres
