#include "snres/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace snres {

Perm::Perm(int n) : n_(static_cast<std::uint8_t>(n)) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("Perm: n out of range");
    for (int p = 0; p < n; ++p) set0(p, p);
}

void Perm::set0(int p, int v) {
    code_ &= ~(std::uint64_t{0xF} << shift(p));
    code_ |= static_cast<std::uint64_t>(v) << shift(p);
}

Perm Perm::from_images(const std::vector<int>& one_based) {
    const int n = static_cast<int>(one_based.size());
    Perm r(n);
    std::vector<bool> seen(n, false);
    for (int p = 0; p < n; ++p) {
        const int v = one_based[p];
        if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("Perm: not a bijection");
        seen[v - 1] = true;
        r.set0(p, v - 1);
    }
    return r;
}

Perm Perm::transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("Perm: generator index out of range");
    Perm r(n);
    r.set0(i - 1, i);
    r.set0(i, i - 1);
    return r;
}

Perm Perm::cycle_up(int n, int i, int j) {
    Perm r(n);
    for (int l = i; l < j; ++l) r = r * transposition(n, l);
    return r;
}

std::vector<int> Perm::images() const {
    std::vector<int> v(n_);
    for (int p = 0; p < n_; ++p) v[p] = at0(p) + 1;
    return v;
}

Perm Perm::inverse() const {
    Perm r(n_);
    for (int p = 0; p < n_; ++p) r.set0(at0(p), p);
    return r;
}

bool Perm::is_identity() const { return *this == Perm(n_); }

std::string Perm::str() const {
    std::ostringstream os;
    os << '[';
    for (int p = 0; p < n_; ++p) os << (p ? "," : "") << at0(p) + 1;
    os << ']';
    return os.str();
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Perm: size mismatch");
    Perm r;
    r.n_ = a.n_;
    for (int p = 0; p < a.n_; ++p) r.set0(p, a.at0(b.at0(p)));
    return r;
}

Perm parse_perm(const std::string& text) {
    std::vector<int> v;
    std::string digits;
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits += ch;
        } else if (!digits.empty()) {
            v.push_back(std::stoi(digits));
            digits.clear();
        }
    }
    if (!digits.empty()) v.push_back(std::stoi(digits));
    if (v.empty()) throw std::invalid_argument("cannot parse permutation: " + text);
    return Perm::from_images(v);
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_images(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace snres
