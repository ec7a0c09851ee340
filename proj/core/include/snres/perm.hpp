#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace snres {

// Permutation of {1..n}, n <= 16, stored as packed one-line notation.
// Position p (0-based) occupies the nibble at bit 60 - 4p, so comparing the
// packed words compares one-line notations lexicographically.
class Perm {
public:
    static constexpr int kMaxN = 16;

    Perm() = default;
    explicit Perm(int n);
    static Perm from_images(const std::vector<int>& one_based);
    static Perm transposition(int n, int i);  // s_i = (i i+1), 1 <= i < n
    static Perm cycle_up(int n, int i, int j);  // product s_i s_{i+1} ... s_{j-1}

    int n() const { return n_; }
    int at0(int p) const { return static_cast<int>((code_ >> shift(p)) & 0xF); }
    int operator()(int x) const { return at0(x - 1) + 1; }  // 1-based image
    std::vector<int> images() const;
    Perm inverse() const;
    bool is_identity() const;
    std::uint64_t code() const { return code_; }
    std::string str() const;  // "[2,1,3]"

    // (a*b)(x) = a(b(x))
    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm& a, const Perm& b) { return a.code_ == b.code_ && a.n_ == b.n_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.code_ < b.code_;
    }

private:
    static int shift(int p) { return 60 - 4 * p; }
    void set0(int p, int v);

    std::uint64_t code_ = 0;
    std::uint8_t n_ = 0;
};

Perm parse_perm(const std::string& text);
std::vector<Perm> all_perms(int n);

}  // namespace snres

template <>
struct std::hash<snres::Perm> {
    std::size_t operator()(const snres::Perm& p) const noexcept {
        return std::hash<std::uint64_t>{}(p.code() * 0x9E3779B97F4A7C15ULL + p.n());
    }
};
