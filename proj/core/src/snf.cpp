#include "snres/snf.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

namespace snres {

void IntMatrix::add(std::size_t r, std::size_t c, const Int& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::add");
    if (v != 0) col_[c].emplace_back(r, v);
}

void IntMatrix::append_column(std::vector<std::pair<std::size_t, Int>> entries) {
    col_.push_back(std::move(entries));
    ++cols_;
}

void IntMatrix::finalize() {
    for (auto& c : col_) {
        std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<std::size_t, Int>> out;
        for (auto& e : c) {
            if (!out.empty() && out.back().first == e.first)
                out.back().second += e.second;
            else
                out.push_back(std::move(e));
        }
        std::erase_if(out, [](const auto& e) { return e.second == 0; });
        c = std::move(out);
    }
}

std::size_t IntMatrix::nnz() const {
    std::size_t s = 0;
    for (const auto& c : col_) s += c.size();
    return s;
}

Int IntMatrix::at(std::size_t r, std::size_t c) const {
    Int s = 0;
    for (const auto& [row, v] : col_[c])
        if (row == r) s += v;
    return s;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (const auto& [r, v] : col_[c]) t.col_[r].emplace_back(c, v);
    t.finalize();
    return t;
}

IntMatrix IntMatrix::multiply(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix::multiply: shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t c = 0; c < o.cols_; ++c)
        for (const auto& [k, v] : o.col_[c])
            for (const auto& [r, w] : col_[k]) out.col_[c].emplace_back(r, v * w);
    out.finalize();
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& c : col_)
        for (const auto& e : c)
            if (e.second != 0) return false;
    return true;
}

std::string AbelianGroupInfo::str() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const Int& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Int AbelianGroupInfo::torsion_order() const {
    Int o = 1;
    for (const Int& d : torsion) o *= d;
    return o;
}

std::vector<Int> invariant_factors_from_diagonal(const std::vector<Int>& diag) {
    // pairwise (gcd, lcm) exchange until every entry divides the next
    std::vector<Int> d;
    for (Int x : diag) {
        if (x == 0) throw std::invalid_argument("invariant_factors_from_diagonal: zero entry");
        d.push_back(x < 0 ? Int(-x) : x);
    }
    std::vector<Int> nonunit;
    std::size_t ones = 0;
    for (auto& x : d) {
        if (x == 1)
            ++ones;
        else
            nonunit.push_back(x);
    }
    for (std::size_t i = 0; i < nonunit.size(); ++i)
        for (std::size_t j = i + 1; j < nonunit.size(); ++j) {
            const Int g = gcd(nonunit[i], nonunit[j]);
            if (g == nonunit[i]) continue;
            const Int l = nonunit[i] / g * nonunit[j];
            nonunit[i] = g;
            nonunit[j] = l;
        }
    std::vector<Int> out(ones, 1);
    for (auto& x : nonunit) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

AbelianGroupInfo group_from_factors(std::size_t free_rank, const std::vector<Int>& factors) {
    AbelianGroupInfo g;
    g.free_rank = free_rank;
    for (const Int& d : invariant_factors_from_diagonal(factors))
        if (d > 1) g.torsion.push_back(d);
    return g;
}

namespace {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline Int checked_mul(const Int& a, const Int& b) { return a * b; }
inline Int checked_sub(const Int& a, const Int& b) { return a - b; }

inline std::int64_t abs_of(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
}
inline Int abs_of(const Int& a) { return a < 0 ? Int(-a) : a; }

template <class T>
T floor_div(const T& a, const T& b) {
    T q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

// Quotient that leaves the remainder of least absolute value.
template <class T>
T nearest_div(const T& a, const T& b) {
    T q = floor_div(a, b);
    T r = checked_sub(a, checked_mul(q, b));
    T ab = abs_of(b);
    if (checked_mul(r, T(2)) > ab) q += (b > 0 ? 1 : -1);
    return q;
}

inline Int to_int(std::int64_t v) { return Int(v); }
inline Int to_int(const Int& v) { return v; }

template <class T>
T from_int(const Int& v);
template <>
std::int64_t from_int<std::int64_t>(const Int& v) {
    if (v > Int(INT64_MAX) || v < Int(INT64_MIN + 1)) throw Overflow{};
    return static_cast<std::int64_t>(v);
}
template <>
Int from_int<Int>(const Int& v) {
    return v;
}

template <class T>
class Eliminator {
public:
    struct Entry {
        std::uint32_t pos;
        T val;
    };
    using Line = std::vector<Entry>;

    explicit Eliminator(const IntMatrix& m) : positions_(m.rows()) {
        lines_.resize(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            for (const auto& [r, v] : m.column(c))
                if (v != 0) lines_[c].push_back({static_cast<std::uint32_t>(r), from_int<T>(v)});
            std::sort(lines_[c].begin(), lines_[c].end(),
                      [](const Entry& a, const Entry& b) { return a.pos < b.pos; });
        }
        pos_lines_.resize(positions_);
        active_.assign(lines_.size(), true);
        for (std::uint32_t l = 0; l < lines_.size(); ++l) {
            for (const Entry& e : lines_[l]) pos_lines_[e.pos].push_back(l);
            if (!lines_[l].empty()) by_size_.insert({lines_[l].size(), l});
        }
    }

    SmithResult run() {
        SmithResult res;
        std::vector<Int> diag;
        while (!by_size_.empty()) {
            auto [line, pos] = choose_pivot();
            diag.push_back(to_int(abs_of(settle(line, pos))));
        }
        res.rank = diag.size();
        res.invariant_factors.clear();
        for (const Int& d : invariant_factors_from_diagonal(diag))
            if (d > 1) res.invariant_factors.push_back(d);
        return res;
    }

private:
    const Entry* find(std::uint32_t l, std::uint32_t pos) const {
        const Line& ln = lines_[l];
        auto it = std::lower_bound(ln.begin(), ln.end(), pos,
                                   [](const Entry& e, std::uint32_t p) { return e.pos < p; });
        return (it != ln.end() && it->pos == pos) ? &*it : nullptr;
    }

    void resize_line(std::uint32_t l, std::size_t old_size) {
        by_size_.erase({old_size, l});
        if (!lines_[l].empty()) by_size_.insert({lines_[l].size(), l});
    }

    // lines[q] -= t * lines[p]
    void axpy(std::uint32_t q, const T& t, std::uint32_t p) {
        const Line& a = lines_[q];
        const Line& b = lines_[p];
        const std::size_t old = a.size();
        Line out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].pos < b[j].pos)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].pos < a[i].pos) {
                T v = checked_sub(T(0), checked_mul(t, b[j].val));
                pos_lines_[b[j].pos].push_back(q);
                out.push_back({b[j].pos, v});
                ++j;
            } else {
                T v = checked_sub(a[i].val, checked_mul(t, b[j].val));
                if (v != 0) out.push_back({a[i].pos, v});
                ++i;
                ++j;
            }
        }
        lines_[q] = std::move(out);
        resize_line(q, old);
    }

    std::vector<std::uint32_t> lines_at(std::uint32_t pos) {
        auto& v = pos_lines_[pos];
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::erase_if(v, [&](std::uint32_t l) { return !active_[l] || !find(l, pos); });
        return v;
    }

    std::pair<std::uint32_t, std::uint32_t> choose_pivot() {
        std::size_t best_cost = SIZE_MAX;
        std::pair<std::uint32_t, std::uint32_t> best{0, 0};
        int candidates = 0;
        for (const auto& [sz, l] : by_size_) {
            bool had_unit = false;
            for (const Entry& e : lines_[l]) {
                if (e.val != 1 && e.val != -1) continue;
                had_unit = true;
                const std::size_t cost = (sz - 1) * (pos_lines_[e.pos].size());
                if (cost < best_cost) {
                    best_cost = cost;
                    best = {l, e.pos};
                }
            }
            if (had_unit && (++candidates >= 8 || best_cost == 0)) break;
        }
        if (best_cost != SIZE_MAX) return best;
        // no unit entry: take the entry of least absolute value
        T best_abs{};
        bool have = false;
        for (const auto& [sz, l] : by_size_)
            for (const Entry& e : lines_[l]) {
                T a = abs_of(e.val);
                if (!have || a < best_abs) {
                    best_abs = a;
                    best = {l, e.pos};
                    have = true;
                }
            }
        return best;
    }

    // Reduce until (line, pos) is the only entry in its line and position, then retire both.
    T settle(std::uint32_t line, std::uint32_t pos) {
        while (true) {
            T v = find(line, pos)->val;
            bool remainder = false;
            std::uint32_t smallest = line;
            T smallest_abs = abs_of(v);
            for (std::uint32_t q : lines_at(pos)) {
                if (q == line) continue;
                const T a = find(q, pos)->val;
                const T t = (v == 1 || v == -1) ? checked_mul(a, v) : nearest_div(a, v);
                if (t != 0) axpy(q, t, line);
                if (const Entry* e = find(q, pos)) {
                    remainder = true;
                    if (abs_of(e->val) < smallest_abs) {
                        smallest_abs = abs_of(e->val);
                        smallest = q;
                    }
                }
            }
            if (remainder) {
                line = smallest;
                continue;
            }
            // position ops: only `line` meets `pos`, so they touch this line alone
            Line& ln = lines_[line];
            const std::size_t old = ln.size();
            Line kept;
            std::uint32_t next_pos = pos;
            T next_abs = abs_of(v);
            for (const Entry& e : ln) {
                if (e.pos == pos) {
                    kept.push_back(e);
                    continue;
                }
                T r = (v == 1 || v == -1) ? T(0) : checked_sub(e.val, checked_mul(nearest_div(e.val, v), v));
                if (r != 0) {
                    kept.push_back({e.pos, r});
                    if (abs_of(r) < next_abs) {
                        next_abs = abs_of(r);
                        next_pos = e.pos;
                    }
                }
            }
            ln = std::move(kept);
            resize_line(line, old);
            if (ln.size() > 1) {
                pos = next_pos;
                continue;
            }
            by_size_.erase({ln.size(), line});
            active_[line] = false;
            ln.clear();
            return v;
        }
    }

    std::size_t positions_;
    std::vector<Line> lines_;
    std::vector<std::vector<std::uint32_t>> pos_lines_;
    std::vector<bool> active_;
    std::set<std::pair<std::size_t, std::uint32_t>> by_size_;
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    try {
        return Eliminator<std::int64_t>(m).run();
    } catch (const Overflow&) {
        return Eliminator<Int>(m).run();
    }
}

DenseMatrix to_dense(const IntMatrix& m) {
    DenseMatrix d(m.rows(), std::vector<Int>(m.cols(), 0));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) d[r][c] += v;
    return d;
}

DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    DenseMatrix out(n, std::vector<Int>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[t][j] != 0) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

namespace {

DenseMatrix identity(std::size_t n) {
    DenseMatrix I(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

}  // namespace

DenseSmith dense_smith(const DenseMatrix& a, std::size_t rows, std::size_t cols) {
    DenseSmith s;
    s.D = a;
    if (s.D.empty()) s.D.assign(rows, std::vector<Int>(cols, 0));
    s.U = identity(rows);
    s.Uinv = identity(rows);
    s.V = identity(cols);
    DenseMatrix& D = s.D;

    // row i -= t*row j  (U row op, Uinv column op col j += t*col i)
    auto row_axpy = [&](std::size_t i, std::size_t j, const Int& t) {
        if (t == 0) return;
        for (std::size_t c = 0; c < cols; ++c) D[i][c] -= t * D[j][c];
        for (std::size_t c = 0; c < rows; ++c) s.U[i][c] -= t * s.U[j][c];
        for (std::size_t r = 0; r < rows; ++r) s.Uinv[r][j] += t * s.Uinv[r][i];
    };
    auto col_axpy = [&](std::size_t i, std::size_t j, const Int& t) {
        if (t == 0) return;
        for (std::size_t r = 0; r < rows; ++r) D[r][i] -= t * D[r][j];
        for (std::size_t r = 0; r < cols; ++r) s.V[r][i] -= t * s.V[r][j];
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(D[i], D[j]);
        std::swap(s.U[i], s.U[j]);
        for (std::size_t r = 0; r < rows; ++r) std::swap(s.Uinv[r][i], s.Uinv[r][j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(D[r][i], D[r][j]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(s.V[r][i], s.V[r][j]);
    };
    auto row_neg = [&](std::size_t i) {
        for (auto& x : D[i]) x = -x;
        for (auto& x : s.U[i]) x = -x;
        for (std::size_t r = 0; r < rows; ++r) s.Uinv[r][i] = -s.Uinv[r][i];
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero |entry| in the remaining block
        bool found = false;
        std::size_t pr = 0, pc = 0;
        Int best = 0;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c)
                if (D[r][c] != 0 && (!found || abs(D[r][c]) < best)) {
                    best = abs(D[r][c]);
                    pr = r;
                    pc = c;
                    found = true;
                }
        if (!found) break;
        row_swap(t, pr);
        col_swap(t, pc);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (D[r][t] == 0) continue;
                row_axpy(r, t, floor_div(D[r][t], D[t][t]));
                if (D[r][t] != 0) {
                    row_swap(t, r);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (D[t][c] == 0) continue;
                col_axpy(c, t, floor_div(D[t][c], D[t][t]));
                if (D[t][c] != 0) {
                    col_swap(t, c);
                    clean = false;
                }
            }
            if (!clean) continue;
            // enforce divisibility of the remaining block
            for (std::size_t r = t + 1; r < rows && clean; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (D[r][c] % D[t][t] != 0) {
                        row_axpy(t, r, -1);
                        clean = false;
                        break;
                    }
        }
        if (D[t][t] < 0) row_neg(t);
        s.diag.push_back(D[t][t]);
        ++t;
    }
    s.rank = t;
    return s;
}

}  // namespace snres
