#include "stg/snf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace stg {

using boost::multiprecision::cpp_int;

long long AbelianInvariants::order() const {
    if (free_rank > 0) return -1;
    long long o = 1;
    for (long long d : factors) {
        if (o > (1LL << 62) / d) throw std::runtime_error("abelian order overflow");
        o *= d;
    }
    return o;
}

std::string AbelianInvariants::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) os << (i ? "," : "") << factors[i];
    os << ";rank=" << free_rank;
    return os.str();
}

AbelianInvariants invariants_from_cyclic(const std::vector<long long>& orders) {
    // repeated gcd/lcm merge into a divisibility chain
    std::vector<long long> cur;
    for (long long d : orders)
        if (d > 1) cur.push_back(d);
    bool changed = true;
    auto g = [](long long a, long long b) {
        while (b) {
            long long t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    while (changed) {
        changed = false;
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                long long gg = g(cur[i], cur[j]);
                if (cur[i] % cur[j] == 0 || cur[j] % cur[i] == 0) continue;
                long long l = cur[i] / gg * cur[j];
                cur[i] = gg;
                cur[j] = l;
                changed = true;
            }
    }
    std::vector<long long> f;
    for (long long d : cur)
        if (d > 1) f.push_back(d);
    std::sort(f.begin(), f.end());
    AbelianInvariants inv;
    inv.factors = f;
    return inv;
}

namespace {

template <typename I>
struct SnfWorker {
    std::vector<std::vector<I>> a;
    std::vector<std::vector<I>> left, right;
    int rows, cols;
    bool want;

    SnfWorker(const IMat& m, bool want_transforms) : want(want_transforms) {
        rows = static_cast<int>(m.size());
        cols = rows ? static_cast<int>(m[0].size()) : 0;
        a.assign(rows, std::vector<I>(cols, I(0)));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a[i][j] = I(m[i][j]);
        if (want) {
            left.assign(rows, std::vector<I>(rows, I(0)));
            right.assign(cols, std::vector<I>(cols, I(0)));
            for (int i = 0; i < rows; ++i) left[i][i] = I(1);
            for (int j = 0; j < cols; ++j) right[j][j] = I(1);
        }
    }

    static I iabs(const I& x) { return x < I(0) ? I(-1) * x : x; }

    void row_op(int dst, int src, const I& f) {  // row dst -= f * row src
        for (int j = 0; j < cols; ++j) a[dst][j] -= f * a[src][j];
        if (want)
            for (int j = 0; j < rows; ++j) left[dst][j] -= f * left[src][j];
    }
    void col_op(int dst, int src, const I& f) {
        for (int i = 0; i < rows; ++i) a[i][dst] -= f * a[i][src];
        if (want)
            for (int i = 0; i < cols; ++i) right[i][dst] -= f * right[i][src];
    }
    void row_swap(int x, int y) {
        std::swap(a[x], a[y]);
        if (want) std::swap(left[x], left[y]);
    }
    void col_swap(int x, int y) {
        for (int i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
        if (want)
            for (int i = 0; i < cols; ++i) std::swap(right[i][x], right[i][y]);
    }
    void row_negate(int x) {
        for (int j = 0; j < cols; ++j) a[x][j] = I(-1) * a[x][j];
        if (want)
            for (int j = 0; j < rows; ++j) left[x][j] = I(-1) * left[x][j];
    }

    std::vector<I> run() {
        int k = 0;
        int n = std::min(rows, cols);
        while (k < n) {
            // find a nonzero pivot of least absolute value in the k.. block
            int pi = -1, pj = -1;
            for (int i = k; i < rows; ++i)
                for (int j = k; j < cols; ++j)
                    if (a[i][j] != I(0) &&
                        (pi < 0 || iabs(a[i][j]) < iabs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;
            row_swap(k, pi);
            col_swap(k, pj);
            if (a[k][k] < I(0)) row_negate(k);
            bool dirty = false;
            for (int i = k + 1; i < rows; ++i) {
                if (a[i][k] == I(0)) continue;
                I f = a[i][k] / a[k][k];
                if (f != I(0)) row_op(i, k, f);
                if (a[i][k] != I(0)) dirty = true;
            }
            for (int j = k + 1; j < cols; ++j) {
                if (a[k][j] == I(0)) continue;
                I f = a[k][j] / a[k][k];
                if (f != I(0)) col_op(j, k, f);
                if (a[k][j] != I(0)) dirty = true;
            }
            if (dirty) continue;  // remainders left; rerun pivot selection
            // divisibility: pivot must divide every entry of the trailing block
            bool fixed = false;
            for (int i = k + 1; i < rows && !fixed; ++i)
                for (int j = k + 1; j < cols && !fixed; ++j)
                    if (a[i][j] % a[k][k] != I(0)) {
                        row_op(k, i, I(-1));  // add row i to row k
                        fixed = true;
                    }
            if (fixed) continue;
            ++k;
        }
        std::vector<I> diag;
        for (int i = 0; i < n; ++i)
            if (a[i][i] != I(0)) diag.push_back(a[i][i]);
        return diag;
    }
};

bool fits64(const cpp_int& x) { return x >= INT64_MIN && x <= INT64_MAX; }

struct Overflow64 {};

// checked 64-bit integer for the fast path
struct C64 {
    long long v = 0;
    C64() = default;
    C64(long long x) : v(x) {}
    C64 operator*(const C64& o) const {
        long long r;
        if (__builtin_mul_overflow(v, o.v, &r)) throw Overflow64{};
        return r;
    }
    C64& operator-=(const C64& o) {
        if (__builtin_sub_overflow(v, o.v, &v)) throw Overflow64{};
        return *this;
    }
    C64 operator/(const C64& o) const { return v / o.v; }
    C64 operator%(const C64& o) const { return v % o.v; }
    bool operator==(const C64& o) const { return v == o.v; }
    bool operator!=(const C64& o) const { return v != o.v; }
    bool operator<(const C64& o) const { return v < o.v; }
};
C64 operator-(C64 a, C64 b) {
    a -= b;
    return a;
}

}  // namespace

SnfResult smith_normal_form(const IMat& m, bool want_transforms) {
    SnfResult res;
    auto finish = [&](auto& worker, auto diag) {
        for (auto& d : diag) {
            cpp_int v;
            if constexpr (std::is_same_v<std::decay_t<decltype(d)>, cpp_int>)
                v = d;
            else
                v = d.v;
            res.diagonal.push_back(v);
            if (v > 1) {
                if (fits64(v))
                    res.invariants.factors.push_back(static_cast<long long>(v));
                else
                    res.invariants_exact = false;
            }
        }
        int rows = static_cast<int>(m.size());
        int cols = rows ? static_cast<int>(m[0].size()) : 0;
        (void)rows;
        res.invariants.free_rank = cols - static_cast<long long>(res.diagonal.size());
        if (want_transforms) {
            res.left.assign(worker.left.size(), {});
            for (size_t i = 0; i < worker.left.size(); ++i)
                for (auto& x : worker.left[i]) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, cpp_int>)
                        res.left[i].push_back(x);
                    else
                        res.left[i].push_back(cpp_int(x.v));
                }
            res.right.assign(worker.right.size(), {});
            for (size_t i = 0; i < worker.right.size(); ++i)
                for (auto& x : worker.right[i]) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, cpp_int>)
                        res.right[i].push_back(x);
                    else
                        res.right[i].push_back(cpp_int(x.v));
                }
            res.transforms_valid = true;
        }
    };
    try {
        SnfWorker<C64> w(m, want_transforms);
        auto diag = w.run();
        finish(w, diag);
        return res;
    } catch (const Overflow64&) {
        res = SnfResult{};
        SnfWorker<cpp_int> w(m, want_transforms);
        auto diag = w.run();
        finish(w, diag);
        return res;
    }
}

AbelianInvariants cokernel_invariants(const IMat& m, int cols) {
    if (m.empty()) {
        AbelianInvariants inv;
        inv.free_rank = cols;
        return inv;
    }
    for (const auto& r : m)
        if (static_cast<int>(r.size()) != cols) throw std::runtime_error("cokernel: ragged matrix");
    auto res = smith_normal_form(m);
    if (!res.invariants_exact) throw std::runtime_error("cokernel: invariant factor exceeds 64 bits");
    return res.invariants;
}

}  // namespace stg
