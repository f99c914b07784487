#include "stg/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stg {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

long long igcd(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Exact rational with overflow guards; all uses here keep values tiny.
struct Frac {
    long long n = 0, d = 1;
    Frac() = default;
    Frac(long long v) : n(v), d(1) {}
    Frac(long long nn, long long dd) : n(nn), d(dd) { norm(); }
    void norm() {
        if (d == 0) fail("rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = igcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
    }
    static long long mul_ll(long long a, long long b) {
        __int128 p = static_cast<__int128>(a) * b;
        if (p > INT64_MAX || p < INT64_MIN) fail("rational overflow");
        return static_cast<long long>(p);
    }
    Frac operator+(const Frac& o) const { return Frac(mul_ll(n, o.d) + mul_ll(o.n, d), mul_ll(d, o.d)); }
    Frac operator-(const Frac& o) const { return Frac(mul_ll(n, o.d) - mul_ll(o.n, d), mul_ll(d, o.d)); }
    Frac operator*(const Frac& o) const { return Frac(mul_ll(n, o.n), mul_ll(d, o.d)); }
    Frac operator/(const Frac& o) const {
        if (o.n == 0) fail("rational: divide by zero");
        return Frac(mul_ll(n, o.d), mul_ll(d, o.n));
    }
    bool zero() const { return n == 0; }
    bool pos() const { return n > 0; }
    bool neg() const { return n < 0; }
    bool operator==(const Frac& o) const { return n == o.n && d == o.d; }
};

std::vector<Vec> classical_roots(Family f, int rank, int& dim_out) {
    std::vector<Vec> roots;
    auto unit = [&](int dim, int i, int s) {
        Vec v(dim, 0);
        v[i] = s;
        return v;
    };
    switch (f) {
        case Family::A: {
            if (rank < 1 || rank > 8) fail("A_l requires 1 <= l <= 8");
            int dim = rank + 1;
            dim_out = dim;
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    if (i != j) {
                        Vec v(dim, 0);
                        v[i] = 1;
                        v[j] = -1;
                        roots.push_back(v);
                    }
            break;
        }
        case Family::B:
        case Family::C:
        case Family::BC:
        case Family::D: {
            int minr = f == Family::D ? 4 : 2;
            if (f == Family::C) minr = 3;
            if (f == Family::BC) minr = 1;
            if (rank < minr || rank > 8) fail(family_to_string(f) + "_l rank out of range (<= 8)");
            dim_out = rank;
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            Vec v(rank, 0);
                            v[i] = si;
                            v[j] = sj;
                            roots.push_back(v);
                        }
            if (f == Family::B || f == Family::BC)
                for (int i = 0; i < rank; ++i)
                    for (int s : {1, -1}) roots.push_back(unit(rank, i, s));
            if (f == Family::C || f == Family::BC)
                for (int i = 0; i < rank; ++i)
                    for (int s : {2, -2}) roots.push_back(unit(rank, i, s));
            break;
        }
        case Family::F: {
            if (rank != 4) fail("F family requires rank 4");
            dim_out = 4;
            // scaled by 2: long = +-2e_i +- 2e_j, short = +-2e_i and (+-1,+-1,+-1,+-1)
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    for (int si : {2, -2})
                        for (int sj : {2, -2}) {
                            Vec v(4, 0);
                            v[i] = si;
                            v[j] = sj;
                            roots.push_back(v);
                        }
            for (int i = 0; i < 4; ++i)
                for (int s : {2, -2}) roots.push_back(unit(4, i, s));
            for (int m = 0; m < 16; ++m) {
                Vec v(4);
                for (int i = 0; i < 4; ++i) v[i] = (m >> i) & 1 ? -1 : 1;
                roots.push_back(v);
            }
            break;
        }
        case Family::E: {
            if (rank < 6 || rank > 8) fail("E family requires rank in {6,7,8}");
            dim_out = 8;
            // E8 scaled by 2, Bourbaki realization.
            std::vector<Vec> e8;
            for (int i = 0; i < 8; ++i)
                for (int j = i + 1; j < 8; ++j)
                    for (int si : {2, -2})
                        for (int sj : {2, -2}) {
                            Vec v(8, 0);
                            v[i] = si;
                            v[j] = sj;
                            e8.push_back(v);
                        }
            for (int m = 0; m < 256; ++m) {
                Vec v(8);
                int prod = 1;
                for (int i = 0; i < 8; ++i) {
                    v[i] = (m >> i) & 1 ? -1 : 1;
                    prod *= v[i];
                }
                if (prod == 1) e8.push_back(v);
            }
            if (rank == 8) {
                roots = e8;
                break;
            }
            // simple roots of E8 (scaled by 2), Bourbaki numbering
            std::vector<Vec> simp = {
                {1, -1, -1, -1, -1, -1, -1, 1},  // a1
                {2, 2, 0, 0, 0, 0, 0, 0},        // a2
                {-2, 2, 0, 0, 0, 0, 0, 0},       // a3
                {0, -2, 2, 0, 0, 0, 0, 0},       // a4
                {0, 0, -2, 2, 0, 0, 0, 0},       // a5
                {0, 0, 0, -2, 2, 0, 0, 0},       // a6
                {0, 0, 0, 0, -2, 2, 0, 0},       // a7
            };
            int keep = rank;  // span of first `rank` simple roots
            // keep the roots lying in the rational span of simp[0..keep)
            for (const Vec& r : e8) {
                bool in_span = true;
                {
                    std::vector<std::vector<Frac>> mat;
                    for (int s = 0; s < keep; ++s) {
                        std::vector<Frac> row;
                        for (int c = 0; c < 8; ++c) row.emplace_back(simp[s][c]);
                        mat.push_back(row);
                    }
                    std::vector<Frac> target;
                    for (int c = 0; c < 8; ++c) target.emplace_back(r[c]);
                    // solve sum x_s * simp[s] = r by elimination over columns
                    int rr = 0;
                    for (int col = 0; col < 8 && rr < keep; ++col) {
                        int piv = -1;
                        for (int i = rr; i < keep; ++i)
                            if (!mat[i][col].zero()) {
                                piv = i;
                                break;
                            }
                        if (piv < 0) continue;
                        std::swap(mat[rr], mat[piv]);
                        for (int i = 0; i < keep; ++i) {
                            if (i == rr || mat[i][col].zero()) continue;
                            Frac f2 = mat[i][col] / mat[rr][col];
                            for (int c = 0; c < 8; ++c) mat[i][c] = mat[i][c] - f2 * mat[rr][c];
                        }
                        Frac f2 = target[col] / mat[rr][col];
                        for (int c = 0; c < 8; ++c) target[c] = target[c] - f2 * mat[rr][c];
                        ++rr;
                    }
                    for (int c = 0; c < 8; ++c)
                        if (!target[c].zero()) in_span = false;
                }
                if (in_span) roots.push_back(r);
            }
            break;
        }
    }
    return roots;
}

int expected_count(Family f, int l) {
    switch (f) {
        case Family::A: return l * (l + 1);
        case Family::B:
        case Family::C: return 2 * l * l;
        case Family::BC: return 2 * l * l + 2 * l;
        case Family::D: return 2 * l * (l - 1);
        case Family::E: return l == 6 ? 72 : (l == 7 ? 126 : 240);
        case Family::F: return 48;
    }
    return -1;
}

}  // namespace

Family family_from_string(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "BC") return Family::BC;
    if (s == "D") return Family::D;
    if (s == "E") return Family::E;
    if (s == "F") return Family::F;
    fail("unknown root system family '" + s + "' (valid: A B C BC D E F)");
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::BC: return "BC";
        case Family::D: return "D";
        case Family::E: return "E";
        case Family::F: return "F";
    }
    return "?";
}

RootSystem RootSystem::build(Family family, int rank) {
    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = rank;
    rs.roots_ = classical_roots(family, rank, rs.dim_);
    rs.finish();
    if (rs.size() != expected_count(family, rank))
        fail("root count mismatch for " + family_to_string(family) + std::to_string(rank));
    return rs;
}

void RootSystem::finish() {
    std::sort(roots_.begin(), roots_.end());
    roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());

    neg_.assign(roots_.size(), -1);
    for (int i = 0; i < size(); ++i) {
        Vec m = roots_[i];
        for (int& c : m) c = -c;
        neg_[i] = index_of(m);
        if (neg_[i] < 0) fail("root system not closed under negation");
    }

    short_norm_ = long_norm_ = norm_sq(0);
    for (int i = 1; i < size(); ++i) {
        long long n = norm_sq(i);
        short_norm_ = std::min(short_norm_, n);
        long_norm_ = std::max(long_norm_, n);
    }

    // crystallographic integrality and closure under reflections
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            if (2 * dot(i, j) % norm_sq(j) != 0) fail("non-crystallographic pair");
            if (reflect(i, j) < 0) fail("root system not closed under reflections");
        }

    // base = indecomposable lexicographically positive roots
    std::set<Vec> pos;
    for (int i = 0; i < size(); ++i)
        if (is_positive(i)) pos.insert(roots_[i]);
    base_.clear();
    for (const Vec& a : pos) {
        bool decomposable = false;
        for (const Vec& b : pos) {
            if (b == a) continue;
            Vec c(dim_);
            for (int k = 0; k < dim_; ++k) c[k] = a[k] - b[k];
            if (pos.count(c)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) base_.push_back(index_of(a));
    }
    std::sort(base_.begin(), base_.end());
    if (static_cast<int>(base_.size()) != rank_) fail("base size != rank");

    // heights: expand each root over the base (exact, small integer solve)
    height_.assign(size(), 0);
    int nb = static_cast<int>(base_.size());
    for (int r = 0; r < size(); ++r) {
        // solve sum_k c_k * base_k = root_r over Q by Gaussian elimination
        std::vector<std::vector<Frac>> m(dim_, std::vector<Frac>(nb + 1));
        for (int row = 0; row < dim_; ++row) {
            for (int k = 0; k < nb; ++k) m[row][k] = Frac(roots_[base_[k]][row]);
            m[row][nb] = Frac(roots_[r][row]);
        }
        std::vector<int> pivot_col(dim_, -1);
        int rr = 0;
        for (int col = 0; col < nb && rr < dim_; ++col) {
            int piv = -1;
            for (int i = rr; i < dim_; ++i)
                if (!m[i][col].zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(m[rr], m[piv]);
            for (int i = 0; i < dim_; ++i) {
                if (i == rr || m[i][col].zero()) continue;
                Frac f = m[i][col] / m[rr][col];
                for (int c = col; c <= nb; ++c) m[i][c] = m[i][c] - f * m[rr][c];
            }
            pivot_col[rr] = col;
            ++rr;
        }
        Frac ht(0);
        for (int i = 0; i < rr; ++i) ht = ht + m[i][nb] / m[i][pivot_col[i]];
        for (int i = rr; i < dim_; ++i)
            if (!m[i][nb].zero()) fail("root outside base span");
        if (ht.d != 1) fail("non-integral height");
        height_[r] = static_cast<int>(ht.n);
    }
}

int RootSystem::index_of(const Vec& v) const {
    auto it = std::lower_bound(roots_.begin(), roots_.end(), v);
    if (it == roots_.end() || *it != v) return -1;
    return static_cast<int>(it - roots_.begin());
}

long long RootSystem::dot(int i, int j) const {
    long long s = 0;
    for (int k = 0; k < dim_; ++k) s += static_cast<long long>(roots_[i][k]) * roots_[j][k];
    return s;
}

bool RootSystem::is_positive(int i) const {
    for (int k = 0; k < dim_; ++k) {
        if (roots_[i][k] > 0) return true;
        if (roots_[i][k] < 0) return false;
    }
    return false;
}

Vec RootSystem::reflect_vec(const Vec& x, int via) const {
    long long num = 0;
    for (int k = 0; k < dim_; ++k) num += static_cast<long long>(x[k]) * roots_[via][k];
    long long nn = norm_sq(via);
    Vec y = x;
    for (int k = 0; k < dim_; ++k) {
        long long t = 2 * num * roots_[via][k];
        if (t % nn != 0) fail("reflection left the lattice");
        y[k] = static_cast<int>(x[k] - t / nn);
    }
    return y;
}

int RootSystem::reflect(int i, int via) const { return index_of(reflect_vec(roots_[i], via)); }

std::vector<int> RootSystem::interval(int a, int b) const {
    // independence test: some 2x2 minor of (root_a | root_b) is nonsingular
    int r0 = -1, r1 = -1;
    for (int p = 0; p < dim_ && r1 < 0; ++p)
        for (int q = p + 1; q < dim_; ++q) {
            long long det = static_cast<long long>(roots_[a][p]) * roots_[b][q] -
                            static_cast<long long>(roots_[a][q]) * roots_[b][p];
            if (det != 0) {
                r0 = p;
                r1 = q;
                break;
            }
        }
    if (r0 < 0) fail("interval: linearly dependent roots");

    std::vector<int> out;
    for (int g = 0; g < size(); ++g) {
        // solve x*a + y*b = g on the pivot coordinates, then verify all
        Frac A(roots_[a][r0]), B(roots_[b][r0]), C(roots_[g][r0]);
        Frac D(roots_[a][r1]), E(roots_[b][r1]), F(roots_[g][r1]);
        Frac det = A * E - B * D;
        Frac x = (C * E - B * F) / det;
        Frac y = (A * F - C * D) / det;
        if (!x.pos() || !y.pos()) continue;
        bool ok = true;
        for (int k = 0; k < dim_ && ok; ++k) {
            Frac lhs = x * Frac(roots_[a][k]) + y * Frac(roots_[b][k]);
            if (!(lhs == Frac(roots_[g][k]))) ok = false;
        }
        if (ok) out.push_back(g);
    }
    return out;
}

namespace {

// Fourier-Motzkin feasibility of { M x = t, x >= 0 }, exact rationals.
bool cone_member_fm(const std::vector<std::vector<Frac>>& cols, const std::vector<Frac>& target) {
    int k = static_cast<int>(cols.size());
    int d = static_cast<int>(target.size());
    // rows: coefficients over x_0..x_{k-1} plus constant, meaning  sum c_i x_i + c_k >= 0
    // start from equalities; eliminate them by substitution
    std::vector<std::vector<Frac>> eqs;  // sum c_i x_i - t_row = 0
    for (int row = 0; row < d; ++row) {
        std::vector<Frac> e(k + 1);
        for (int i = 0; i < k; ++i) e[i] = cols[i][row];
        e[k] = Frac(0) - target[row];
        eqs.push_back(e);
    }
    std::vector<std::vector<Frac>> ineq;  // x_i >= 0
    for (int i = 0; i < k; ++i) {
        std::vector<Frac> e(k + 1);
        e[i] = Frac(1);
        ineq.push_back(e);
    }
    std::vector<bool> eliminated(k, false);
    for (auto& e : eqs) {
        int piv = -1;
        for (int i = 0; i < k; ++i)
            if (!eliminated[i] && !e[i].zero()) {
                piv = i;
                break;
            }
        if (piv < 0) {
            if (!e[k].zero()) return false;  // 0 = nonzero
            continue;
        }
        eliminated[piv] = true;
        Frac pc = e[piv];
        auto substitute = [&](std::vector<Frac>& row) {
            if (row[piv].zero()) return;
            Frac f = row[piv] / pc;
            for (int c = 0; c <= k; ++c) row[c] = row[c] - f * e[c];
        };
        for (auto& other : eqs)
            if (&other != &e) substitute(other);
        for (auto& row : ineq) substitute(row);
    }
    // Fourier-Motzkin on the remaining free variables
    for (int v = 0; v < k; ++v) {
        if (eliminated[v]) continue;
        std::vector<std::vector<Frac>> pos, neg, zero;
        for (auto& row : ineq) {
            if (row[v].pos())
                pos.push_back(row);
            else if (row[v].neg())
                neg.push_back(row);
            else
                zero.push_back(row);
        }
        std::vector<std::vector<Frac>> next = zero;
        if (!pos.empty() && !neg.empty()) {
            for (const auto& p : pos)
                for (const auto& n : neg) {
                    std::vector<Frac> comb(k + 1);
                    // p[v] * n_row - n[v] * p_row has zero v-coefficient; p[v]>0, n[v]<0
                    for (int c = 0; c <= k; ++c) comb[c] = p[v] * n[c] - n[v] * p[c];
                    next.push_back(comb);
                }
        }
        // normalize + dedup to tame growth
        std::set<std::vector<std::pair<long long, long long>>> seen;
        std::vector<std::vector<Frac>> dedup;
        for (auto& row : next) {
            long long lcm = 1;
            for (int c = 0; c <= k; ++c) lcm = lcm / igcd(lcm, row[c].d) * row[c].d;
            std::vector<std::pair<long long, long long>> key;
            long long g = 0;
            std::vector<long long> ints(k + 1);
            for (int c = 0; c <= k; ++c) {
                ints[c] = Frac::mul_ll(row[c].n, lcm / row[c].d);
                g = igcd(g, ints[c]);
            }
            if (g > 1)
                for (auto& x : ints) x /= g;
            for (int c = 0; c <= k; ++c)
                if (ints[c]) key.emplace_back(c, ints[c]);
            if (seen.insert(key).second) dedup.push_back(row);
            if (dedup.size() > 200000) fail("fourier-motzkin blowup");
        }
        ineq = std::move(dedup);
    }
    for (const auto& row : ineq)
        if (row[static_cast<size_t>(k)].neg()) return false;
    return true;
}

}  // namespace

RootSubsetReport RootSystem::classify_subset(const std::vector<int>& subset) const {
    RootSubsetReport rep;
    rep.subset = subset;
    std::sort(rep.subset.begin(), rep.subset.end());
    rep.subset.erase(std::unique(rep.subset.begin(), rep.subset.end()), rep.subset.end());
    for (int i : rep.subset)
        if (i < 0 || i >= size()) fail("classify_subset: index out of range");
    if (rep.subset.empty()) {
        rep.is_unipotent = true;
        return rep;
    }

    std::set<int> in(rep.subset.begin(), rep.subset.end());
    // a line inside the cone shows up as an opposite pair of members
    for (int i : rep.subset)
        if (in.count(neg_[i])) {
            rep.is_unipotent = false;
            return rep;
        }

    std::vector<std::vector<Frac>> cols;
    for (int i : rep.subset) {
        std::vector<Frac> c;
        for (int x : roots_[i]) c.emplace_back(x);
        cols.push_back(c);
    }

    // pointedness: no nontrivial nonnegative combination vanishes
    {
        auto cols2 = cols;
        for (auto& c : cols2) c.emplace_back(1);  // sum of coefficients = 1
        std::vector<Frac> target(dim_, Frac(0));
        target.emplace_back(1);
        if (cone_member_fm(cols2, target)) {
            rep.is_unipotent = false;
            return rep;
        }
    }

    // Phi cap cone(subset) must not exceed the subset
    for (int g = 0; g < size(); ++g) {
        if (in.count(g)) continue;
        std::vector<Frac> target;
        for (int x : roots_[g]) target.emplace_back(x);
        if (cone_member_fm(cols, target)) {
            rep.is_unipotent = false;
            return rep;
        }
    }
    rep.is_unipotent = true;

    // extreme roots: not inside any open angle of two independent members
    for (int a : rep.subset) {
        bool extreme = true;
        for (size_t i = 0; i < rep.subset.size() && extreme; ++i)
            for (size_t j = i + 1; j < rep.subset.size() && extreme; ++j) {
                int b = rep.subset[i], c = rep.subset[j];
                if (b == a || c == a) continue;
                // a = x*b + y*c with x,y > 0?
                int r0 = -1, r1 = -1;
                for (int p = 0; p < dim_ && r1 < 0; ++p)
                    for (int q = p + 1; q < dim_; ++q) {
                        long long det = static_cast<long long>(roots_[b][p]) * roots_[c][q] -
                                        static_cast<long long>(roots_[b][q]) * roots_[c][p];
                        if (det != 0) {
                            r0 = p;
                            r1 = q;
                            break;
                        }
                    }
                if (r0 < 0) continue;  // dependent pair spans no open angle
                Frac A(roots_[b][r0]), B(roots_[c][r0]), C(roots_[a][r0]);
                Frac D(roots_[b][r1]), E(roots_[c][r1]), F(roots_[a][r1]);
                Frac det = A * E - B * D;
                Frac x = (C * E - B * F) / det;
                Frac y = (A * F - C * D) / det;
                if (!x.pos() || !y.pos()) continue;
                bool match = true;
                for (int k2 = 0; k2 < dim_ && match; ++k2) {
                    Frac lhs = x * Frac(roots_[b][k2]) + y * Frac(roots_[c][k2]);
                    if (!(lhs == Frac(roots_[a][k2]))) match = false;
                }
                if (match) extreme = false;
            }
        if (extreme) rep.extreme_roots.push_back(a);
    }
    return rep;
}

std::vector<std::vector<int>> RootSystem::weyl_orbits(const std::vector<int>& reflection_gens,
                                                      const std::vector<int>& targets) const {
    std::vector<int> tg = targets;
    std::sort(tg.begin(), tg.end());
    tg.erase(std::unique(tg.begin(), tg.end()), tg.end());
    std::set<int> remaining(tg.begin(), tg.end());
    std::vector<std::vector<int>> orbits;
    while (!remaining.empty()) {
        int seed = *remaining.begin();
        std::set<int> orbit{seed};
        std::vector<int> queue{seed};
        while (!queue.empty()) {
            int cur = queue.back();
            queue.pop_back();
            for (int g : reflection_gens) {
                int img = reflect(cur, g);
                if (img >= 0 && !orbit.count(img)) {
                    orbit.insert(img);
                    queue.push_back(img);
                }
            }
        }
        std::vector<int> o;
        for (int x : orbit)
            if (remaining.count(x)) {
                o.push_back(x);
                remaining.erase(x);
            }
        orbits.push_back(o);
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return orbits;
}

const StructureConstants& RootSystem::structure_constants() const {
    if (sc_built_) return sc_;
    if (!simply_laced() || (family_ != Family::A && family_ != Family::D && family_ != Family::E))
        fail("structure constants: simply laced systems (A, D, E) only");

    int n = size();
    // total order on positive roots: height, then lexicographic
    std::vector<int> positives;
    for (int i = 0; i < n; ++i)
        if (is_positive(i)) positives.push_back(i);
    std::sort(positives.begin(), positives.end(), [&](int a, int b) {
        if (height_[a] != height_[b]) return height_[a] < height_[b];
        return roots_[a] < roots_[b];
    });
    std::vector<int> ord(n, -1);
    for (size_t i = 0; i < positives.size(); ++i) ord[positives[i]] = static_cast<int>(i);

    // extraspecial pair of each non-simple positive root: minimal first member
    std::vector<int> extra_first(n, -1);
    for (int g : positives) {
        if (height_[g] == 1) continue;
        for (int a : positives) {
            Vec rest(dim_);
            for (int k = 0; k < dim_; ++k) rest[k] = roots_[g][k] - roots_[a][k];
            int b = index_of(rest);
            if (b >= 0 && is_positive(b)) {
                extra_first[g] = a;
                break;  // positives scanned in order, so first hit is minimal
            }
        }
        if (extra_first[g] < 0) fail("no extraspecial pair");
    }

    std::vector<signed char> memo(static_cast<size_t>(n) * n, 2);  // 2 = unknown
    auto sum_idx = [&](int a, int b) {
        Vec s(dim_);
        for (int k = 0; k < dim_; ++k) s[k] = roots_[a][k] + roots_[b][k];
        return index_of(s);
    };

    std::function<int(int, int)> N = [&](int a, int b) -> int {
        int c = sum_idx(a, b);
        if (c < 0) return 0;
        signed char& slot = memo[static_cast<size_t>(a) * n + b];
        if (slot != 2) return slot;
        int val;
        bool pa = is_positive(a), pb = is_positive(b);
        if (!pa && !pb) {
            val = -N(neg_[a], neg_[b]);
        } else if (pa != pb) {
            if (!is_positive(c)) {
                val = -N(neg_[a], neg_[b]);
            } else if (!pa) {
                val = -N(b, a);
            } else {
                // a > 0, b < 0, c > 0: cyclic triple (a, b, -c)
                val = -N(neg_[b], c);
            }
        } else {
            int a1 = extra_first[c];
            int b1 = sum_idx(neg_[a1], c);
            if (a == a1) {
                val = 1;
            } else if (b == a1) {
                val = -1;
            } else {
                // quadruple (a, b, -a1, -b1) sums to zero
                val = N(b, neg_[a1]) * N(a, neg_[b1]) + N(neg_[a1], a) * N(b, neg_[b1]);
            }
        }
        if (val != 1 && val != -1) fail("structure constant resolution failed");
        slot = static_cast<signed char>(val);
        return val;
    };

    sc_.count_ = static_cast<size_t>(n);
    sc_.table_.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (sum_idx(a, b) >= 0) sc_.table_[static_cast<size_t>(a) * n + b] = static_cast<signed char>(N(a, b));
    sc_built_ = true;
    return sc_;
}

std::string RootSystem::serialize() const {
    std::ostringstream os;
    os << family_to_string(family_) << ' ' << rank_ << '\n';
    for (const Vec& r : roots_) {
        for (int k = 0; k < dim_; ++k) os << (k ? " " : "") << r[k];
        os << '\n';
    }
    return os.str();
}

RootSystem RootSystem::parse(const std::string& text) {
    std::istringstream is(text);
    std::string fam;
    int rank;
    if (!(is >> fam >> rank)) fail("root system parse: bad header");
    RootSystem rs = build(family_from_string(fam), rank);
    // verify the listed roots match the canonical realization
    std::string line;
    std::getline(is, line);
    std::vector<Vec> listed;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Vec v;
        int x;
        while (ls >> x) v.push_back(x);
        listed.push_back(v);
    }
    if (!listed.empty() && listed != rs.roots_) fail("root system parse: roots differ from standard realization");
    return rs;
}

}  // namespace stg
