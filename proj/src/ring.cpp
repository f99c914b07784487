#include "stg/ring.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stg {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }
}

std::string AxiomReport::str() const {
    std::ostringstream os;
    for (const auto& v : violations) {
        os << v.axiom << " witness(";
        for (size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
        os << ")\n";
    }
    return os.str();
}

int FiniteRing::lambda_inv() const {
    if (lambda < 0 || unit < 0) fail("ring has no lambda");
    for (int x = 0; x < n; ++x)
        if (m(lambda, x) == unit && m(x, lambda) == unit) return x;
    fail("lambda is not invertible");
}

AxiomReport FiniteRing::validate() const {
    AxiomReport rep;
    auto bad = [&](const std::string& ax, std::vector<int> w) {
        if (rep.violations.size() < 16) rep.violations.push_back({ax, std::move(w)});
    };
    if (n <= 0 || n > kCarrierCap) {
        bad("carrier size in 1..256", {});
        return rep;
    }
    if (static_cast<int>(add.size()) != n * n || static_cast<int>(mul.size()) != n * n ||
        static_cast<int>(neg.size()) != n || (has_involution && static_cast<int>(inv.size()) != n)) {
        bad("table sizes", {});
        return rep;
    }
    for (int x = 0; x < n; ++x) {
        if (a(0, x) != x || a(x, 0) != x) bad("additive identity", {x});
        if (a(x, neg[x]) != 0) bad("additive inverse", {x});
    }
    for (int x = 0; x < n && rep.ok(); ++x)
        for (int y = 0; y < n; ++y) {
            if (a(x, y) != a(y, x)) bad("additive commutativity", {x, y});
            for (int z = 0; z < n; ++z)
                if (a(a(x, y), z) != a(x, a(y, z))) {
                    bad("additive associativity", {x, y, z});
                    break;
                }
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (m(x, a(y, z)) != a(m(x, y), m(x, z))) bad("left distributivity", {x, y, z});
                if (m(a(x, y), z) != a(m(x, z), m(y, z))) bad("right distributivity", {x, y, z});
            }
    if (associative) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (assoc(x, y, z) != 0) bad("associativity", {x, y, z});
    } else {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (assoc(x, x, y) != 0) bad("left alternativity [p,p,q]=0", {x, y});
                if (assoc(x, y, y) != 0) bad("right alternativity [p,q,q]=0", {x, y});
            }
    }
    if (unit >= 0)
        for (int x = 0; x < n; ++x)
            if (m(unit, x) != x || m(x, unit) != x) bad("unit", {x});
    if (has_involution) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (st(a(x, y)) != a(st(x), st(y))) bad("involution additive", {x, y});
                if (st(m(x, y)) != m(st(y), st(x))) bad("involution anti-multiplicative", {x, y});
            }
        if (unit >= 0 && st(unit) != unit) bad("involution fixes unit", {});
    }
    if (lambda >= 0) {
        if (!is_nuclear(lambda)) bad("lambda nuclear", {lambda});
        bool invertible = false;
        if (unit >= 0)
            for (int x = 0; x < n; ++x)
                if (m(lambda, x) == unit && m(x, lambda) == unit) invertible = true;
        if (!invertible) bad("lambda invertible", {lambda});
    }
    return rep;
}

bool FiniteRing::is_nuclear(int v) const {
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (assoc(v, x, y) != 0 || assoc(x, v, y) != 0 || assoc(x, y, v) != 0) return false;
    return true;
}

std::vector<int> FiniteRing::nucleus() const {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (is_nuclear(v)) out.push_back(v);
    return out;
}

std::vector<int> FiniteRing::center() const {
    std::vector<int> out;
    for (int v : nucleus()) {
        bool central = true;
        for (int x = 0; x < n && central; ++x)
            if (m(v, x) != m(x, v)) central = false;
        if (central) out.push_back(v);
    }
    return out;
}

bool FiniteRing::is_commutative() const {
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (m(x, y) != m(y, x)) return false;
    return true;
}

FiniteRing FiniteRing::zmod(int nmod) {
    if (nmod < 1 || nmod > kCarrierCap) fail("zmod: modulus out of range");
    FiniteRing r;
    r.n = nmod;
    r.add.resize(nmod * nmod);
    r.mul.resize(nmod * nmod);
    r.neg.resize(nmod);
    r.inv.resize(nmod);
    for (int x = 0; x < nmod; ++x) {
        r.neg[x] = (nmod - x) % nmod;
        r.inv[x] = x;
        for (int y = 0; y < nmod; ++y) {
            r.add[x * nmod + y] = (x + y) % nmod;
            r.mul[x * nmod + y] = (x * y) % nmod;
        }
    }
    r.unit = nmod > 1 ? 1 : 0;
    return r;
}

FiniteRing FiniteRing::gf(int q) {
    // GF(p): zmod; GF(p^k) for q in {4,8,9}: polynomial basis with a fixed
    // irreducible (x^2+x+1, x^3+x+1, x^2+1 resp.)
    if (q == 2 || q == 3 || q == 5) return zmod(q);
    int p, k;
    std::vector<int> red;  // coefficients of x^k in terms of lower powers
    if (q == 4) {
        p = 2;
        k = 2;
        red = {1, 1};  // x^2 = x + 1
    } else if (q == 8) {
        p = 2;
        k = 3;
        red = {1, 1, 0};  // x^3 = x + 1
    } else if (q == 9) {
        p = 3;
        k = 2;
        red = {2, 0};  // x^2 = -1 = 2
    } else {
        fail("gf: q must be one of 2,3,4,5,8,9");
    }
    auto enc = [&](std::vector<int> c) {
        int v = 0;
        for (int i = k - 1; i >= 0; --i) v = v * p + c[i];
        return v;
    };
    auto dec = [&](int v) {
        std::vector<int> c(k);
        for (int i = 0; i < k; ++i) {
            c[i] = v % p;
            v /= p;
        }
        return c;
    };
    FiniteRing r;
    r.n = q;
    r.add.resize(q * q);
    r.mul.resize(q * q);
    r.neg.resize(q);
    r.inv.resize(q);
    for (int x = 0; x < q; ++x) {
        auto cx = dec(x);
        std::vector<int> nx(k);
        for (int i = 0; i < k; ++i) nx[i] = (p - cx[i]) % p;
        r.neg[x] = enc(nx);
        r.inv[x] = x;
        for (int y = 0; y < q; ++y) {
            auto cy = dec(y);
            std::vector<int> sum(k);
            for (int i = 0; i < k; ++i) sum[i] = (cx[i] + cy[i]) % p;
            r.add[x * q + y] = enc(sum);
            // polynomial multiplication then reduction
            std::vector<int> prod(2 * k - 1, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + cx[i] * cy[j]) % p;
            for (int d = 2 * k - 2; d >= k; --d) {
                int c = prod[d];
                if (!c) continue;
                prod[d] = 0;
                for (int i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + c * red[i]) % p;
            }
            std::vector<int> pr(prod.begin(), prod.begin() + k);
            r.mul[x * q + y] = enc(pr);
        }
    }
    r.unit = 1;
    return r;
}

FiniteRing FiniteRing::dual_numbers(const FiniteRing& base) {
    int b = base.n;
    if (b * b > kCarrierCap) fail("dual_numbers: carrier too large");
    // elements (x, y) = x + y*eps, id = x + b*y
    FiniteRing r;
    r.n = b * b;
    r.add.resize(r.n * r.n);
    r.mul.resize(r.n * r.n);
    r.neg.resize(r.n);
    r.inv.resize(r.n);
    r.has_involution = base.has_involution;
    for (int x1 = 0; x1 < b; ++x1)
        for (int y1 = 0; y1 < b; ++y1) {
            int u = x1 + b * y1;
            r.neg[u] = base.neg[x1] + b * base.neg[y1];
            r.inv[u] = base.inv.empty() ? u : base.inv[x1] + b * base.inv[y1];
            for (int x2 = 0; x2 < b; ++x2)
                for (int y2 = 0; y2 < b; ++y2) {
                    int v = x2 + b * y2;
                    r.add[u * r.n + v] = base.a(x1, x2) + b * base.a(y1, y2);
                    // (x1 + y1 e)(x2 + y2 e) = x1 x2 + (x1 y2 + y1 x2) e
                    r.mul[u * r.n + v] = base.m(x1, x2) + b * base.a(base.m(x1, y2), base.m(y1, x2));
                }
        }
    if (base.unit >= 0) r.unit = base.unit;
    return r;
}

FiniteRing FiniteRing::product(const std::vector<FiniteRing>& parts) {
    if (parts.empty()) fail("product: empty factor list");
    FiniteRing acc = parts[0];
    for (size_t pi = 1; pi < parts.size(); ++pi) {
        const FiniteRing& b = parts[pi];
        FiniteRing r;
        int na = acc.n, nb = b.n;
        if (na * nb > kCarrierCap) fail("product: carrier too large");
        r.n = na * nb;
        r.add.resize(r.n * r.n);
        r.mul.resize(r.n * r.n);
        r.neg.resize(r.n);
        r.inv.resize(r.n);
        r.has_involution = acc.has_involution || b.has_involution;
        r.associative = acc.associative && b.associative;
        auto ia = [&](int x) { return acc.inv.empty() ? x : acc.inv[x]; };
        auto ib = [&](int x) { return b.inv.empty() ? x : b.inv[x]; };
        for (int x1 = 0; x1 < na; ++x1)
            for (int y1 = 0; y1 < nb; ++y1) {
                int u = x1 + na * y1;
                r.neg[u] = acc.neg[x1] + na * b.neg[y1];
                r.inv[u] = ia(x1) + na * ib(y1);
                for (int x2 = 0; x2 < na; ++x2)
                    for (int y2 = 0; y2 < nb; ++y2) {
                        int v = x2 + na * y2;
                        r.add[u * r.n + v] = acc.a(x1, x2) + na * b.a(y1, y2);
                        r.mul[u * r.n + v] = acc.m(x1, x2) + na * b.m(y1, y2);
                    }
            }
        if (acc.unit >= 0 && b.unit >= 0) r.unit = acc.unit + na * b.unit;
        acc = r;
    }
    return acc;
}

FiniteRing FiniteRing::etale_quadratic(const FiniteRing& base, bool split) {
    if (base.unit < 0) fail("etale_quadratic: base must be unital");
    if (split) {
        FiniteRing r = product({base, base});
        r.has_involution = true;
        r.inv.resize(r.n);
        int nb = base.n;
        for (int x = 0; x < nb; ++x)
            for (int y = 0; y < nb; ++y) r.inv[x + nb * y] = y + nb * x;  // swap
        return r;
    }
    // field case: GF(q) -> GF(q^2) with Frobenius x -> x^q
    int q = base.n;
    int q2 = q * q;
    FiniteRing big;
    if (q == 2)
        big = gf(4);
    else if (q == 3)
        big = gf(9);
    else
        fail("etale_quadratic(field): base must be gf(2) or gf(3)");
    big.has_involution = true;
    big.inv.resize(q2);
    for (int x = 0; x < q2; ++x) {
        int y = x;
        for (int i = 1; i < q; ++i) y = big.m(y, x);  // x^q
        big.inv[x] = y;
    }
    // Frobenius must be an involution here
    for (int x = 0; x < q2; ++x)
        if (big.inv[big.inv[x]] != x) fail("etale_quadratic: frobenius not involutive");
    return big;
}

std::vector<int> subring_closure(const FiniteRing& r, std::vector<int> gens) {
    std::set<int> s(gens.begin(), gens.end());
    s.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int x : cur) {
            if (s.insert(r.neg[x]).second) grew = true;
            if (r.has_involution && s.insert(r.inv[x]).second) grew = true;
            for (int y : cur) {
                if (s.insert(r.a(x, y)).second) grew = true;
                if (s.insert(r.m(x, y)).second) grew = true;
            }
        }
    }
    return {s.begin(), s.end()};
}

WeakUnitReport check_weak_unit(const FiniteRing& r, const std::vector<int>& e) {
    WeakUnitReport rep;
    auto fail_cond = [&](const std::string& c, std::vector<int> w) {
        rep.ok = false;
        rep.failed_condition = c;
        rep.witness = std::move(w);
        return rep;
    };
    std::set<int> E(e.begin(), e.end());
    // sub-semigroup
    for (int x : e)
        for (int y : e)
            if (!E.count(r.m(x, y))) return fail_cond("E*E in E", {x, y});
    // central and hermitian
    for (int x : e) {
        if (!r.is_nuclear(x)) return fail_cond("E central (nuclear part)", {x});
        for (int y = 0; y < r.n; ++y)
            if (r.m(x, y) != r.m(y, x)) return fail_cond("E central", {x, y});
        if (r.has_involution && r.inv[x] != x) return fail_cond("E hermitian", {x});
    }
    // common divisor inside E
    for (int x : e)
        for (int y : e) {
            bool found = false;
            for (int z : e) {
                for (int xp : e)
                    if (r.m(xp, z) == x) {
                        for (int yp : e)
                            if (r.m(yp, z) == y) {
                                found = true;
                                break;
                            }
                        if (found) break;
                    }
                if (found) break;
            }
            if (!found) return fail_cond("common divisor in E", {x, y});
        }
    // multiplication maps are epimorphisms: E x E -> E and R x E -> R
    {
        std::set<int> img;
        for (int x : e)
            for (int y : e) img.insert(r.m(x, y));
        for (int x : e)
            if (!img.count(x)) return fail_cond("E x E -> E surjective", {x});
        img.clear();
        for (int x = 0; x < r.n; ++x)
            for (int y : e) img.insert(r.m(x, y));
        for (int x = 0; x < r.n; ++x)
            if (!img.count(x)) return fail_cond("R x E -> R surjective", {x});
    }
    // annihilator factorization: p*eps = 0 => eps = e'e'' with p*e' = 0
    for (int p = 0; p < r.n; ++p)
        for (int eps : e) {
            if (r.m(p, eps) != 0) continue;
            bool found = false;
            for (int e1 : e) {
                if (r.m(p, e1) != 0) continue;
                for (int e2 : e)
                    if (r.m(e1, e2) == eps) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) return fail_cond("annihilator factorization", {p, eps});
        }
    return rep;
}

bool check_artin(const FiniteRing& r, int x, int y, const std::vector<int>& nuclear_gens) {
    for (int g : nuclear_gens)
        if (!r.is_nuclear(g)) {
            for (int a = 0; a < r.n; ++a)
                for (int b = 0; b < r.n; ++b)
                    for (auto [p, q, s] : {std::array{g, a, b}, {a, g, b}, {a, b, g}})
                        if (r.assoc(p, q, s) != 0)
                            fail("check_artin: generator " + std::to_string(g) +
                                 " is not nuclear, associator witness [" + std::to_string(p) + "," +
                                 std::to_string(q) + "," + std::to_string(s) + "] != 0");
            fail("check_artin: generator not nuclear");
        }
    std::vector<int> gens = nuclear_gens;
    gens.push_back(x);
    gens.push_back(y);
    if (r.has_involution) {
        gens.push_back(r.inv[x]);
        gens.push_back(r.inv[y]);
    }
    std::vector<int> sub = subring_closure(r, gens);
    for (int a : sub)
        for (int b : sub)
            for (int c : sub)
                if (r.assoc(a, b, c) != 0) return false;
    return true;
}

}  // namespace stg
