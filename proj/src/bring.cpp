#include "stg/bring.hpp"

#include <set>
#include <stdexcept>

namespace stg {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }
}

void BRing::derive_helper_tables() {
    int n = R.n;
    lmul_lambda.resize(n);
    lmul_lambda_inv.resize(n);
    rmul_lambda.resize(n);
    rmul_lambda_inv.resize(n);
    act_lambda.resize(dn);
    act_lambda_inv.resize(dn);
    iota_act.resize(n);
    iota_pair.resize(dn);
    if (R.lambda < 0 || iota < 0) fail("derive_helper_tables: needs unital carrier");
    int li = R.lambda_inv();
    for (int p = 0; p < n; ++p) {
        lmul_lambda[p] = R.m(R.lambda, p);
        lmul_lambda_inv[p] = R.m(li, p);
        rmul_lambda[p] = R.m(p, R.lambda);
        rmul_lambda_inv[p] = R.m(p, li);
        iota_act[p] = ac(iota, p);
    }
    for (int u = 0; u < dn; ++u) {
        act_lambda[u] = ac(u, R.lambda);
        act_lambda_inv[u] = ac(u, li);
        iota_pair[u] = pr(iota, u);
    }
}

AxiomReport BRing::check_axioms(int ell) const {
    AxiomReport rep;
    auto bad = [&](const std::string& ax, std::vector<int> w) {
        if (rep.violations.size() < 16) rep.violations.push_back({ax, std::move(w)});
    };
    // deterministic witness: loops scan in carrier order, first failure per axiom kept
    auto require_tables = [&]() {
        return R.n > 0 && dn > 0 && static_cast<int>(dadd.size()) == dn * dn &&
               static_cast<int>(dneg.size()) == dn && static_cast<int>(phi.size()) == R.n &&
               static_cast<int>(rho.size()) == dn && static_cast<int>(pair_.size()) == dn * dn &&
               static_cast<int>(act.size()) == dn * R.n;
    };
    if (!require_tables()) {
        bad("table sizes", {});
        return rep;
    }
    {
        FiniteRing rr = R;
        rr.associative = ell >= 4;
        auto base = rr.validate();
        for (auto& v : base.violations) bad("R: " + v.axiom, v.witness);
    }
    if (!R.has_involution) bad("R must carry an involution", {});
    if (R.lambda < 0 || R.unit < 0 || iota < 0) {
        bad("unital B-ring needs unit, lambda, iota", {});
        return rep;
    }
    if (!rep.ok()) return rep;

    int n = R.n;
    int li = R.lambda_inv();
    int one = R.unit;
    auto sub = [&](int x, int y) { return R.s(x, y); };

    // lambda identities on associators
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r) {
                int as = R.assoc(p, q, r);
                int neg_as = R.neg[as];
                for (int l : {R.lambda, li}) {
                    if (R.m(l, as) != neg_as) bad("lambda [p,q,r] = -[p,q,r]", {l, p, q, r});
                    if (R.assoc(R.m(l, p), q, r) != neg_as) bad("[lambda p,q,r] = -[p,q,r]", {l, p, q, r});
                    if (R.assoc(R.m(p, l), q, r) != neg_as) bad("[p lambda,q,r] = -[p,q,r]", {l, p, q, r});
                    if (R.m(as, l) != neg_as) bad("[p,q,r] lambda = -[p,q,r]", {l, p, q, r});
                }
            }
    // involution axioms
    if (R.st(R.lambda) != li) bad("lambda* = lambda^-1", {});
    if (R.st(R.st(R.lambda)) != R.lambda) bad("lambda** = lambda", {});
    for (int p = 0; p < n; ++p) {
        if (R.st(R.st(p)) != R.m(R.m(R.lambda, p), li)) bad("p** = lambda p lambda^-1", {p});
        for (int q = 0; q < n; ++q) {
            if (R.assoc(R.st(p), p, q) != 0) bad("[p*,p,q] = 0", {p, q});
            for (int r = 0; r < n; ++r) {
                int as = R.assoc(p, q, r);
                if (R.assoc(R.st(p), q, r) != R.neg[as]) bad("[p*,q,r] = -[p,q,r]", {p, q, r});
                if (R.st(as) != R.neg[as]) bad("[p,q,r]* = -[p,q,r]", {p, q, r});
            }
        }
    }
    // Delta is a group with zero as identity
    for (int u = 0; u < dn; ++u) {
        if (da(0, u) != u || da(u, 0) != u) bad("Delta identity", {u});
        if (da(u, dneg[u]) != 0 || da(dneg[u], u) != 0) bad("Delta inverse", {u});
        for (int v = 0; v < dn; ++v)
            for (int w = 0; w < dn; ++w)
                if (da(da(u, v), w) != da(u, da(v, w))) bad("Delta associativity", {u, v, w});
    }
    if (!rep.ok()) return rep;

    // phi: additive, central image, phi(p + p* lambda) = 0, phi((pq)r) = phi(p(qr))
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (phi[R.a(p, q)] != da(phi[p], phi[q])) bad("phi additive", {p, q});
            for (int r = 0; r < n; ++r)
                if (phi[R.m(R.m(p, q), r)] != phi[R.m(p, R.m(q, r))]) bad("phi((pq)r) = phi(p(qr))", {p, q, r});
        }
        if (phi[R.a(p, R.m(R.st(p), R.lambda))] != 0) bad("phi(p + p* lambda) = 0", {p});
        for (int u = 0; u < dn; ++u)
            if (da(phi[p], u) != da(u, phi[p])) bad("phi image central", {p, u});
    }
    // pairing axioms
    for (int u = 0; u < dn; ++u) {
        for (int v = 0; v < dn; ++v) {
            if (!R.is_nuclear(pr(u, v))) bad("<u,v> nuclear", {u, v});
            if (pr(v, u) != R.m(R.st(pr(u, v)), R.lambda)) bad("<v,u> = <u,v>* lambda", {u, v});
            if (da(u, v) != ds(da(v, u), phi[pr(u, v)])) bad("u+v = v+u - phi(<u,v>)", {u, v});
            for (int w = 0; w < dn; ++w) {
                if (pr(da(u, v), w) != R.a(pr(u, w), pr(v, w))) bad("pairing left biadditive", {u, v, w});
                if (pr(w, da(u, v)) != R.a(pr(w, u), pr(w, v))) bad("pairing right biadditive", {u, v, w});
            }
        }
        for (int p = 0; p < n; ++p) {
            if (pr(u, phi[p]) != 0) bad("<u, phi(p)> = 0", {u, p});
            if (pr(phi[p], u) != 0) bad("<phi(p), u> = 0", {p, u});
        }
    }
    // rho axioms
    for (int u = 0; u < dn; ++u) {
        if (!R.is_nuclear(rho[u])) bad("rho(u) nuclear", {u});
        for (int v = 0; v < dn; ++v)
            if (rho[da(u, v)] != R.a(sub(rho[u], pr(u, v)), rho[v])) bad("rho(u+v) = rho(u) - <u,v> + rho(v)", {u, v});
        if (R.a(R.a(rho[u], pr(u, u)), R.m(R.st(rho[u]), R.lambda)) != 0)
            bad("rho(u) + <u,u> + rho(u)* lambda = 0", {u});
        if (rho[dneg[u]] != R.m(R.st(rho[u]), R.lambda)) bad("rho(-u) = rho(u)* lambda", {u});
    }
    for (int p = 0; p < n; ++p)
        if (rho[phi[p]] != sub(p, R.m(R.st(p), R.lambda))) bad("rho(phi(p)) = p - p* lambda", {p});
    if (rho[0] != 0) bad("rho(0) = 0", {});
    if (rho[iota] != one) bad("rho(iota) = 1", {});
    if (pr(iota, iota) != R.neg[R.a(one, R.lambda)]) bad("<iota,iota> = -1-lambda", {});

    // action axioms
    for (int u = 0; u < dn; ++u) {
        if (ac(u, one) != u) bad("u . 1 = u", {u});
        if (ac(u, 0) != 0) bad("u . 0 = 0", {u});
        if (da(u, ac(u, R.neg[one])) != phi[rho[u]]) bad("u + u.(-1) = phi(rho(u))", {u});
        for (int v = 0; v < dn; ++v)
            for (int p = 0; p < n; ++p)
                if (ac(da(u, v), p) != da(ac(u, p), ac(v, p))) bad("action additive in u", {u, v, p});
        for (int p = 0; p < n; ++p) {
            for (int q = 0; q < n; ++q) {
                if (ac(u, R.a(p, q)) != da(da(ac(u, p), phi[R.m(R.m(R.st(q), rho[u]), p)]), ac(u, q)))
                    bad("u.(p+q) = u.p + phi(q* rho(u) p) + u.q", {u, p, q});
                if (ac(ac(u, p), q) != ac(u, R.m(p, q))) bad("(u.p).q = u.(pq)", {u, p, q});
                for (int r = 0; r < n; ++r)
                    if (ac(u, R.m(R.m(p, q), r)) != ac(u, R.m(p, R.m(q, r)))) bad("u.((pq)r) = u.(p(qr))", {u, p, q, r});
            }
            if (rho[ac(u, p)] != R.m(R.m(R.st(p), rho[u]), p)) bad("rho(u.p) = p* rho(u) p", {u, p});
            for (int v = 0; v < dn; ++v) {
                if (pr(u, ac(v, p)) != R.m(pr(u, v), p)) bad("<u, v.p> = <u,v> p", {u, v, p});
                if (pr(ac(u, p), v) != R.m(R.st(p), pr(u, v))) bad("<u.p, v> = p* <u,v>", {u, p, v});
            }
        }
    }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (ac(phi[p], q) != phi[R.m(R.m(R.st(q), p), q)]) bad("phi(p).q = phi(q* p q)", {p, q});
    // the two remaining nuclear-rho identities
    for (int u = 0; u < dn; ++u)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                if (R.m(p, R.m(R.m(R.st(q), rho[u]), q)) != R.m(R.m(R.m(p, R.st(q)), rho[u]), q))
                    bad("p(q* rho(u) q) = (p q*) rho(u) q", {u, p, q});
                if (R.m(R.m(R.m(R.st(p), rho[u]), p), q) != R.m(R.m(R.st(p), rho[u]), R.m(p, q)))
                    bad("(p* rho(u) p) q = p* rho(u) (pq)", {u, p, q});
            }
    return rep;
}

WeakUnitReport BRing::check_weak_unit(const std::vector<int>& e) const {
    WeakUnitReport rep = stg::check_weak_unit(R, e);
    if (!rep.ok) return rep;
    // Delta x E -> Delta surjective
    std::set<int> img;
    for (int u = 0; u < dn; ++u)
        for (int eps : e) img.insert(ac(u, eps));
    for (int u = 0; u < dn; ++u)
        if (!img.count(u)) {
            rep.ok = false;
            rep.failed_condition = "Delta x E -> Delta surjective";
            rep.witness = {u};
            return rep;
        }
    // annihilator factorization on the Delta sort
    for (int u = 0; u < dn; ++u)
        for (int eps : e) {
            if (ac(u, eps) != 0) continue;
            bool found = false;
            for (int e1 : e) {
                if (ac(u, e1) != 0) continue;
                for (int e2 : e)
                    if (R.m(e1, e2) == eps) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) {
                rep.ok = false;
                rep.failed_condition = "Delta annihilator factorization";
                rep.witness = {u, eps};
                return rep;
            }
        }
    return rep;
}

AxiomReport F4Ring::check_axioms() const {
    AxiomReport rep;
    auto bad = [&](const std::string& ax, std::vector<int> w) {
        if (rep.violations.size() < 16) rep.violations.push_back({ax, std::move(w)});
    };
    auto check_side = [&](const FiniteRing& A, const FiniteRing& B, const std::vector<int>& phiAB,
                          const std::vector<int>& phiBA, const std::vector<int>& rhoAB, const std::string& tag) {
        FiniteRing a = A;
        a.associative = false;  // alternative suffices
        auto base = a.validate();
        for (auto& v : base.violations) bad(tag + ": " + v.axiom, v.witness);
        if (!A.has_involution || A.unit < 0) {
            bad(tag + ": unital involution ring required", {});
            return;
        }
        for (int p = 0; p < A.n; ++p) {
            if (A.st(A.st(p)) != p) bad(tag + ": p** = p", {p});
            for (int q = 0; q < A.n; ++q)
                for (int r = 0; r < A.n; ++r) {
                    int as = A.assoc(p, q, r);
                    if (A.assoc(A.st(p), q, r) != A.neg[as]) bad(tag + ": [p*,q,r] = -[p,q,r]", {p, q, r});
                    if (A.st(as) != A.neg[as]) bad(tag + ": [p,q,r]* = -[p,q,r]", {p, q, r});
                }
        }
        // phi: A -> C(B), additive, phi(pq) = phi(qp), phi(p*) = phi(p)* = phi(p),
        // phi((pq)r) = phi(p(qr)), phi(phi(p)) = 0
        auto inC = [&](int x) {
            if (!B.is_nuclear(x)) return false;
            for (int y = 0; y < B.n; ++y)
                if (B.m(x, y) != B.m(y, x)) return false;
            return true;
        };
        for (int p = 0; p < A.n; ++p) {
            if (!inC(phiAB[p])) bad(tag + ": phi image central", {p});
            if (phiBA[phiAB[p]] != 0) bad(tag + ": phi(phi(p)) = 0", {p});
            if (phiAB[A.st(p)] != phiAB[p]) bad(tag + ": phi(p*) = phi(p)", {p});
            if (B.st(phiAB[p]) != phiAB[p]) bad(tag + ": phi(p)* = phi(p)", {p});
            for (int q = 0; q < A.n; ++q) {
                if (phiAB[A.a(p, q)] != B.a(phiAB[p], phiAB[q])) bad(tag + ": phi additive", {p, q});
                if (phiAB[A.m(p, q)] != phiAB[A.m(q, p)]) bad(tag + ": phi(pq) = phi(qp)", {p, q});
                for (int r = 0; r < A.n; ++r)
                    if (phiAB[A.m(A.m(p, q), r)] != phiAB[A.m(p, A.m(q, r))])
                        bad(tag + ": phi((pq)r) = phi(p(qr))", {p, q, r});
            }
        }
        // rho: A -> C(B) multiplicative with the listed identities
        if (rhoAB[A.unit] != B.unit) bad(tag + ": rho(1) = 1", {});
        for (int u = 0; u < A.n; ++u) {
            if (!inC(rhoAB[u])) bad(tag + ": rho image central", {u});
            if (rhoAB[A.st(u)] != rhoAB[u]) bad(tag + ": rho(u*) = rho(u)", {u});
            if (B.st(rhoAB[u]) != rhoAB[u]) bad(tag + ": rho(u)* = rho(u)", {u});
            for (int v = 0; v < A.n; ++v) {
                if (rhoAB[A.m(u, v)] != B.m(rhoAB[u], rhoAB[v])) bad(tag + ": rho multiplicative", {u, v});
                if (rhoAB[A.a(u, v)] != B.a(B.a(rhoAB[u], phiAB[A.m(u, A.st(v))]), rhoAB[v]))
                    bad(tag + ": rho(u+v) = rho(u) + phi(uv*) + rho(v)", {u, v});
            }
        }
    };
    check_side(R, S, phi_rs, phi_sr, rho_rs, "R");
    check_side(S, R, phi_sr, phi_rs, rho_sr, "S");
    // cross identities: u phi(p) = phi(rho(u) p), rho(rho(u)) = uu*,
    // u + u* = rho(phi(u)) + phi(rho(u))   (u in S, p in R, and symmetrically)
    auto cross = [&](const FiniteRing& A, const FiniteRing& B, const std::vector<int>& phiAB,
                     const std::vector<int>& phiBA, const std::vector<int>& rhoAB,
                     const std::vector<int>& rhoBA, const std::string& tag) {
        // here u ranges over B, p over A; phiAB: A->B, rhoBA: B->A
        for (int u = 0; u < B.n; ++u) {
            for (int p = 0; p < A.n; ++p)
                if (B.m(u, phiAB[p]) != phiAB[A.m(rhoBA[u], p)]) bad(tag + ": u phi(p) = phi(rho(u) p)", {u, p});
            if (rhoAB[rhoBA[u]] != B.m(u, B.st(u))) bad(tag + ": rho(rho(u)) = u u*", {u});
            if (B.a(u, B.st(u)) != B.a(rhoAB[phiBA[u]], phiAB[rhoBA[u]]))
                bad(tag + ": u + u* = rho(phi(u)) + phi(rho(u))", {u});
        }
    };
    cross(R, S, phi_rs, phi_sr, rho_rs, rho_sr, "S-over-R");
    cross(S, R, phi_sr, phi_rs, rho_sr, rho_rs, "R-over-S");
    return rep;
}

BRing F4Ring::b3_view() const {
    BRing b;
    b.R = R;
    b.R.lambda = lambda_r();
    b.dn = S.n;
    b.dadd = S.add;
    b.dneg = S.neg;
    b.iota = S.unit;
    b.phi = phi_rs;
    b.rho = rho_sr;
    b.pair_.resize(S.n * S.n);
    for (int u = 0; u < S.n; ++u)
        for (int v = 0; v < S.n; ++v) b.pair_[u * S.n + v] = R.neg[phi_sr[S.m(u, S.st(v))]];
    b.act.resize(S.n * R.n);
    for (int u = 0; u < S.n; ++u)
        for (int p = 0; p < R.n; ++p) b.act[u * R.n + p] = S.m(rho_rs[p], u);
    b.derive_helper_tables();
    return b;
}

WeakUnitReport F4Ring::check_weak_unit(const std::vector<int>& e) const {
    WeakUnitReport rep = stg::check_weak_unit(R, e);
    if (!rep.ok) return rep;
    // S x E -> S surjective via s . rho(eps)
    std::set<int> img;
    for (int s = 0; s < S.n; ++s)
        for (int eps : e) img.insert(S.m(s, rho_rs[eps]));
    for (int s = 0; s < S.n; ++s)
        if (!img.count(s)) {
            rep.ok = false;
            rep.failed_condition = "S x E -> S surjective";
            rep.witness = {s};
            return rep;
        }
    for (int s = 0; s < S.n; ++s)
        for (int eps : e) {
            if (S.m(s, rho_rs[eps]) != 0) continue;
            bool found = false;
            for (int e1 : e) {
                if (S.m(s, rho_rs[e1]) != 0) continue;
                for (int e2 : e)
                    if (R.m(e1, e2) == eps) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) {
                rep.ok = false;
                rep.failed_condition = "S annihilator factorization";
                rep.witness = {s, eps};
                return rep;
            }
        }
    return rep;
}

}  // namespace stg
