#pragma once

#include "stg/ring.hpp"

namespace stg {

/// B_l ring (R, Delta): alternative ring with lambda and involution plus a
/// (possibly nonabelian) group Delta with forms phi, rho, <-,->, and a right
/// action of R. Unital carriers store iota; the lambda/iota helper tables are
/// kept explicitly so non-unital algebras fit the same struct.
struct BRing {
    FiniteRing R;
    int dn = 0;                // |Delta|; ids 0..dn-1, 0 = additive zero
    std::vector<int> dadd;     // dn*dn, u dotplus v
    std::vector<int> dneg;     // dn
    std::vector<int> phi;      // R.n -> Delta
    std::vector<int> rho;      // dn -> R
    std::vector<int> pair_;    // dn*dn -> R
    std::vector<int> act;      // dn*R.n -> Delta, u . p
    int iota = -1;             // unital case
    // helper/non-unital operation tables
    std::vector<int> lmul_lambda, lmul_lambda_inv;  // R -> R
    std::vector<int> rmul_lambda, rmul_lambda_inv;  // R -> R
    std::vector<int> act_lambda, act_lambda_inv;    // Delta -> Delta
    std::vector<int> iota_act;                      // R -> Delta, p -> iota . p
    std::vector<int> iota_pair;                     // Delta -> R, u -> <iota, u>

    int da(int u, int v) const { return dadd[u * dn + v]; }
    int ds(int u, int v) const { return da(u, dneg[v]); }  // u dotminus v
    int pr(int u, int v) const { return pair_[u * dn + v]; }
    int ac(int u, int p) const { return act[u * R.n + p]; }

    /// Fill the lambda/iota helper tables from R.lambda and iota (unital case).
    void derive_helper_tables();

    /// Exhaustive check of the full unital B_l axiom list, including the
    /// "additional identities" block. `ell` >= 4 additionally requires R
    /// associative.
    AxiomReport check_axioms(int ell = 3) const;

    WeakUnitReport check_weak_unit(const std::vector<int>& e) const;
};

/// F4 ring (R, S): two alternative involution rings with mutual maps
/// phi: R -> C(S), S -> C(R) and rho likewise.
struct F4Ring {
    FiniteRing R, S;
    std::vector<int> phi_rs, phi_sr;  // phi: R->S, S->R
    std::vector<int> rho_rs, rho_sr;  // rho: R->S, S->R

    int lambda_r() const { return rho_sr[S.neg[S.unit]]; }  // rho(-1_S)
    int lambda_s() const { return rho_rs[R.neg[R.unit]]; }

    AxiomReport check_axioms() const;
    /// The induced B3-ring view: iota = 1_S, u.p = rho(p)u, <u,v> = -phi(uv*).
    BRing b3_view() const;

    WeakUnitReport check_weak_unit(const std::vector<int>& e) const;
};

}  // namespace stg
