#pragma once

#include <optional>
#include <string>
#include <vector>

namespace stg {

struct AxiomViolation {
    std::string axiom;
    std::vector<int> witness;  // element ids, in quantifier order
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

/// Finite ring given by operation tables. Element ids are 0..n-1 with 0 the
/// additive zero. Multiplication is biadditive but not necessarily
/// associative; `associative` records whether associativity was requested
/// (and is then checked exhaustively by validate()).
struct FiniteRing {
    int n = 0;
    std::vector<int> add;  // n*n
    std::vector<int> neg;  // n
    std::vector<int> mul;  // n*n
    int unit = -1;         // -1 when non-unital
    bool has_involution = false;
    std::vector<int> inv;  // n, identity when !has_involution
    int lambda = -1;       // distinguished invertible nuclear element (B-rings)
    bool associative = true;

    int a(int x, int y) const { return add[x * n + y]; }
    int m(int x, int y) const { return mul[x * n + y]; }
    int s(int x, int y) const { return a(x, neg[y]); }  // x - y
    int st(int x) const { return inv[x]; }              // x*
    int assoc(int p, int q, int r) const { return s(m(m(p, q), r), m(p, m(q, r))); }

    int lambda_inv() const;
    /// Structural validity: abelian group, biadditivity, associativity or
    /// alternativity, involution/unit/lambda axioms where present.
    AxiomReport validate() const;

    std::vector<int> nucleus() const;
    std::vector<int> center() const;
    bool is_commutative() const;
    bool is_nuclear(int x) const;

    static FiniteRing gf(int q);                  // q in {2,3,4,5,8,9}
    static FiniteRing zmod(int nmod);
    static FiniteRing dual_numbers(const FiniteRing& base);
    static FiniteRing product(const std::vector<FiniteRing>& parts);
    /// Etale quadratic algebra over a finite field base: split = base x base
    /// with the swap involution, field = quadratic field extension with the
    /// Frobenius involution.
    static FiniteRing etale_quadratic(const FiniteRing& base, bool split);
};

constexpr int kCarrierCap = 256;

/// Exhaustive weak-unit check for a (possibly non-unital) ring with subset E.
/// The Delta/S-sort conditions are checked by the BRing/F4Ring overloads.
struct WeakUnitReport {
    bool ok = true;
    std::string failed_condition;
    std::vector<int> witness;
};
WeakUnitReport check_weak_unit(const FiniteRing& r, const std::vector<int>& e);

/// Artin-style check: the closed subring generated by x, y, x*, y* and the
/// given nuclear elements must be associative. Throws if a listed generator
/// is not nuclear (message names a witness associator).
bool check_artin(const FiniteRing& r, int x, int y, const std::vector<int>& nuclear_gens);

/// Subring closure under add/neg/mul (and involution when present).
std::vector<int> subring_closure(const FiniteRing& r, std::vector<int> gens);

}  // namespace stg
