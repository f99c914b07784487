#pragma once

#include <variant>

#include "stg/bring.hpp"

namespace stg {

enum class VarietyId { R2, R2Eps, R3, R2Star, R4, R2B, R2EpsDelta, R44 };

VarietyId variety_from_string(const std::string& s);
std::string variety_to_string(VarietyId v);

struct RingQuotient {
    FiniteRing algebra;
    std::vector<int> projection;  // old id -> new id
};
struct BRingQuotient {
    BRing algebra;
    std::vector<int> proj_r, proj_delta;
};
struct F4Quotient {
    F4Ring algebra;
    std::vector<int> proj_r, proj_s;
};

/// Universal factor-algebra in the given variety, computed as the smallest
/// congruence containing all instances of the defining identities (fixpoint
/// closure over the finite carrier). The result always satisfies the variety
/// axioms; it may be the zero algebra.
RingQuotient quotient(VarietyId v, const FiniteRing& r);
BRingQuotient quotient(VarietyId v, const BRing& b);
F4Quotient quotient(VarietyId v, const F4Ring& f);

/// I_eps/boolean split of an algebra already satisfying the r2eps axioms:
/// ideal part = image of p^2 - p, boolean part = image of p^2.
struct IdealDecomposition {
    std::vector<int> ideal_part;    // element ids, sorted
    std::vector<int> boolean_part;  // element ids (the section image), sorted
};
IdealDecomposition ideal_decompose_r2eps(const FiniteRing& r);

/// I_4 = image of p(q - q*) inside an algebra satisfying the r4 axioms
/// (the r44 analog uses the same formula per sort).
std::vector<int> ideal_i4(const FiniteRing& r);

/// Subdirect decomposition search: true iff the algebra embeds in a product
/// of the given irreducible factors (checked by enumerating congruences with
/// quotient isomorphic to a factor and intersecting their kernels).
bool is_subdirect_product_of(const FiniteRing& r, const std::vector<FiniteRing>& factors);

bool rings_isomorphic(const FiniteRing& a, const FiniteRing& b);

}  // namespace stg
