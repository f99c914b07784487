#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stg {

/// Invariant-factor description of a finitely generated abelian group:
/// factors d1 | d2 | ... (each >= 2) plus a free rank.
struct AbelianInvariants {
    std::vector<long long> factors;
    long long free_rank = 0;

    bool trivial() const { return factors.empty() && free_rank == 0; }
    long long order() const;  // -1 when infinite
    bool operator==(const AbelianInvariants& o) const {
        return factors == o.factors && free_rank == o.free_rank;
    }
    std::string str() const;  // "d1,d2,...;rank=r"
};

/// Parse "C2xC2", "C2 x C3", "1", or "trivial" into canonical invariants.
AbelianInvariants invariants_from_cyclic(const std::vector<long long>& orders);

using IMat = std::vector<std::vector<long long>>;  // row-major
using BigMat = std::vector<std::vector<boost::multiprecision::cpp_int>>;

struct SnfResult {
    AbelianInvariants invariants;  // of the cokernel of M (valid when invariants_exact)
    bool invariants_exact = true;  // false when an invariant factor exceeds 64 bits
    std::vector<boost::multiprecision::cpp_int> diagonal;  // d1 | d2 | ..., 1s kept, 0s dropped
    BigMat left, right;            // L * M * R = diag(diagonal), unimodular
    bool transforms_valid = false;
};

/// Smith normal form over Z. Uses 64-bit arithmetic with overflow detection
/// and transparently redoes the computation in arbitrary precision when a
/// product would overflow.
SnfResult smith_normal_form(const IMat& m, bool want_transforms = false);

/// Invariants of the abelian group Z^cols / (row span of m).
AbelianInvariants cokernel_invariants(const IMat& m, int cols);

}  // namespace stg
