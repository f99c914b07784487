#pragma once

#include <optional>

#include "stg/bring.hpp"

namespace stg {

enum class EtaleKind { Split, Field };

struct TitsRing {
    enum class Kind { Ring, B, F4 } kind = Kind::Ring;
    FiniteRing ring;  // A33
    BRing bring;      // B33, C33, 2D43, 1D44, 2A53
    F4Ring f4;        // F044, 2E264
};

/// Build the Phi-ring of the named small Tits-index recipe over a finite
/// commutative unital ring K. The 2-labels take an etale quadratic recipe.
TitsRing tits_ring(const std::string& label, const FiniteRing& k,
                   std::optional<EtaleKind> etale = std::nullopt);

bool tits_label_valid(const std::string& label);
bool tits_label_needs_etale(const std::string& label);

}  // namespace stg
