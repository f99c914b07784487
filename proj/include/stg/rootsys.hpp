#pragma once

#include <string>
#include <vector>

namespace stg {

using Vec = std::vector<int>;

enum class Family { A, B, C, BC, D, E, F };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

struct RootSubsetReport {
    std::vector<int> subset;
    bool is_unipotent = false;
    std::vector<int> extreme_roots;  // empty unless unipotent
};

/// Chevalley-basis sign table for a simply laced system.
/// n(a, b) is 0 when root a + root b is not a root, otherwise +-1.
class StructureConstants {
public:
    int n(int a, int b) const { return table_[a * static_cast<int>(count_) + b]; }
    int size() const { return static_cast<int>(count_); }

private:
    friend class RootSystem;
    std::size_t count_ = 0;
    std::vector<signed char> table_;
};

/// A finite crystallographic root system in its standard integer realization.
/// F4 is scaled by 2 so half-integer roots become integer vectors; E-series
/// use the Bourbaki realization inside R^8, likewise scaled by 2.
/// Roots are stored in lexicographic order of their coordinate vectors.
class RootSystem {
public:
    static RootSystem build(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    int dim() const { return dim_; }
    int size() const { return static_cast<int>(roots_.size()); }

    const Vec& root(int i) const { return roots_[i]; }
    int index_of(const Vec& v) const;  // -1 if absent
    int neg_index(int i) const { return neg_[i]; }

    long long dot(int i, int j) const;
    long long norm_sq(int i) const { return dot(i, i); }
    bool is_long(int i) const { return norm_sq(i) == long_norm_; }
    bool is_short(int i) const { return norm_sq(i) == short_norm_; }
    bool simply_laced() const { return short_norm_ == long_norm_; }

    bool is_positive(int i) const;       // lexicographic positivity
    const std::vector<int>& base() const { return base_; }
    int height(int i) const { return height_[i]; }

    /// Index of the reflection of root i through root via.
    int reflect(int i, int via) const;
    Vec reflect_vec(const Vec& x, int via) const;

    /// Roots strictly inside the open cone spanned by two independent roots.
    std::vector<int> interval(int a, int b) const;

    /// Unipotent test (exact Fourier-Motzkin over the rationals) and extreme rays.
    RootSubsetReport classify_subset(const std::vector<int>& subset) const;

    /// Orbit partition of `targets` under the subgroup generated by the
    /// reflections in `reflection_gens`. Orbits are sorted by least element.
    std::vector<std::vector<int>> weyl_orbits(const std::vector<int>& reflection_gens,
                                              const std::vector<int>& targets) const;

    /// Simply laced only; built by the extraspecial-pair method over the
    /// height-then-lex order on positive roots. Cached after first call.
    const StructureConstants& structure_constants() const;

    std::string serialize() const;
    static RootSystem parse(const std::string& text);

private:
    RootSystem() = default;
    void finish();  // sorts roots, computes negatives, base, heights; validates

    Family family_ = Family::A;
    int rank_ = 0;
    int dim_ = 0;
    std::vector<Vec> roots_;
    std::vector<int> neg_;
    std::vector<int> base_;
    std::vector<int> height_;
    long long short_norm_ = 0, long_norm_ = 0;
    mutable StructureConstants sc_;
    mutable bool sc_built_ = false;
};

}  // namespace stg
