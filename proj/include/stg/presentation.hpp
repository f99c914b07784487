#pragma once

#include <string>
#include <vector>

namespace stg {

/// Free-group word: signed 1-based generator indices, positive = generator,
/// negative = inverse. Stored freely reduced after reduce().
struct Word {
    std::vector<int> syms;

    Word() = default;
    explicit Word(std::vector<int> s) : syms(std::move(s)) {}
    bool empty() const { return syms.empty(); }
    size_t size() const { return syms.size(); }
};

Word reduce(Word w);
Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
/// [x, y] = x y x^-1 y^-1
Word commutator(const Word& a, const Word& b);
/// a^b... conjugate(a, b) = b a b^-1 (left action convention: ^b a)
Word conjugate(const Word& a, const Word& b);

struct GenKey {
    enum class Kind { LongRoot, ShortRoot, Central } kind = Kind::LongRoot;
    int root = -1;     // root index (LongRoot/ShortRoot)
    int variant = 0;   // B-type long roots carry two names x_{ij} / x_{-j,-i}
    int elt = 0;       // ring / delta / family element id
    bool operator==(const GenKey&) const = default;
};

struct Presentation {
    int ngens = 0;
    std::vector<std::string> names;  // optional; empty or size ngens
    std::vector<GenKey> keys;        // optional; empty or size ngens
    std::vector<Word> relators;
    std::vector<std::string> tags;   // provenance per relator; empty or parallel

    void add_relator(Word w, const std::string& tag);
    std::string serialize() const;
    static Presentation parse(const std::string& text);
    /// structural equality of gens/names/relators (tags ignored)
    bool same_as(const Presentation& o) const;
};

}  // namespace stg
