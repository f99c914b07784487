#include "stg/presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace stg {

Word reduce(Word w) {
    std::vector<int> out;
    for (int s : w.syms) {
        if (s == 0) throw std::runtime_error("word: zero symbol");
        if (!out.empty() && out.back() == -s)
            out.pop_back();
        else
            out.push_back(s);
    }
    w.syms = std::move(out);
    return w;
}

Word invert(const Word& w) {
    Word r;
    r.syms.reserve(w.syms.size());
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) r.syms.push_back(-*it);
    return r;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.syms.insert(r.syms.end(), b.syms.begin(), b.syms.end());
    return reduce(r);
}

Word commutator(const Word& a, const Word& b) { return concat(concat(a, b), concat(invert(a), invert(b))); }

Word conjugate(const Word& a, const Word& b) { return concat(concat(b, a), invert(b)); }

void Presentation::add_relator(Word w, const std::string& tag) {
    w = reduce(std::move(w));
    if (w.empty()) return;
    for (int s : w.syms)
        if (s == 0 || s > ngens || s < -ngens) throw std::runtime_error("relator symbol out of range");
    relators.push_back(std::move(w));
    tags.push_back(tag);
}

std::string Presentation::serialize() const {
    std::ostringstream os;
    os << "gens " << ngens << "\n";
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
        if (!names[i].empty()) os << "name " << (i + 1) << ' ' << names[i] << "\n";
    for (size_t r = 0; r < relators.size(); ++r) {
        os << "rel";
        for (int s : relators[r].syms) os << ' ' << s;
        if (r < tags.size() && !tags[r].empty()) os << "  # " << tags[r];
        os << "\n";
    }
    return os.str();
}

Presentation Presentation::parse(const std::string& text) {
    Presentation p;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool have_gens = false;
    auto bad = [&](const std::string& msg) {
        throw std::runtime_error("presentation parse error at line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "gens") {
            if (have_gens) bad("duplicate gens line");
            if (!(ls >> p.ngens) || p.ngens < 0) bad("bad generator count");
            p.names.assign(p.ngens, "");
            have_gens = true;
        } else if (kw == "name") {
            if (!have_gens) bad("name before gens");
            int i;
            if (!(ls >> i) || i < 1 || i > p.ngens) bad("name index out of range");
            std::string rest;
            std::getline(ls, rest);
            size_t b = rest.find_first_not_of(" \t");
            p.names[i - 1] = b == std::string::npos ? "" : rest.substr(b);
        } else if (kw == "rel") {
            if (!have_gens) bad("rel before gens");
            Word w;
            int s;
            while (ls >> s) {
                if (s == 0 || s > p.ngens || s < -p.ngens) bad("relator symbol out of range");
                w.syms.push_back(s);
            }
            p.relators.push_back(reduce(w));
            p.tags.push_back("");
        } else {
            bad("unknown keyword '" + kw + "'");
        }
    }
    if (!have_gens) {
        lineno = 0;
        bad("missing gens line");
    }
    return p;
}

bool Presentation::same_as(const Presentation& o) const {
    return ngens == o.ngens && names == o.names && relators.size() == o.relators.size() &&
           [&] {
               for (size_t i = 0; i < relators.size(); ++i)
                   if (relators[i].syms != o.relators[i].syms) return false;
               return true;
           }();
}

}  // namespace stg
