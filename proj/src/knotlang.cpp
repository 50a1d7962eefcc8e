#include "cjones/knotlang.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace cjones::knotlang {

KnotPtr make_atom(Atom a) {
    auto k = std::make_shared<KnotExpr>();
    k->kind = KnotExpr::Kind::Atom;
    k->atom = a;
    return k;
}

KnotPtr make_torus(int p, int q) {
    if (p < 2 || q < 2)
        throw MathError(MathError::Kind::Domain, "torus parameters must be at least 2");
    if (std::gcd(p, q) != 1)
        throw MathError(MathError::Kind::Domain, "torus parameters must be coprime");
    auto k = std::make_shared<KnotExpr>();
    k->kind = KnotExpr::Kind::Torus;
    k->p = p;
    k->q = q;
    return k;
}

KnotPtr make_satellite(std::string pattern, KnotPtr companion) {
    if (pattern.empty())
        throw MathError(MathError::Kind::Domain, "satellite pattern name is empty");
    auto k = std::make_shared<KnotExpr>();
    k->kind = KnotExpr::Kind::Satellite;
    k->pattern = std::move(pattern);
    k->companion = std::move(companion);
    return k;
}

KnotPtr make_sum(std::vector<KnotPtr> parts) {
    std::vector<KnotPtr> flat;
    for (auto& p : parts) {
        if (p->kind == KnotExpr::Kind::Sum)
            flat.insert(flat.end(), p->parts.begin(), p->parts.end());
        else
            flat.push_back(std::move(p));
    }
    if (flat.size() < 2)
        throw MathError(MathError::Kind::Structural, "connected sum needs at least 2 parts");
    auto k = std::make_shared<KnotExpr>();
    k->kind = KnotExpr::Kind::Sum;
    k->parts = std::move(flat);
    return k;
}

bool is_link_atom(const KnotExpr& k) {
    return k.kind == KnotExpr::Kind::Atom &&
           (k.atom == Atom::Hopf || k.atom == Atom::Whitehead);
}

// ---------------------------------------------------------------------------
// Expression parser.

namespace {

struct ExprParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(pos, std::string("expected '") + c + "' " + what);
        ++pos;
    }

    static bool word_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string read_word(const char* what) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && word_char(text[pos])) ++pos;
        if (pos == start) throw ParseError(start, std::string("expected ") + what);
        return std::string(text.substr(start, pos - start));
    }

    int read_int(const char* what) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || pos - start > 6)
            throw ParseError(start, std::string("expected ") + what);
        return std::stoi(std::string(text.substr(start, pos - start)));
    }

    KnotPtr parse_term() {
        skip_ws();
        std::size_t start = pos;
        std::string word = read_word("a knot term");
        if (word == "T") {
            expect('(', "after 'T'");
            std::size_t p_at = pos;
            skip_ws();
            p_at = pos;
            int p = read_int("an integer torus parameter");
            expect(',', "between torus parameters");
            skip_ws();
            std::size_t q_at = pos;
            int q = read_int("an integer torus parameter");
            expect(')', "after torus parameters");
            if (p < 2) throw ParseError(p_at, "torus parameter must be at least 2");
            if (q < 2) throw ParseError(q_at, "torus parameter must be at least 2");
            if (std::gcd(p, q) != 1)
                throw ParseError(p_at, "torus parameters must be coprime");
            return make_torus(p, q);
        }
        if (word == "sat") {
            expect('(', "after 'sat'");
            std::string pattern = read_word("pattern name");
            if (std::isdigit(static_cast<unsigned char>(pattern[0])))
                throw ParseError(pos - pattern.size(), "pattern name cannot start with a digit");
            expect(',', "between pattern and companion");
            KnotPtr companion = parse_expr();
            expect(')', "after satellite companion");
            return make_satellite(std::move(pattern), std::move(companion));
        }
        if (word == "U") return make_atom(Atom::Unknot);
        if (word == "3_1") return make_atom(Atom::Trefoil);
        if (word == "4_1") return make_atom(Atom::FigureEight);
        if (word == "hopf") return make_atom(Atom::Hopf);
        if (word == "whitehead") return make_atom(Atom::Whitehead);
        throw ParseError(start, "unknown knot name '" + word + "'");
    }

    KnotPtr parse_expr() {
        std::vector<KnotPtr> parts;
        std::vector<std::size_t> offsets;
        skip_ws();
        offsets.push_back(pos);
        parts.push_back(parse_term());
        while (peek_is('#')) {
            ++pos;
            skip_ws();
            offsets.push_back(pos);
            parts.push_back(parse_term());
        }
        if (parts.size() == 1) return parts.front();
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (is_link_atom(*parts[i]))
                throw ParseError(offsets[i],
                                 "links cannot appear as connected-sum terms");
        return make_sum(std::move(parts));
    }
};

} // namespace

KnotPtr parse_knot(std::string_view text) {
    ExprParser p{text};
    KnotPtr k = p.parse_expr();
    if (!p.at_end()) throw ParseError(p.pos, "unexpected trailing input");
    return k;
}

std::string render(const KnotExpr& k) {
    switch (k.kind) {
    case KnotExpr::Kind::Atom:
        switch (k.atom) {
        case Atom::Unknot: return "U";
        case Atom::Trefoil: return "3_1";
        case Atom::FigureEight: return "4_1";
        case Atom::Hopf: return "hopf";
        case Atom::Whitehead: return "whitehead";
        }
        break;
    case KnotExpr::Kind::Torus:
        return "T(" + std::to_string(k.p) + "," + std::to_string(k.q) + ")";
    case KnotExpr::Kind::Satellite:
        return "sat(" + k.pattern + "," + render(*k.companion) + ")";
    case KnotExpr::Kind::Sum: {
        std::string out;
        for (std::size_t i = 0; i < k.parts.size(); ++i) {
            if (i) out += "#";
            out += render(*k.parts[i]);
        }
        return out;
    }
    }
    throw MathError(MathError::Kind::Structural, "malformed knot expression node");
}

// ---------------------------------------------------------------------------
// Braid words.

BraidWord parse_braid(std::string_view text) {
    BraidWord w;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    int max_index = 0;
    for (;;) {
        skip_ws();
        if (pos >= text.size()) break;
        std::size_t start = pos;
        if (text[pos] != 's')
            throw ParseError(start, "expected a braid letter 's<i>' or 's<i>^-1'");
        ++pos;
        std::size_t digits_at = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits_at || pos - digits_at > 6)
            throw ParseError(digits_at, "expected a generator index after 's'");
        int index = std::stoi(std::string(text.substr(digits_at, pos - digits_at)));
        if (index < 1)
            throw ParseError(start, "braid index must be at least 1");
        int exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            if (text.substr(pos, 2) != "-1")
                throw ParseError(pos, "expected '-1' after '^'");
            pos += 2;
            exponent = -1;
        }
        if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
            throw ParseError(pos, "expected whitespace between braid letters");
        w.letters.emplace_back(index, exponent);
        max_index = std::max(max_index, index);
    }
    if (w.letters.empty()) throw ParseError(0, "empty braid word");
    w.strands = max_index + 1;
    return w;
}

namespace {

using Word = std::vector<std::pair<int, int>>;

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.emplace_back(it->first, -it->second);
    return out;
}

Word concat(const Word& a, const Word& b, const Word& c = {}) {
    Word out;
    out.reserve(a.size() + b.size() + c.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

} // namespace

Presentation presentation_from_braid(const BraidWord& w) {
    const int n = w.strands;

    // The closure is a knot exactly when the underlying permutation of the
    // strands is a single n-cycle.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (const auto& [i, e] : w.letters) std::swap(perm[i - 1], perm[i]);
    int cycle_len = 0, at = 0;
    do {
        at = perm[at];
        ++cycle_len;
    } while (at != 0 && cycle_len <= n);
    if (cycle_len != n)
        throw MathError(MathError::Kind::UnsupportedLink,
                        "braid closure has more than one component");

    // Images of the free generators under the braid automorphism, letters
    // applied left to right:
    //   sigma_i:  x_{i-1} -> x_{i-1} x_i x_{i-1}^{-1},  x_i -> x_{i-1}
    //   sigma_i^{-1}:  x_{i-1} -> x_i,  x_i -> x_i^{-1} x_{i-1} x_i
    std::vector<Word> images(n);
    for (int g = 0; g < n; ++g) images[g] = {{g, 1}};
    for (const auto& [i, e] : w.letters) {
        Word& a = images[i - 1];
        Word& b = images[i];
        if (e == 1) {
            Word new_a = concat(a, b, inverse(a));
            b = a;
            a = std::move(new_a);
        } else {
            Word new_b = concat(inverse(b), a, b);
            a = b;
            b = std::move(new_b);
        }
    }

    Presentation pres;
    pres.generators = n;
    pres.relators.reserve(n - 1);
    for (int j = 0; j + 1 < n; ++j) {
        Word r = images[j];
        r.emplace_back(j, -1);
        pres.relators.push_back(std::move(r));
    }
    return pres;
}

} // namespace cjones::knotlang
