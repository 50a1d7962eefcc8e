#pragma once

#include "cjones/errors.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cjones::knotlang {

enum class Atom { Unknot, Trefoil, FigureEight, Hopf, Whitehead };

struct KnotExpr;
using KnotPtr = std::shared_ptr<const KnotExpr>;

// Expression tree for knot/link descriptions.  Connected sums are kept
// flattened: a Sum node holds two or more parts, none of which is a Sum.
struct KnotExpr {
    enum class Kind { Atom, Torus, Satellite, Sum };

    Kind kind;
    Atom atom = Atom::Unknot;   // Kind::Atom
    int p = 0, q = 0;           // Kind::Torus
    std::string pattern;        // Kind::Satellite
    KnotPtr companion;          // Kind::Satellite
    std::vector<KnotPtr> parts; // Kind::Sum
};

KnotPtr make_atom(Atom a);
KnotPtr make_torus(int p, int q);
KnotPtr make_satellite(std::string pattern, KnotPtr companion);
KnotPtr make_sum(std::vector<KnotPtr> parts);

// Parses the expression grammar
//   expr := term ('#' term)*
//   term := atom | 'sat(' name ',' expr ')' | 'T(' int ',' int ')'
// with atoms U, 3_1, 4_1, hopf, whitehead.  Whitespace between tokens is
// ignored.  Failures raise ParseError carrying the byte offset.  The link
// atoms (hopf, whitehead) cannot appear as summands of a connected sum.
KnotPtr parse_knot(std::string_view text);

// Canonical text form: round-trips through parse_knot.
std::string render(const KnotExpr& k);

bool is_link_atom(const KnotExpr& k);

// A word in the braid group B_n: letters are (i, e) with 1 <= i < strands
// and e = +1 or -1, meaning sigma_i or its inverse.
struct BraidWord {
    int strands = 0;
    std::vector<std::pair<int, int>> letters;
};

// Parses whitespace-separated tokens "s<i>" / "s<i>^-1" with i >= 1.
BraidWord parse_braid(std::string_view text);

// Group presentation over generators x_0..x_{generators-1}; each relator is
// a word of (generator, +-1) pairs.
struct Presentation {
    int generators = 0;
    std::vector<std::vector<std::pair<int, int>>> relators;
};

// Presentation of the knot group of the braid closure: relators
// beta(x_j) x_j^{-1} for j = 0..n-2.  The closure must be a single knot;
// multi-component closures raise MathError(UnsupportedLink).
Presentation presentation_from_braid(const BraidWord& w);

} // namespace cjones::knotlang
