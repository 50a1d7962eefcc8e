#include "cjones/deltacalc.hpp"

#include <algorithm>

namespace cjones::deltacalc {

using knotlang::Atom;
using knotlang::KnotExpr;

int delta_connected_sum(int d1, int d2, bool central) {
    return central ? d1 + d2 : d1 + d2 - 2;
}

namespace {

DeltaResult make_result(int h0, int h1_ker, std::string rule) {
    DeltaResult r;
    r.h0 = h0;
    r.h1_ker = h1_ker;
    r.delta = 3 + h1_ker - h0;
    r.trace.push_back(std::move(rule));
    return r;
}

bool nonabelian_like(RepKind k) {
    return k == RepKind::NonAbelian || k == RepKind::Holonomy;
}

DeltaResult atom_rule(const KnotExpr& e, const RepClass& rep) {
    // The boundary-torus count for the Hopf link is representation-independent.
    if (e.atom == Atom::Hopf) return make_result(1, 2, "hopf-boundary-torus");
    if (e.atom == Atom::Whitehead)
        throw MathError(MathError::Kind::NoRule,
                        "no rule covers the whitehead link on its own");

    if (rep.kind == RepKind::AbelianNearIdentity)
        return make_result(1, 0, "abelian-near-identity(" + knotlang::render(e) + ")");

    switch (e.atom) {
    case Atom::Unknot:
        throw MathError(MathError::Kind::NoRule,
                        "the unknot group is abelian: no nonabelian representations exist");
    case Atom::FigureEight:
        return make_result(0, 0, "hyperbolic-rigidity(4_1)");
    case Atom::Trefoil:
        return make_result(0, 0, "torus-knot-rigidity(3_1)");
    default:
        throw MathError(MathError::Kind::Structural, "unexpected atom");
    }
}

DeltaResult combine(DeltaResult left, const DeltaResult& right, bool central) {
    DeltaResult out;
    out.delta = delta_connected_sum(left.delta, right.delta, central);
    out.h0 = std::max(left.h0 + right.h0 - (central ? 3 : 1), 0);
    out.h1_ker = out.delta - 3 + out.h0;
    out.trace = std::move(left.trace);
    out.trace.insert(out.trace.end(), right.trace.begin(), right.trace.end());
    out.trace.push_back(central ? "connected-sum-central" : "connected-sum-noncentral");
    return out;
}

} // namespace

DeltaResult delta_rep(const KnotExpr& expr, const RepClass& rep) {
    switch (expr.kind) {
    case KnotExpr::Kind::Atom:
        return atom_rule(expr, rep);

    case KnotExpr::Kind::Torus:
        if (rep.kind == RepKind::AbelianNearIdentity)
            return make_result(1, 0, "abelian-near-identity(" + knotlang::render(expr) + ")");
        return make_result(0, 0, "torus-knot-rigidity(" + knotlang::render(expr) + ")");

    case KnotExpr::Kind::Satellite:
        if (rep.kind == RepKind::AbelianNearIdentity)
            return make_result(1, 0, "abelian-near-identity(" + knotlang::render(expr) + ")");
        if (!(rep.sat_i && rep.sat_ii && rep.sat_iii && rep.sat_iv))
            throw MathError(MathError::Kind::RuleNotDerivable,
                            "satellite rule requires hypotheses (i)-(iv) to be asserted");
        if (!nonabelian_like(rep.kind))
            throw MathError(MathError::Kind::RuleNotDerivable,
                            "satellite rule requires a nonabelian representation class");
        return make_result(0, 1, "satellite-incompressible-torus");

    case KnotExpr::Kind::Sum: {
        for (const auto& part : expr.parts)
            if (knotlang::is_link_atom(*part))
                throw MathError(MathError::Kind::Structural,
                                "links cannot appear in a connected sum");
        DeltaResult acc = delta_rep(*expr.parts[0], rep);
        for (std::size_t i = 1; i < expr.parts.size(); ++i)
            acc = combine(std::move(acc), delta_rep(*expr.parts[i], rep),
                          rep.annulus_central);
        return acc;
    }
    }
    throw MathError(MathError::Kind::Structural, "malformed knot expression node");
}

} // namespace cjones::deltacalc
