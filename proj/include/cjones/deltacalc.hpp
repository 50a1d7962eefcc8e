#pragma once

#include "cjones/knotlang.hpp"

#include <string>
#include <vector>

namespace cjones::deltacalc {

enum class RepKind { AbelianNearIdentity, NonAbelian, Holonomy };

// Declared representation class for the rule engine.  The satellite flags
// assert the four hypotheses of the satellite rule (they hold for small
// deformations of the holonomy representation); annulus_central declares
// that the restriction to the connected-sum annulus is +-identity.
struct RepClass {
    RepKind kind = RepKind::NonAbelian;
    bool annulus_central = false;
    bool sat_i = false;
    bool sat_ii = false;
    bool sat_iii = false;
    bool sat_iv = false;
};

// delta = 3 + h1_ker - h0 always holds for produced results.
struct DeltaResult {
    int delta = 0;
    int h0 = 0;
    int h1_ker = 0;
    std::vector<std::string> trace;
};

// Applies the derivable rules recursively over the expression, refusing
// (no-rule / rule-not-derivable errors) whenever the input falls outside
// what the rules cover.
DeltaResult delta_rep(const knotlang::KnotExpr& expr, const RepClass& rep);

// Connected-sum combination: d1 + d2 - 2, or d1 + d2 when the annulus
// representation is central.
int delta_connected_sum(int d1, int d2, bool central);

} // namespace cjones::deltacalc
