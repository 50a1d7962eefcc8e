#pragma once

#include "cjones/knotlang.hpp"
#include "cjones/numkit.hpp"

#include <map>
#include <string>
#include <vector>

namespace cjones::alexander {

using numkit::BigInt;
using numkit::CNum;
using numkit::Real;

// Laurent polynomial in t over the integers.  Zero coefficients are never
// stored, so is_zero() is an emptiness check and degree bounds are exact.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(BigInt c) { return monomial(std::move(c), 0); }
    static LaurentPoly monomial(BigInt c, int e);

    bool is_zero() const { return terms_.empty(); }
    int lo() const;
    int hi() const;
    const std::map<int, BigInt>& terms() const { return terms_; }
    BigInt coeff(int e) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    LaurentPoly shifted(int k) const; // multiply by t^k
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    void add_term(int e, const BigInt& c); // in-place += c t^e

    BigInt eval_pm1(int sign) const; // value at t = +1 or t = -1
    CNum eval(const CNum& t) const;
    Real coeff_mass() const; // sum of |coefficients|

    std::string to_string() const; // ascending "c:e" pairs, "0" when zero

private:
    std::map<int, BigInt> terms_;
};

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

// n x (n-1) matrix of abelianized Fox derivatives: entry (j, i) is
// d r_i / d x_j with every generator sent to t.  Its column sums vanish.
LaurentMatrix fox_matrix(const knotlang::Presentation& pres);

// Exact determinant by fraction-free (Bareiss) elimination.
LaurentPoly det_laurent(const LaurentMatrix& m);

// Determinant of the Fox matrix with one row deleted, normalized to the
// symmetric representative with poly(t) = poly(1/t) and value +1 at t = 1.
LaurentPoly alexander_poly(const knotlang::Presentation& pres);

// True iff the values at t = 1 and t = -1 are both odd.
bool odd_at_pm1(const LaurentPoly& p);

// Nonvanishing test for p at a^{-2}, relative to the coefficient mass:
// |p(a^{-2})| > 1e-12 * sum |coefficients|.
bool abelian_window_ok(const LaurentPoly& p, const CNum& a);

} // namespace cjones::alexander
