#include "cjones/alexander.hpp"

#include <sstream>

namespace cjones::alexander {

LaurentPoly LaurentPoly::monomial(BigInt c, int e) {
    LaurentPoly p;
    if (c != 0) p.terms_[e] = std::move(c);
    return p;
}

int LaurentPoly::lo() const {
    if (is_zero()) throw MathError(MathError::Kind::Structural, "degree of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::hi() const {
    if (is_zero()) throw MathError(MathError::Kind::Structural, "degree of zero polynomial");
    return terms_.rbegin()->first;
}

BigInt LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e + k] = c;
    return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero())
        throw MathError(MathError::Kind::Structural, "division by zero polynomial");
    if (is_zero()) return {};
    // Shift both operands to ordinary polynomials and long-divide from the top.
    LaurentPoly rem = shifted(-lo());
    LaurentPoly div = d.shifted(-d.lo());
    int result_shift = lo() - d.lo();
    LaurentPoly quot;
    const int ddeg = div.hi();
    const BigInt& dlead = div.terms().rbegin()->second;
    while (!rem.is_zero() && rem.hi() >= ddeg) {
        const BigInt& rlead = rem.terms().rbegin()->second;
        if (rlead % dlead != 0)
            throw MathError(MathError::Kind::Structural, "inexact polynomial division");
        BigInt qc = rlead / dlead;
        int qe = rem.hi() - ddeg;
        quot.add_term(qe, qc);
        rem = rem - div.shifted(qe) * LaurentPoly::constant(qc);
    }
    if (!rem.is_zero())
        throw MathError(MathError::Kind::Structural, "inexact polynomial division");
    return quot.shifted(result_shift);
}

BigInt LaurentPoly::eval_pm1(int sign) const {
    BigInt acc(0);
    for (const auto& [e, c] : terms_)
        acc += (sign == 1 || e % 2 == 0) ? c : -c;
    return acc;
}

CNum LaurentPoly::eval(const CNum& t) const {
    CNum acc(0);
    for (const auto& [e, c] : terms_) {
        CNum power(1);
        CNum base = e >= 0 ? t : CNum(1) / t;
        for (int k = 0; k < std::abs(e); ++k) power = power * base;
        acc += power * Real(c);
    }
    return acc;
}

Real LaurentPoly::coeff_mass() const {
    BigInt acc(0);
    for (const auto& [e, c] : terms_) acc += abs(c);
    return Real(acc);
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << ' ';
        out << c << ':' << e;
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Fox calculus.

LaurentMatrix fox_matrix(const knotlang::Presentation& pres) {
    const int n = pres.generators;
    LaurentMatrix m(n, std::vector<LaurentPoly>(pres.relators.size()));
    for (std::size_t i = 0; i < pres.relators.size(); ++i) {
        // Abelianized Fox derivative: walk the word with a running total
        // exponent s; a letter x_g contributes +t^s and advances s, an
        // inverse letter retreats s and contributes -t^s.
        int s = 0;
        for (const auto& [g, e] : pres.relators[i]) {
            if (e == 1) {
                m[g][i].add_term(s, 1);
                ++s;
            } else {
                --s;
                m[g][i].add_term(s, -1);
            }
        }
    }
    return m;
}

LaurentPoly det_laurent(const LaurentMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw MathError(MathError::Kind::Shape, "determinant of non-square matrix");
    if (n == 0) return LaurentPoly::constant(1);

    // Fraction-free elimination: every division is exact in the Laurent ring.
    LaurentMatrix a = m;
    LaurentPoly prev = LaurentPoly::constant(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return {};
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev);
        prev = a[k][k];
    }
    LaurentPoly det = a[n - 1][n - 1];
    return sign == 1 ? det : -det;
}

LaurentPoly alexander_poly(const knotlang::Presentation& pres) {
    LaurentMatrix f = fox_matrix(pres);
    const int n = pres.generators;
    LaurentMatrix minor;
    minor.reserve(n - 1);
    for (int j = 1; j < n; ++j) minor.push_back(f[j]); // delete the first row
    LaurentPoly det = det_laurent(minor);
    if (det.is_zero())
        throw MathError(MathError::Kind::Structural,
                        "vanishing Alexander determinant for a knot presentation");

    // Canonical representative: center the exponent span, then fix the sign
    // so the value at t = 1 is +1.  A knot determinant always admits this
    // (even span, palindromic coefficients, odd value at 1).
    int span = det.lo() + det.hi();
    if (span % 2 != 0)
        throw MathError(MathError::Kind::Structural,
                        "Alexander determinant has no symmetric representative");
    LaurentPoly p = det.shifted(-span / 2);
    for (const auto& [e, c] : p.terms())
        if (c != p.coeff(-e))
            throw MathError(MathError::Kind::Structural,
                            "Alexander determinant is not palindromic");
    BigInt at1 = p.eval_pm1(1);
    if (at1 == 0)
        throw MathError(MathError::Kind::Structural,
                        "Alexander polynomial vanishes at 1");
    return at1 > 0 ? p : -p;
}

bool odd_at_pm1(const LaurentPoly& p) {
    return p.eval_pm1(1) % 2 != 0 && p.eval_pm1(-1) % 2 != 0;
}

bool abelian_window_ok(const LaurentPoly& p, const CNum& a) {
    if (a.re == 0 && a.im == 0)
        throw MathError(MathError::Kind::Domain, "eigenvalue must be nonzero");
    CNum w = CNum(1) / (a * a);
    Real tol = Real("1e-12") * p.coeff_mass();
    return abs(p.eval(w)) > tol;
}

} // namespace cjones::alexander
