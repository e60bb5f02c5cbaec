#pragma once

#include <map>
#include <string>
#include <vector>

#include "linkconc/rational.hpp"

namespace linkconc {

// Laurent polynomial over Q in the variable t, stored sparsely as a map
// exponent -> nonzero coefficient. The zero polynomial is the empty map.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) { set_coeff(0, c); }
    explicit LaurentPoly(long c) { set_coeff(0, Rational(c)); }

    static LaurentPoly term(const Rational& c, int exp);
    static LaurentPoly t_power(int exp) { return term(Rational(1), exp); }

    // Accepts e.g. "2t^2-5t+2", "t^-1", "-3/2t^4+1", "0".
    static LaurentPoly from_string(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    // Units of Q[t,t^-1] are the single-term polynomials q*t^k, q != 0.
    bool is_unit() const { return terms_.size() == 1; }
    bool is_one() const;

    int min_exp() const; // pre: nonzero
    int max_exp() const; // pre: nonzero
    int span() const { return max_exp() - min_exp(); }

    Rational coeff(int exp) const;
    void set_coeff(int exp, const Rational& c);
    const std::map<int, Rational>& terms() const { return terms_; }

    Rational leading_coeff() const { return coeff(max_exp()); }

    // p(x); x must be nonzero when negative exponents are present.
    Rational eval(const Rational& x) const;

    LaurentPoly shifted(int k) const; // p * t^k
    LaurentPoly conjugate() const;    // p(t^-1)

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

private:
    std::map<int, Rational> terms_;
};

// The canonical associate u*p: minimum exponent 0, coprime integer
// coefficients, positive leading coefficient. Two polynomials are associate
// (equal up to a unit +-q*t^k) iff their canonical forms are equal.
// Throws on zero input.
LaurentPoly canonicalize(const LaurentPoly& p);

inline bool associate(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return canonicalize(a) == canonicalize(b);
}

// Euclidean division on ordinary-polynomial representatives:
// a = q*b + r with r = 0 or span(r) < span(b). pre: b != 0.
void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r);

bool divides(const LaurentPoly& d, const LaurentPoly& a); // pre: d != 0
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& d);

// Canonical gcd via the Euclidean algorithm. Throws if both are zero.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

enum class FoxMilnor { passes, fails, unknown };

struct FoxMilnorResult {
    FoxMilnor verdict = FoxMilnor::unknown;
    LaurentPoly witness; // set iff verdict == passes; f with f(t)*f(1/t) associate to p
    std::string reason;
};

// Bounded search for a Fox-Milnor factorization p = f(t)*f(t^-1) up to
// units. `passes` always carries a verified witness; `fails` only on a
// complete disproof (asymmetry, |p(-1)| not a square, odd span, or an
// exhausted search); everything else is `unknown`.
// pre: p != 0 and p(1) = +-1 (else throws "not a knot Alexander polynomial").
FoxMilnorResult fox_milnor_check(const LaurentPoly& p, int max_degree = 6);

std::string to_string(const LaurentPoly& p);

} // namespace linkconc
