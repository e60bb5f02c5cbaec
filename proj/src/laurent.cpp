#include "linkconc/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace linkconc {

LaurentPoly LaurentPoly::term(const Rational& c, int exp) {
    LaurentPoly p;
    p.set_coeff(exp, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw Error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw Error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(int exp, const Rational& c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

Rational LaurentPoly::eval(const Rational& x) const {
    if (x == 0) {
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            if (e < 0) throw Error("evaluation at 0 with negative exponents");
            if (e == 0) acc += c;
        }
        return acc;
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational p(1);
        mpz_class num = x.get_num(), den = x.get_den();
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_class nk, dk;
        mpz_pow_ui(nk.get_mpz_t(), num.get_mpz_t(), k);
        mpz_pow_ui(dk.get_mpz_t(), den.get_mpz_t(), k);
        if (e >= 0)
            p = Rational(nk, dk);
        else
            p = Rational(dk, nk);
        p.canonicalize();
        acc += c * p;
    }
    return acc;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::conjugate() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto it = r.terms_.find(ea + eb);
            if (it == r.terms_.end()) {
                Rational v = ca * cb;
                if (v != 0) r.terms_[ea + eb] = v;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly canonicalize(const LaurentPoly& p) {
    if (p.is_zero()) throw Error("zero polynomial has no canonical associate");
    LaurentPoly q = p.shifted(-p.min_exp());
    // content = gcd(numerators) / lcm(denominators); dividing by it gives
    // integer coefficients with content 1.
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : q.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (q.leading_coeff() < 0) content = -content;
    LaurentPoly r;
    for (const auto& [e, c] : q.terms()) {
        Rational v = c / content;
        r.set_coeff(e, v);
    }
    return r;
}

void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    q = LaurentPoly();
    r = a;
    if (a.is_zero()) return;
    const int db = b.span();
    const Rational lb = b.leading_coeff();
    const int bmax = b.max_exp();
    while (!r.is_zero() && r.span() >= db) {
        // Cancel the leading term of r against the leading term of b.
        Rational c = r.leading_coeff() / lb;
        int shift = r.max_exp() - bmax;
        LaurentPoly mono = LaurentPoly::term(c, shift);
        q += mono;
        r -= mono * b;
    }
}

bool divides(const LaurentPoly& d, const LaurentPoly& a) {
    if (a.is_zero()) return true;
    LaurentPoly q, r;
    divmod(a, d, q, r);
    return r.is_zero();
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& d) {
    LaurentPoly q, r;
    divmod(a, d, q, r);
    if (!r.is_zero()) throw Error("exact_div: not divisible");
    return q;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw Error("gcd(0, 0) is undefined");
    if (a.is_zero()) return canonicalize(b);
    if (b.is_zero()) return canonicalize(a);
    LaurentPoly x = a, y = b;
    while (!y.is_zero()) {
        LaurentPoly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return canonicalize(x);
}

namespace {

// ---- polynomial text form ----------------------------------------------
//
// term := [sign] [coefficient] [ 't' [ '^' integer ] ]
// coefficient := integer [ '/' integer ]
// Multiplication signs and whitespace are tolerated.

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*')) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    bool peek_digit() { return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); }

    Integer parse_uint() {
        size_t start = i;
        while (peek_digit()) ++i;
        if (start == i) throw Error("bad polynomial literal: digit expected in '" + s + "'");
        return Integer(s.substr(start, i - start));
    }

    int parse_int() {
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        Integer v = parse_uint();
        if (!v.fits_sint_p()) throw Error("exponent out of range in '" + s + "'");
        return sign * static_cast<int>(v.get_si());
    }

    LaurentPoly parse() {
        LaurentPoly p;
        skip_ws();
        if (done()) throw Error("empty polynomial literal");
        bool first = true;
        while (!done()) {
            int sign = 1;
            skip_ws();
            if (s[i] == '+' || s[i] == '-') {
                if (s[i] == '-') sign = -1;
                ++i;
                skip_ws();
            } else if (!first) {
                throw Error("bad polynomial literal: '" + s + "'");
            }
            first = false;
            Rational coeff(1);
            bool have_coeff = false;
            if (peek_digit()) {
                Integer num = parse_uint();
                Integer den(1);
                skip_ws();
                if (i < s.size() && s[i] == '/') {
                    ++i;
                    skip_ws();
                    den = parse_uint();
                    if (den == 0) throw Error("zero denominator in '" + s + "'");
                }
                coeff = Rational(num, den);
                coeff.canonicalize();
                have_coeff = true;
            }
            skip_ws();
            int exp = 0;
            if (i < s.size() && (s[i] == 't' || s[i] == 'T')) {
                ++i;
                exp = 1;
                skip_ws();
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    skip_ws();
                    exp = parse_int();
                }
            } else if (!have_coeff) {
                throw Error("bad polynomial literal: '" + s + "'");
            }
            if (sign < 0) coeff = -coeff;
            p += LaurentPoly::term(coeff, exp);
            skip_ws();
        }
        return p;
    }
};

std::string coeff_str(const Rational& c) {
    return c.get_str();
}

} // namespace

LaurentPoly LaurentPoly::from_string(const std::string& text) {
    Parser p(text);
    return p.parse();
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // Highest exponent first, matching the usual way Alexander polynomials
    // are written.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const int e = it->first;
        Rational c = it->second;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += (c < 0) ? "-" : "+";
            if (c < 0) c = -c;
        }
        const bool unit_coeff = (c == 1);
        if (e == 0) {
            out += coeff_str(c);
        } else {
            if (!unit_coeff) out += coeff_str(c);
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

// Divisors of |n| (both signs), n != 0. Caps the list at `limit`; returns
// false when the cap is hit.
bool signed_divisors(const Integer& n, size_t limit, std::vector<Integer>& out) {
    out.clear();
    Integer a = abs(n);
    for (Integer d(1); d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(-d);
            Integer e = a / d;
            if (e != d) {
                out.push_back(e);
                out.push_back(-e);
            }
            if (out.size() > limit) return false;
        }
    }
    return true;
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

} // namespace

FoxMilnorResult fox_milnor_check(const LaurentPoly& p, int max_degree) {
    if (p.is_zero()) throw Error("not a knot Alexander polynomial: zero");
    LaurentPoly c = canonicalize(p);
    Rational at1 = c.eval(Rational(1));
    if (at1 != 1 && at1 != -1) throw Error("not a knot Alexander polynomial: p(1) != +-1");

    FoxMilnorResult res;
    if (c.is_one()) {
        res.verdict = FoxMilnor::passes;
        res.witness = LaurentPoly(1);
        res.reason = "trivial factorization";
        return res;
    }
    if (!(canonicalize(c.conjugate()) == c)) {
        res.verdict = FoxMilnor::fails;
        res.reason = "polynomial is not symmetric under t -> 1/t";
        return res;
    }
    if (c.span() % 2 != 0) {
        res.verdict = FoxMilnor::fails;
        res.reason = "odd degree span";
        return res;
    }
    Rational atm1 = c.eval(Rational(-1));
    if (!is_perfect_square(abs(atm1.get_num()))) {
        res.verdict = FoxMilnor::fails;
        res.reason = "|p(-1)| is not a perfect square";
        return res;
    }
    const int d = c.span() / 2;
    if (d > max_degree) {
        res.verdict = FoxMilnor::unknown;
        res.reason = "factor degree " + std::to_string(d) + " exceeds search bound";
        return res;
    }

    // Kronecker search: a witness can be taken primitive with integer
    // coefficients, and f(x) divides c(x) at every integer x. Enumerate
    // divisor tuples at d+1 sample points and interpolate.
    std::vector<Integer> points;
    for (int v = 1; static_cast<int>(points.size()) < d + 1; ++v) {
        for (Integer x : {Integer(v), Integer(-v)}) {
            if (static_cast<int>(points.size()) == d + 1) break;
            Rational val = c.eval(Rational(x));
            if (val != 0) points.push_back(x);
        }
    }
    std::vector<std::vector<Integer>> choices(points.size());
    constexpr size_t kDivisorCap = 4096;
    double combinations = 1;
    for (size_t k = 0; k < points.size(); ++k) {
        Rational val = c.eval(Rational(points[k]));
        if (!signed_divisors(val.get_num(), kDivisorCap, choices[k])) {
            res.verdict = FoxMilnor::unknown;
            res.reason = "divisor enumeration too large";
            return res;
        }
        if (points[k] == 1 || points[k] == -1) {
            // f(1) = +-1 exactly; f(-1)^2 = |c(-1)|.
            std::vector<Integer> keep;
            for (const Integer& v : choices[k]) {
                if (points[k] == 1 && abs(v) == 1) keep.push_back(v);
                if (points[k] == -1 && v * v == abs(atm1.get_num())) keep.push_back(v);
            }
            choices[k] = keep;
        }
        combinations *= static_cast<double>(std::max<size_t>(choices[k].size(), 1));
        if (combinations > 2e7) {
            res.verdict = FoxMilnor::unknown;
            res.reason = "search space exceeds bound";
            return res;
        }
    }

    std::vector<size_t> idx(points.size(), 0);
    std::vector<Integer> values(points.size());
    while (true) {
        for (size_t k = 0; k < points.size(); ++k) values[k] = choices[k][idx[k]];
        // Lagrange interpolation through (points, values), degree <= d.
        std::vector<Rational> coeffs(points.size(), Rational(0));
        {
            // Build incrementally via Newton divided differences.
            std::vector<Rational> dd(points.size());
            for (size_t k = 0; k < points.size(); ++k) dd[k] = Rational(values[k]);
            for (size_t level = 1; level < points.size(); ++level)
                for (size_t k = points.size() - 1; k >= level; --k) {
                    Rational denom = Rational(points[k] - points[k - level]);
                    dd[k] = (dd[k] - dd[k - 1]) / denom;
                    if (k == level) break;
                }
            // Expand Newton form into monomial coefficients.
            std::vector<Rational> poly{Rational(0)};
            std::vector<Rational> basis{Rational(1)};
            for (size_t k = 0; k < points.size(); ++k) {
                for (size_t j = 0; j < basis.size(); ++j) {
                    if (j >= poly.size()) poly.resize(j + 1, Rational(0));
                    poly[j] += dd[k] * basis[j];
                }
                // basis *= (x - points[k])
                basis.push_back(Rational(0));
                for (size_t j = basis.size() - 1; j > 0; --j)
                    basis[j] = basis[j - 1] - Rational(points[k]) * basis[j];
                basis[0] = -Rational(points[k]) * basis[0];
            }
            poly.resize(points.size(), Rational(0));
            coeffs = poly;
        }
        bool ok = true;
        LaurentPoly f;
        for (size_t j = 0; j < coeffs.size() && ok; ++j) {
            if (!is_integer(coeffs[j])) ok = false;
            else if (coeffs[j] != 0) f.set_coeff(static_cast<int>(j), coeffs[j]);
        }
        if (ok && !f.is_zero() && f.span() == d) {
            LaurentPoly prod = f * f.conjugate();
            if (!prod.is_zero() && canonicalize(prod) == c) {
                res.verdict = FoxMilnor::passes;
                res.witness = canonicalize(f);
                res.reason = "witness found";
                return res;
            }
        }
        // next tuple
        size_t k = 0;
        while (k < idx.size()) {
            if (++idx[k] < choices[k].size()) break;
            idx[k] = 0;
            ++k;
        }
        if (k == idx.size()) break;
    }
    res.verdict = FoxMilnor::fails;
    res.reason = "exhaustive search found no factorization";
    return res;
}

} // namespace linkconc
