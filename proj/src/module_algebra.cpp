#include "linkconc/module_algebra.hpp"

#include <cassert>

namespace linkconc {

LaurentMatrix LaurentMatrix::identity(int n) {
    LaurentMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
    return m;
}

void LaurentMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void LaurentMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void LaurentMatrix::add_row_multiple(int dst, int src, const LaurentPoly& q) {
    for (int c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
}

void LaurentMatrix::add_col_multiple(int dst, int src, const LaurentPoly& q) {
    for (int r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

void LaurentMatrix::scale_row(int i, const LaurentPoly& u) {
    for (int c = 0; c < cols_; ++c) at(i, c) *= u;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix dimension mismatch");
    LaurentMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return a.e_ == b.e_;
}

LaurentPoly LaurentMatrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    const int n = rows_;
    if (n == 0) return LaurentPoly(1);
    // Bareiss fraction-free elimination; every division is exact in the
    // Laurent ring.
    LaurentMatrix m = *this;
    LaurentPoly prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return LaurentPoly();
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = exact_div(num, prev);
            }
        prev = m.at(k, k);
    }
    LaurentPoly det = m.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

namespace {

// Unit u with u*p canonical (content 1, min exponent 0, positive lead).
LaurentPoly canonicalizing_unit(const LaurentPoly& p) {
    return exact_div(canonicalize(p), p);
}

} // namespace

SNFResult snf(const LaurentMatrix& a) {
    SNFResult res;
    res.D = a;
    res.U = LaurentMatrix::identity(a.rows());
    res.V = LaurentMatrix::identity(a.cols());
    LaurentMatrix& D = res.D;
    LaurentMatrix& U = res.U;
    LaurentMatrix& V = res.V;

    // Rescaling a row or column by a unit is free over Q[t,t^-1]; keeping
    // rows primitive after every elementary step is what stops the rational
    // coefficients from snowballing through the Euclidean reductions.
    auto primitivize_row = [&](int i) {
        Integer num_gcd(0), den_lcm(1);
        bool any = false;
        for (int c = 0; c < D.cols(); ++c)
            for (const auto& [e, q] : D.at(i, c).terms()) {
                any = true;
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
            }
        if (!any) return;
        Rational content(num_gcd, den_lcm);
        content.canonicalize();
        if (content == 1) return;
        LaurentPoly u(Rational(1) / content);
        D.scale_row(i, u);
        U.scale_row(i, u);
    };

    const int n = std::min(a.rows(), a.cols());
    int k = 0;
    for (; k < n; ++k) {
        // Pivot: minimal span among nonzero entries of the trailing
        // submatrix, ties broken by smallest (row, col).
        int pi = -1, pj = -1, best = -1;
        for (int i = k; i < a.rows(); ++i)
            for (int j = k; j < a.cols(); ++j) {
                if (D.at(i, j).is_zero()) continue;
                int s = D.at(i, j).span();
                if (best < 0 || s < best) {
                    best = s;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        D.swap_rows(k, pi);
        U.swap_rows(k, pi);
        D.swap_cols(k, pj);
        V.swap_cols(k, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            primitivize_row(k);
            // Euclidean column reduction below the pivot.
            for (int i = k + 1; i < a.rows(); ++i) {
                if (D.at(i, k).is_zero()) continue;
                LaurentPoly q, r;
                divmod(D.at(i, k), D.at(k, k), q, r);
                D.add_row_multiple(i, k, -q);
                U.add_row_multiple(i, k, -q);
                primitivize_row(i);
                if (!D.at(i, k).is_zero()) {
                    // Remainder has smaller span; promote it to pivot.
                    D.swap_rows(k, i);
                    U.swap_rows(k, i);
                    clean = false;
                }
            }
            // Euclidean row reduction right of the pivot.
            for (int j = k + 1; j < a.cols(); ++j) {
                if (D.at(k, j).is_zero()) continue;
                LaurentPoly q, r;
                divmod(D.at(k, j), D.at(k, k), q, r);
                D.add_col_multiple(j, k, -q);
                V.add_col_multiple(j, k, -q);
                if (!D.at(k, j).is_zero()) {
                    D.swap_cols(k, j);
                    V.swap_cols(k, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility sweep: the pivot must divide the whole trailing
            // submatrix for the divisor chain to hold.
            for (int i = k + 1; i < a.rows() && clean; ++i)
                for (int j = k + 1; j < a.cols() && clean; ++j) {
                    if (divides(D.at(k, k), D.at(i, j))) continue;
                    D.add_row_multiple(k, i, LaurentPoly(1));
                    U.add_row_multiple(k, i, LaurentPoly(1));
                    clean = false;
                }
        }
        // Leave the pivot as its canonical associate.
        LaurentPoly unit = canonicalizing_unit(D.at(k, k));
        if (!unit.is_one()) {
            D.scale_row(k, unit);
            U.scale_row(k, unit);
        }
    }
    res.rank = k;
    for (int i = 0; i < k; ++i) res.divisors.push_back(res.D.at(i, i));

#ifndef NDEBUG
    assert(res.U * a * res.V == res.D);
    for (int i = 0; i + 1 < res.rank; ++i)
        assert(divides(res.D.at(i, i), res.D.at(i + 1, i + 1)));
    assert(res.U.determinant().is_unit());
    assert(res.V.determinant().is_unit());
#endif
    return res;
}

ModulePresentation::ModulePresentation(int generator_count, LaurentMatrix relations, int deleted_generator)
    : generator_count_(generator_count),
      relations_(std::move(relations)),
      deleted_generator_(deleted_generator),
      snf_(snf(relations_)) {
    if (relations_.rows() != generator_count_)
        throw Error("presentation matrix must have one row per generator");
}

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
    if (a.coords.size() != b.coords.size()) throw Error("element dimension mismatch");
    ModuleElement r = a;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
    if (a.coords.size() != b.coords.size()) throw Error("element dimension mismatch");
    ModuleElement r = a;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

ModuleElement operator*(const LaurentPoly& p, const ModuleElement& v) {
    ModuleElement r = v;
    for (auto& c : r.coords) c *= p;
    return r;
}

ModulePresentation alexander_presentation(const WirtingerData& w, int deleted_generator) {
    if (deleted_generator < 0 || deleted_generator >= w.generator_count)
        throw Error("deleted generator out of range");
    const auto weights = w.unit_weights();
    const int gens = w.generator_count - 1;
    const int rels = static_cast<int>(w.relations.size());
    LaurentMatrix m(gens, rels);
    for (int r = 0; r < rels; ++r) {
        int gi = 0;
        for (int g = 0; g < w.generator_count; ++g) {
            if (g == deleted_generator) continue;
            m.at(gi++, r) = abelianize(fox_derivative(w.relations[r], g), weights);
        }
    }
    return ModulePresentation(gens, std::move(m), deleted_generator);
}

LaurentPoly alexander_polynomial(const ModulePresentation& m) {
    if (!m.is_torsion()) throw Error("module has free rank > 0");
    LaurentPoly p(1);
    for (const auto& d : m.smith().divisors)
        if (!d.is_unit()) p *= d;
    return canonicalize(p);
}

ModuleElement lift_class(const WirtingerData& w, const ModulePresentation& m, int j) {
    if (m.generator_count() != w.generator_count - 1 || m.deleted_generator() < 0)
        throw Error("presentation does not match the Wirtinger data");
    auto it = w.peripheral_words.find(j);
    if (it == w.peripheral_words.end()) throw Error("unknown component id " + std::to_string(j));
    const FreeWord& word = it->second;
    if (word.exponent_sum() != 0)
        throw Error("lift is not a closed loop in the infinite cyclic cover");
    const auto weights = w.unit_weights();
    ModuleElement v;
    for (int g = 0; g < w.generator_count; ++g) {
        if (g == m.deleted_generator()) continue;
        v.coords.push_back(abelianize(fox_derivative(word, g), weights));
    }
    return v;
}

bool is_trivial(const ModulePresentation& m, const ModuleElement& v) {
    if (static_cast<int>(v.coords.size()) != m.generator_count())
        throw Error("element dimension mismatch");
    const SNFResult& s = m.smith();
    // v lies in the column span of the relations iff U*v does in the span
    // of D: each coordinate divisible by the matching divisor, zero past
    // the rank.
    std::vector<LaurentPoly> w(m.generator_count());
    for (int i = 0; i < m.generator_count(); ++i)
        for (int j = 0; j < m.generator_count(); ++j) {
            if (s.U.at(i, j).is_zero() || v.coords[j].is_zero()) continue;
            w[i] += s.U.at(i, j) * v.coords[j];
        }
    for (int i = 0; i < m.generator_count(); ++i) {
        if (i < s.rank) {
            if (!divides(s.D.at(i, i), w[i])) return false;
        } else if (!w[i].is_zero()) {
            return false;
        }
    }
    return true;
}

bool generates(const ModulePresentation& m, const std::vector<ModuleElement>& elems) {
    for (const auto& v : elems)
        if (static_cast<int>(v.coords.size()) != m.generator_count())
            throw Error("element dimension mismatch");
    LaurentMatrix aug(m.generator_count(), m.relations().cols() + static_cast<int>(elems.size()));
    for (int i = 0; i < m.generator_count(); ++i)
        for (int j = 0; j < m.relations().cols(); ++j) aug.at(i, j) = m.relations().at(i, j);
    for (size_t v = 0; v < elems.size(); ++v)
        for (int i = 0; i < m.generator_count(); ++i)
            aug.at(i, m.relations().cols() + static_cast<int>(v)) = elems[v].coords[i];
    SNFResult s = snf(aug);
    if (s.rank != m.generator_count()) return false;
    for (const auto& d : s.divisors)
        if (!d.is_unit()) return false;
    return true;
}

} // namespace linkconc
