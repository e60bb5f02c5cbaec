#pragma once

#include <vector>

#include "linkconc/laurent.hpp"
#include "linkconc/wirtinger.hpp"

namespace linkconc {

class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    static LaurentMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    LaurentPoly& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const LaurentPoly& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const LaurentPoly& q); // row dst += q * row src
    void add_col_multiple(int dst, int src, const LaurentPoly& q);
    void scale_row(int i, const LaurentPoly& u);

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend bool operator==(const LaurentMatrix&, const LaurentMatrix&);

    // Cofactor expansion; intended for small matrices (unit checks, the
    // Seifert oracle).
    LaurentPoly determinant() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<LaurentPoly> e_;
};

// Smith normal form over Q[t,t^-1]: U*A*V = D with unimodular U, V and the
// nonzero diagonal entries of D canonical and forming a divisibility chain.
struct SNFResult {
    LaurentMatrix D, U, V;
    std::vector<LaurentPoly> divisors;
    int rank = 0;
};

SNFResult snf(const LaurentMatrix& a);

// Finitely presented Q[t,t^-1]-module; the columns of `relations` are the
// relators. The SNF is computed once at construction and shared.
class ModulePresentation {
public:
    ModulePresentation(int generator_count, LaurentMatrix relations, int deleted_generator = -1);

    int generator_count() const { return generator_count_; }
    const LaurentMatrix& relations() const { return relations_; }
    const SNFResult& smith() const { return snf_; }
    int deleted_generator() const { return deleted_generator_; }
    bool is_torsion() const { return snf_.rank == generator_count_; }

private:
    int generator_count_;
    LaurentMatrix relations_;
    int deleted_generator_;
    SNFResult snf_;
};

struct ModuleElement {
    std::vector<LaurentPoly> coords;

    static ModuleElement zero(int n) { return ModuleElement{std::vector<LaurentPoly>(static_cast<size_t>(n))}; }
    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
    friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b);
    friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b);
    friend ModuleElement operator*(const LaurentPoly& p, const ModuleElement& v);
};

// Fox Jacobian of the Wirtinger presentation with the column of one
// designated generator deleted; presents the Alexander module A(K) of the
// component's exterior.
ModulePresentation alexander_presentation(const WirtingerData& w, int deleted_generator = 0);

// Order of the torsion module: canonical product of the nonunit SNF
// divisors. Throws "module has free rank > 0" on non-torsion input.
LaurentPoly alexander_polynomial(const ModulePresentation& m);

// Class of the lift of component j in the infinite cyclic cover, as Fox
// derivatives of the peripheral word over the retained generators. Requires
// zero exponent sum (lk = 0); defined up to a unit t^k from the basepoint
// choice, and every predicate below is unit-invariant.
ModuleElement lift_class(const WirtingerData& w, const ModulePresentation& m, int j);

// Whether v lies in the column span of the relation matrix over the ring.
bool is_trivial(const ModulePresentation& m, const ModuleElement& v);

// Whether the quotient by the submodule the elements generate is trivial.
bool generates(const ModulePresentation& m, const std::vector<ModuleElement>& elems);

} // namespace linkconc
