#pragma once

// Independent Alexander polynomial oracle: det(V - t*V^T) from a stored
// Seifert matrix. Deliberately avoids the diagram -> Wirtinger -> Fox ->
// SNF pipeline it is used to check.

#include <vector>

#include "linkconc/module_algebra.hpp"

namespace oracle {

inline linkconc::LaurentPoly seifert_delta(const std::vector<std::vector<int>>& v) {
    using namespace linkconc;
    const int n = static_cast<int>(v.size());
    if (n == 0) return LaurentPoly(1);
    LaurentMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentPoly e(static_cast<long>(v[i][j]));
            e -= LaurentPoly::term(Rational(v[j][i]), 1);
            m.at(i, j) = e;
        }
    return canonicalize(m.determinant());
}

// Seifert matrices for the test corpus knots.
inline std::vector<std::vector<int>> seifert_unknot() { return {}; }
inline std::vector<std::vector<int>> seifert_trefoil() { return {{-1, 1}, {0, -1}}; }
inline std::vector<std::vector<int>> seifert_figure8() { return {{1, 1}, {0, -1}}; }
inline std::vector<std::vector<int>> seifert_9_46() { return {{0, 2}, {1, 0}}; }

} // namespace oracle
