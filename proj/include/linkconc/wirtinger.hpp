#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linkconc/diagram.hpp"
#include "linkconc/laurent.hpp"

namespace linkconc {

// Word in a free group, letters stored as (generator index, +-1).
// Reduction is lazy: Fox derivatives work on the unreduced structure.
struct FreeWord {
    std::vector<std::pair<int, int>> letters;

    static FreeWord letter(int gen, int exp) { return FreeWord{{{gen, exp}}}; }

    int exponent_sum() const {
        int s = 0;
        for (const auto& [g, e] : letters) s += e;
        return s;
    }
    FreeWord inverse() const {
        FreeWord w;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->first, -it->second});
        return w;
    }
    FreeWord reduced() const;
    FreeWord concat(const FreeWord& o) const {
        FreeWord w = *this;
        w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
        return w;
    }
    friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

struct GroupRingTerm {
    Rational coeff;
    FreeWord word;
};
// Formal sum of free-group words with rational coefficients; terms are not
// combined until abelianization.
using GroupRingElement = std::vector<GroupRingTerm>;

// Free differential calculus: satisfies dg/dg = 1, dh/dg = 0, dg^-1/dg =
// -g^-1 and the product rule d(uv)/dg = du/dg + u * dv/dg.
GroupRingElement fox_derivative(const FreeWord& w, int gen);

// Substitutes each word by t^(weighted exponent sum) and collects. Every
// generator occurring in `e` must have a weight.
LaurentPoly abelianize(const GroupRingElement& e, const std::map<int, int>& weights);

// Wirtinger presentation of the exterior of one component: one generator
// per arc of the component in the diagram where all other components are
// deleted, one conjugation relation per self-crossing, plus the free-group
// words the remaining components trace through those generators.
struct WirtingerData {
    int component = 0;
    int generator_count = 0;
    std::vector<FreeWord> relations; // relators x_c^-1 x_b^e x_a x_b^-e
    std::map<int, FreeWord> peripheral_words;

    std::map<int, int> unit_weights() const {
        std::map<int, int> w;
        for (int g = 0; g < generator_count; ++g) w[g] = 1;
        return w;
    }
    std::string describe() const;
};

WirtingerData wirtinger(const LinkDiagram& l, int component);

std::string to_string(const FreeWord& w);

} // namespace linkconc
