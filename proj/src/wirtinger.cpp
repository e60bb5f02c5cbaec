#include "linkconc/wirtinger.hpp"

namespace linkconc {

FreeWord FreeWord::reduced() const {
    FreeWord out;
    for (const auto& l : letters) {
        if (!out.letters.empty() && out.letters.back().first == l.first &&
            out.letters.back().second == -l.second)
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

GroupRingElement fox_derivative(const FreeWord& w, int gen) {
    GroupRingElement out;
    FreeWord prefix;
    for (const auto& [g, e] : w.letters) {
        if (e == +1) {
            if (g == gen) out.push_back({Rational(1), prefix});
            prefix.letters.push_back({g, +1});
        } else {
            prefix.letters.push_back({g, -1});
            if (g == gen) out.push_back({Rational(-1), prefix});
        }
    }
    return out;
}

LaurentPoly abelianize(const GroupRingElement& e, const std::map<int, int>& weights) {
    LaurentPoly p;
    for (const auto& term : e) {
        long exp = 0;
        for (const auto& [g, s] : term.word.letters) {
            auto it = weights.find(g);
            if (it == weights.end())
                throw Error("generator x" + std::to_string(g + 1) + " missing from weights");
            exp += static_cast<long>(it->second) * s;
        }
        p += LaurentPoly::term(term.coeff, static_cast<int>(exp));
    }
    return p;
}

std::string to_string(const FreeWord& w) {
    if (w.letters.empty()) return "1";
    std::string out;
    for (const auto& [g, e] : w.letters) {
        if (!out.empty()) out += " ";
        out += "x" + std::to_string(g + 1);
        if (e < 0) out += "^-1";
    }
    return out;
}

WirtingerData wirtinger(const LinkDiagram& l, int component) {
    if (component < 1 || component > l.component_count())
        throw Error("unknown component id " + std::to_string(component));
    WirtingerData w;
    w.component = component;
    const auto& cycle = l.components()[component - 1];

    // Arcs are the maximal strands between under-passes of the component
    // beneath itself. Under-passes beneath other components do not break
    // arcs: those components are deleted from the exterior's diagram.
    std::map<int, int> arc_of_edge;
    if (cycle.empty()) {
        w.generator_count = 1;
    } else {
        std::vector<int> cuts;
        for (size_t k = 0; k < cycle.size(); ++k) {
            EdgeEnd head = l.edge_head(cycle[k]);
            if (head.slot == 0 && l.over_component(head.crossing) == component)
                cuts.push_back(static_cast<int>(k));
        }
        if (cuts.empty()) {
            for (int e : cycle) arc_of_edge[e] = 0;
            w.generator_count = 1;
        } else {
            for (size_t c = 0; c < cuts.size(); ++c) {
                size_t from = (cuts[(c + cuts.size() - 1) % cuts.size()] + 1) % cycle.size();
                size_t to = cuts[c];
                for (size_t k = from;; k = (k + 1) % cycle.size()) {
                    arc_of_edge[cycle[k]] = static_cast<int>(c);
                    if (k == to) break;
                }
            }
            w.generator_count = static_cast<int>(cuts.size());
        }
    }

    // One relation per self-crossing: x_c = x_b^e x_a x_b^-e with e the
    // crossing sign, stored as the relator x_c^-1 x_b^e x_a x_b^-e.
    for (int ci = 0; ci < l.crossing_count(); ++ci) {
        if (l.under_component(ci) != component || l.over_component(ci) != component) continue;
        const Crossing& x = l.crossings()[ci];
        const int a = arc_of_edge.at(x.slots[0]);
        const int c = arc_of_edge.at(x.slots[2]);
        const int b = arc_of_edge.at(x.slots[x.over_in]);
        const int e = x.sign();
        FreeWord r;
        r.letters = {{c, -1}, {b, e}, {a, +1}, {b, -e}};
        w.relations.push_back(std::move(r));
    }

    // Peripheral words, read off the full diagram: at each crossing where
    // component j passes under an arc of this component, append that arc's
    // generator with the crossing sign as exponent.
    for (int j = 1; j <= l.component_count(); ++j) {
        if (j == component) continue;
        FreeWord word;
        for (int e : l.components()[j - 1]) {
            EdgeEnd head = l.edge_head(e);
            if (head.slot != 0) continue;
            const int ci = head.crossing;
            if (l.over_component(ci) != component) continue;
            const Crossing& x = l.crossings()[ci];
            word.letters.push_back({arc_of_edge.at(x.slots[x.over_in]), x.sign()});
        }
        w.peripheral_words[j] = std::move(word);
    }
    return w;
}

std::string WirtingerData::describe() const {
    std::string out = "gens: x1..x" + std::to_string(generator_count) + ";";
    for (const auto& r : relations) {
        // relator x_c^-1 x_b^e x_a x_b^-e printed as x_c = x_b^e x_a x_b^-e
        out += " rel: x" + std::to_string(r.letters[0].first + 1) + " = " +
               to_string(FreeWord{{r.letters[1], r.letters[2], r.letters[3]}}) + ";";
    }
    for (const auto& [j, word] : peripheral_words)
        out += " periph L" + std::to_string(j) + ": " + to_string(word) + ";";
    return out;
}

} // namespace linkconc
