#pragma once

#include <array>
#include <string>
#include <vector>

#include "linkconc/error.hpp"

namespace linkconc {

// One crossing of a PD code. The four slots hold edge labels listed
// counterclockwise starting from the incoming under-strand edge, so the
// under-strand runs slots[0] -> slots[2] and the over-strand occupies
// slots 1 and 3.
//
// Sign convention (used by exactly this one struct, nowhere else): the
// crossing is +1 iff the over-strand crosses left-to-right when viewed
// along the under-strand orientation, which happens exactly when the
// over-strand enters at slot 3 (d) and leaves at slot 1 (b).
struct Crossing {
    std::array<int, 4> slots{};
    // Orientation data recovered by traversal: the slot (1 or 3) where the
    // over-strand enters. Recomputed whenever a diagram is built.
    int over_in = -1;

    int sign() const { return over_in == 3 ? +1 : -1; }
};

struct EdgeEnd {
    int crossing = -1;
    int slot = -1;
    bool valid() const { return crossing >= 0; }
    friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

// An oriented multi-component link diagram. Components are numbered from 1
// in traversal-discovery order; 0-crossing unknot components come last.
// Edge labels are dense, 1..2*crossing_count, canonically assigned in
// traversal order. Immutable after construction.
class LinkDiagram {
public:
    // Text form: whitespace-separated "X(a,b,c,d)" crossings plus optional
    // "O(k)" tokens declaring 0-crossing unknot components.
    static LinkDiagram parse_pd(const std::string& text);
    static LinkDiagram from_parts(std::vector<std::array<int, 4>> crossings, int unknot_components);
    static LinkDiagram from_json_text(const std::string& text);

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int edge_count() const { return edge_count_; }
    int component_count() const { return static_cast<int>(components_.size()); }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    // Ordered cyclic edge lists, one per component; empty for 0-crossing
    // components.
    const std::vector<std::vector<int>>& components() const { return components_; }

    int sign(int crossing) const { return crossings_.at(crossing).sign(); }
    int component_of_edge(int edge) const;
    // Crossing end where the edge enters / leaves.
    EdgeEnd edge_head(int edge) const;
    EdgeEnd edge_tail(int edge) const;

    int under_component(int crossing) const { return component_of_edge(crossings_.at(crossing).slots[0]); }
    int over_component(int crossing) const { return component_of_edge(crossings_.at(crossing).slots[1]); }

    // Half the signed count of crossings between components i and j.
    int linking_number(int i, int j) const;
    std::vector<std::vector<int>> linking_matrix() const;

    LinkDiagram sublink(const std::vector<int>& keep) const;
    LinkDiagram mirror() const;

    std::string emit_pd() const;
    std::string to_json_text(int indent = -1) const;

    friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
        if (a.crossings_.size() != b.crossings_.size() || a.components_.size() != b.components_.size())
            return false;
        for (size_t i = 0; i < a.crossings_.size(); ++i)
            if (a.crossings_[i].slots != b.crossings_[i].slots) return false;
        return true;
    }

private:
    friend struct DiagramSurgery;

    LinkDiagram() = default;
    // Validates, orients, and canonically relabels. `relabel`, when given,
    // receives the old-label -> new-label map.
    static LinkDiagram build(std::vector<std::array<int, 4>> crossings, int unknot_components,
                             std::vector<int>* relabel);

    void check_component(int i) const;

    std::vector<Crossing> crossings_;
    int edge_count_ = 0;
    std::vector<std::vector<int>> components_;
    std::vector<int> edge_component_; // 1-based edge -> component id
    std::vector<EdgeEnd> edge_head_;  // where the edge enters a crossing
    std::vector<EdgeEnd> edge_tail_;  // where it leaves one
};

// Splices K2 into edge 1 of K1, respecting orientation. Both inputs must be
// 1-component diagrams.
LinkDiagram connected_sum(const LinkDiagram& k1, const LinkDiagram& k2);

// Splices the 1-component diagram J as a 1-string tangle into edge `e`.
LinkDiagram insert_knot(const LinkDiagram& l, int edge, const LinkDiagram& j);

// Replaces the marked strands with |m| full twists: 2|m| new crossings of
// uniform sign, the sign of m selecting the handedness. The two strands are
// taken to run through the site in opposite directions (the only case the
// catalog needs; both sides of a band, or the two strands of a clasp).
LinkDiagram insert_twists(const LinkDiagram& l, int e1, int e2, int m);

// Internal variants that also report where surviving edges went.
struct DiagramSurgery {
    static LinkDiagram insert_knot(const LinkDiagram& l, int edge, const LinkDiagram& j,
                                   std::vector<int>* relabel);
    static LinkDiagram insert_twists(const LinkDiagram& l, int e1, int e2, int m,
                                     std::vector<int>* relabel);
};

} // namespace linkconc
