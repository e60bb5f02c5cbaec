#include "linkconc/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include <json.hpp>

namespace linkconc {

namespace {

struct Occ {
    int crossing;
    int slot;
};

} // namespace

LinkDiagram LinkDiagram::build(std::vector<std::array<int, 4>> crossings, int unknot_components,
                               std::vector<int>* relabel_out) {
    if (crossings.empty() && unknot_components == 0) throw Error("empty diagram");
    const int n = static_cast<int>(crossings.size());
    const int edge_count = 2 * n;

    std::vector<std::vector<Occ>> occ(edge_count + 1);
    for (int ci = 0; ci < n; ++ci)
        for (int s = 0; s < 4; ++s) {
            int e = crossings[ci][s];
            if (e < 1 || e > edge_count)
                throw Error("edge label " + std::to_string(e) + " out of range 1.." +
                            std::to_string(edge_count));
            occ[e].push_back({ci, s});
        }
    for (int e = 1; e <= edge_count; ++e)
        if (occ[e].size() != 2)
            throw Error("edge label " + std::to_string(e) + " used " + std::to_string(occ[e].size()) +
                        " times (expected 2)");

    // Orient by strand traversal. Slot 0 is always an entering end and
    // slot 2 a leaving end; over slots are pinned as traversal reaches them.
    std::vector<int> over_in(n, -1);
    auto pin_over_in = [&](int ci, int entering_slot) {
        if (over_in[ci] != -1 && over_in[ci] != entering_slot) throw Error("inconsistent traversal");
        over_in[ci] = entering_slot;
    };

    std::vector<char> visited(edge_count + 1, 0);
    std::vector<Occ> head(edge_count + 1, {-1, -1}); // entering occurrence per edge
    std::vector<std::vector<int>> components;

    for (int start = 1; start <= edge_count; ++start) {
        if (visited[start]) continue;
        // Choose the entering occurrence of the start edge.
        const Occ &o0 = occ[start][0], &o1 = occ[start][1];
        Occ enter{-1, -1};
        if (o0.slot == 0 && o1.slot == 0) throw Error("inconsistent traversal");
        if (o0.slot == 2 && o1.slot == 2) throw Error("inconsistent traversal");
        if (o0.slot == 0)
            enter = o0;
        else if (o1.slot == 0)
            enter = o1;
        else if (o0.slot == 2)
            enter = o1;
        else if (o1.slot == 2)
            enter = o0;
        else
            enter = o1; // free (all-over strand): deterministic choice

        std::vector<int> cycle;
        int e = start;
        Occ at = enter;
        while (true) {
            if (visited[e]) throw Error("inconsistent traversal");
            visited[e] = 1;
            cycle.push_back(e);
            head[e] = at;
            if (at.slot == 2) throw Error("inconsistent traversal");
            if (at.slot == 1 || at.slot == 3) pin_over_in(at.crossing, at.slot);
            const int out_slot = (at.slot + 2) % 4;
            if (out_slot == 0) throw Error("inconsistent traversal");
            if (out_slot == 1 || out_slot == 3) pin_over_in(at.crossing, (out_slot + 2) % 4);
            const int e_next = crossings[at.crossing][out_slot];
            // The next edge leaves at (at.crossing, out_slot); it enters at
            // its other occurrence.
            const Occ &p0 = occ[e_next][0], &p1 = occ[e_next][1];
            Occ next_enter =
                (p0.crossing == at.crossing && p0.slot == out_slot) ? p1 : p0;
            if (e_next == start) {
                if (!(next_enter.crossing == enter.crossing && next_enter.slot == enter.slot))
                    throw Error("inconsistent traversal");
                break;
            }
            e = e_next;
            at = next_enter;
        }
        components.push_back(std::move(cycle));
    }
    for (int ci = 0; ci < n; ++ci)
        if (over_in[ci] == -1) throw Error("inconsistent traversal");

    // Canonical dense relabeling in traversal order.
    std::vector<int> relabel(edge_count + 1, 0);
    int next_label = 1;
    for (const auto& cycle : components)
        for (int e : cycle) relabel[e] = next_label++;

    LinkDiagram d;
    d.edge_count_ = edge_count;
    d.crossings_.resize(n);
    for (int ci = 0; ci < n; ++ci) {
        for (int s = 0; s < 4; ++s) d.crossings_[ci].slots[s] = relabel[crossings[ci][s]];
        d.crossings_[ci].over_in = over_in[ci];
    }
    d.components_.reserve(components.size() + unknot_components);
    d.edge_component_.assign(edge_count + 1, 0);
    d.edge_head_.assign(edge_count + 1, {});
    d.edge_tail_.assign(edge_count + 1, {});
    for (auto& cycle : components) {
        std::vector<int> relabeled;
        relabeled.reserve(cycle.size());
        for (int e : cycle) relabeled.push_back(relabel[e]);
        d.components_.push_back(std::move(relabeled));
    }
    for (size_t comp = 0; comp < d.components_.size(); ++comp)
        for (int e : d.components_[comp]) d.edge_component_[e] = static_cast<int>(comp) + 1;
    for (int e = 1; e <= edge_count; ++e) {
        int ne = relabel[e];
        d.edge_head_[ne] = {head[e].crossing, head[e].slot};
    }
    for (int ci = 0; ci < n; ++ci)
        for (int s = 0; s < 4; ++s) {
            int e = d.crossings_[ci].slots[s];
            if (!(d.edge_head_[e].crossing == ci && d.edge_head_[e].slot == s))
                d.edge_tail_[e] = {ci, s};
        }
    for (int k = 0; k < unknot_components; ++k) d.components_.emplace_back();

    if (relabel_out) *relabel_out = std::move(relabel);
    return d;
}

LinkDiagram LinkDiagram::from_parts(std::vector<std::array<int, 4>> crossings, int unknot_components) {
    return build(std::move(crossings), unknot_components, nullptr);
}

LinkDiagram LinkDiagram::parse_pd(const std::string& text) {
    std::vector<std::array<int, 4>> crossings;
    std::set<long> unknot_tags;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    auto parse_args = [&](const char* what) {
        std::vector<long> args;
        skip_ws();
        if (i >= text.size() || text[i] != '(') throw Error(std::string(what) + ": expected '('");
        ++i;
        while (true) {
            skip_ws();
            bool neg = false;
            if (i < text.size() && text[i] == '-') {
                neg = true;
                ++i;
            }
            size_t s = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (s == i) throw Error(std::string(what) + ": expected integer");
            long v = std::stol(text.substr(s, i - s));
            args.push_back(neg ? -v : v);
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (i >= text.size()) throw Error(std::string(what) + ": unterminated argument list");
        }
        return args;
    };
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        char tok = text[i];
        if (tok == 'X' || tok == 'x') {
            ++i;
            auto args = parse_args("X");
            if (args.size() != 4)
                throw Error("X token has arity " + std::to_string(args.size()) + " (expected 4)");
            crossings.push_back({static_cast<int>(args[0]), static_cast<int>(args[1]),
                                 static_cast<int>(args[2]), static_cast<int>(args[3])});
        } else if (tok == 'O' || tok == 'o') {
            ++i;
            auto args = parse_args("O");
            if (args.size() != 1)
                throw Error("O token has arity " + std::to_string(args.size()) + " (expected 1)");
            if (!unknot_tags.insert(args[0]).second)
                throw Error("duplicate O(" + std::to_string(args[0]) + ") token");
        } else {
            throw Error(std::string("unexpected token '") + tok + "' in PD text");
        }
    }
    if (crossings.empty() && unknot_tags.empty()) throw Error("empty diagram");
    return from_parts(std::move(crossings), static_cast<int>(unknot_tags.size()));
}

LinkDiagram LinkDiagram::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad diagram JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("crossings")) throw Error("diagram JSON must contain \"crossings\"");
    std::vector<std::array<int, 4>> crossings;
    for (const auto& row : j["crossings"]) {
        if (!row.is_array() || row.size() != 4) throw Error("crossing entry must have 4 edge labels");
        crossings.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(), row[3].get<int>()});
    }
    int unknots = 0;
    if (j.contains("unknot_components")) {
        std::set<int> tags;
        for (const auto& k : j["unknot_components"]) tags.insert(k.get<int>());
        unknots = static_cast<int>(tags.size());
    }
    if (crossings.empty() && unknots == 0) throw Error("empty diagram");
    return from_parts(std::move(crossings), unknots);
}

int LinkDiagram::component_of_edge(int edge) const {
    if (edge < 1 || edge > edge_count_) throw Error("edge label out of range");
    return edge_component_[edge];
}

EdgeEnd LinkDiagram::edge_head(int edge) const {
    if (edge < 1 || edge > edge_count_) throw Error("edge label out of range");
    return edge_head_[edge];
}

EdgeEnd LinkDiagram::edge_tail(int edge) const {
    if (edge < 1 || edge > edge_count_) throw Error("edge label out of range");
    return edge_tail_[edge];
}

void LinkDiagram::check_component(int i) const {
    if (i < 1 || i > component_count()) throw Error("unknown component id " + std::to_string(i));
}

int LinkDiagram::linking_number(int i, int j) const {
    check_component(i);
    check_component(j);
    if (i == j) throw Error("linking number needs two distinct components");
    long sum = 0;
    for (int ci = 0; ci < crossing_count(); ++ci) {
        int u = under_component(ci), o = over_component(ci);
        if ((u == i && o == j) || (u == j && o == i)) sum += sign(ci);
    }
    if (sum % 2 != 0) throw Error("odd signed crossing count between components");
    return static_cast<int>(sum / 2);
}

std::vector<std::vector<int>> LinkDiagram::linking_matrix() const {
    const int nc = component_count();
    std::vector<std::vector<int>> m(nc, std::vector<int>(nc, 0));
    for (int i = 1; i <= nc; ++i)
        for (int j = i + 1; j <= nc; ++j) m[i - 1][j - 1] = m[j - 1][i - 1] = linking_number(i, j);
    return m;
}

LinkDiagram LinkDiagram::sublink(const std::vector<int>& keep_list) const {
    if (keep_list.empty()) throw Error("sublink: empty component set");
    std::set<int> keep;
    for (int i : keep_list) {
        check_component(i);
        keep.insert(i);
    }
    std::vector<char> crossing_kept(crossing_count(), 0);
    for (int ci = 0; ci < crossing_count(); ++ci)
        crossing_kept[ci] = keep.count(under_component(ci)) && keep.count(over_component(ci));

    // Merge each kept component's edges into runs separated by kept
    // crossings only.
    std::vector<int> run_of_edge(edge_count_ + 1, 0);
    int next_run = 0;
    int unknots = 0;
    for (int comp = 1; comp <= component_count(); ++comp) {
        if (!keep.count(comp)) continue;
        const auto& cycle = components_[comp - 1];
        if (cycle.empty()) {
            ++unknots;
            continue;
        }
        // Find cut positions: edge k ends a run iff the crossing it enters
        // is kept.
        std::vector<int> cuts;
        for (size_t k = 0; k < cycle.size(); ++k)
            if (crossing_kept[edge_head_[cycle[k]].crossing]) cuts.push_back(static_cast<int>(k));
        if (cuts.empty()) {
            ++unknots;
            continue;
        }
        // Runs start just after each cut.
        for (size_t c = 0; c < cuts.size(); ++c) {
            ++next_run;
            size_t from = (cuts[(c + cuts.size() - 1) % cuts.size()] + 1) % cycle.size();
            size_t to = cuts[c];
            for (size_t k = from;; k = (k + 1) % cycle.size()) {
                run_of_edge[cycle[k]] = next_run;
                if (k == to) break;
            }
        }
    }
    std::vector<std::array<int, 4>> new_crossings;
    for (int ci = 0; ci < crossing_count(); ++ci) {
        if (!crossing_kept[ci]) continue;
        std::array<int, 4> t{};
        for (int s = 0; s < 4; ++s) t[s] = run_of_edge[crossings_[ci].slots[s]];
        new_crossings.push_back(t);
    }
    if (new_crossings.empty() && unknots == 0) throw Error("sublink: empty diagram");
    return from_parts(std::move(new_crossings), unknots);
}

LinkDiagram LinkDiagram::mirror() const {
    std::vector<std::array<int, 4>> rotated;
    rotated.reserve(crossings_.size());
    for (const auto& c : crossings_) {
        int o = c.over_in;
        rotated.push_back({c.slots[o], c.slots[(o + 1) % 4], c.slots[(o + 2) % 4], c.slots[(o + 3) % 4]});
    }
    return from_parts(std::move(rotated), static_cast<int>(components_.size()) -
                                              static_cast<int>(std::count_if(
                                                  components_.begin(), components_.end(),
                                                  [](const auto& c) { return !c.empty(); })));
}

std::string LinkDiagram::emit_pd() const {
    std::string out;
    for (const auto& c : crossings_) {
        if (!out.empty()) out += " ";
        out += "X(" + std::to_string(c.slots[0]) + "," + std::to_string(c.slots[1]) + "," +
               std::to_string(c.slots[2]) + "," + std::to_string(c.slots[3]) + ")";
    }
    for (int comp = 1; comp <= component_count(); ++comp) {
        if (!components_[comp - 1].empty()) continue;
        if (!out.empty()) out += " ";
        out += "O(" + std::to_string(comp) + ")";
    }
    return out;
}

std::string LinkDiagram::to_json_text(int indent) const {
    nlohmann::ordered_json j;
    j["crossings"] = nlohmann::json::array();
    for (const auto& c : crossings_)
        j["crossings"].push_back({c.slots[0], c.slots[1], c.slots[2], c.slots[3]});
    j["unknot_components"] = nlohmann::json::array();
    for (int comp = 1; comp <= component_count(); ++comp)
        if (components_[comp - 1].empty()) j["unknot_components"].push_back(comp);
    return j.dump(indent);
}

// ---- surgeries -----------------------------------------------------------

namespace {

int count_unknot_components(const LinkDiagram& l) {
    int u = 0;
    for (const auto& c : l.components())
        if (c.empty()) ++u;
    return u;
}

} // namespace

LinkDiagram DiagramSurgery::insert_knot(const LinkDiagram& l, int edge, const LinkDiagram& j,
                                        std::vector<int>* relabel) {
    if (j.component_count() != 1) throw Error("insert_knot: inserted diagram must have one component");
    if (edge < 1 || edge > l.edge_count()) {
        if (!(l.edge_count() == 0 && j.crossing_count() == 0))
            throw Error("insert_knot: edge label out of range");
    }
    if (j.crossing_count() == 0) {
        if (relabel) {
            relabel->assign(l.edge_count() + 1, 0);
            for (int e = 1; e <= l.edge_count(); ++e) (*relabel)[e] = e;
        }
        return l;
    }
    if (l.crossing_count() == 0) {
        // Splicing into a 0-crossing unknot component yields J itself plus
        // the other unknot components.
        if (l.component_count() == 0) throw Error("insert_knot: empty diagram");
        std::vector<std::array<int, 4>> cr;
        for (const auto& c : j.crossings()) cr.push_back(c.slots);
        return LinkDiagram::build(std::move(cr), count_unknot_components(l) - 1, nullptr);
    }

    const int off = l.edge_count();
    std::vector<std::array<int, 4>> cr;
    cr.reserve(l.crossing_count() + j.crossing_count());
    for (const auto& c : l.crossings()) cr.push_back(c.slots);
    for (const auto& c : j.crossings()) {
        std::array<int, 4> t{};
        for (int s = 0; s < 4; ++s) t[s] = c.slots[s] + off;
        cr.push_back(t);
    }
    // Cut J's edge 1 open: the incoming strand `edge` plugs into the end
    // where edge 1 entered, and the strand leaving where edge 1 left plugs
    // into the end `edge` used to enter.
    EdgeEnd l_head = l.edge_head(edge);
    EdgeEnd j_head = j.edge_head(1);
    cr[l.crossing_count() + j_head.crossing][j_head.slot] = edge;
    cr[l_head.crossing][l_head.slot] = 1 + off;

    std::vector<int> raw_map;
    LinkDiagram out = LinkDiagram::build(std::move(cr), count_unknot_components(l), &raw_map);
    if (relabel) {
        relabel->assign(l.edge_count() + 1, 0);
        for (int e = 1; e <= l.edge_count(); ++e) (*relabel)[e] = raw_map[e];
    }
    return out;
}

LinkDiagram insert_knot(const LinkDiagram& l, int edge, const LinkDiagram& j) {
    return DiagramSurgery::insert_knot(l, edge, j, nullptr);
}

LinkDiagram connected_sum(const LinkDiagram& k1, const LinkDiagram& k2) {
    if (k1.component_count() != 1 || k2.component_count() != 1)
        throw Error("connected sum requires two knot diagrams");
    if (k1.crossing_count() == 0) return k2;
    return insert_knot(k1, 1, k2);
}

LinkDiagram DiagramSurgery::insert_twists(const LinkDiagram& l, int e1, int e2, int m,
                                          std::vector<int>* relabel) {
    if (e1 == e2) throw Error("insert_twists: coincident edges");
    if (e1 < 1 || e1 > l.edge_count() || e2 < 1 || e2 > l.edge_count())
        throw Error("insert_twists: edge label out of range");
    if (m == 0) {
        if (relabel) {
            relabel->assign(l.edge_count() + 1, 0);
            for (int e = 1; e <= l.edge_count(); ++e) (*relabel)[e] = e;
        }
        return l;
    }
    const int n = 2 * std::abs(m);
    std::vector<std::array<int, 4>> cr;
    for (const auto& c : l.crossings()) cr.push_back(c.slots);

    // Strand pieces u_0..u_n and v_0..v_n; u_0 = e1 and v_0 = e2 keep their
    // labels, the rest are fresh.
    std::vector<int> u(n + 1), v(n + 1);
    int fresh = l.edge_count();
    u[0] = e1;
    v[0] = e2;
    for (int k = 1; k <= n; ++k) u[k] = ++fresh;
    for (int k = 1; k <= n; ++k) v[k] = ++fresh;
    EdgeEnd h1 = l.edge_head(e1), h2 = l.edge_head(e2);
    cr[h1.crossing][h1.slot] = u[n];
    cr[h2.crossing][h2.slot] = v[n];

    // The e1 strand passes crossings 0..n-1 in order; the e2 strand passes
    // them in reverse (the strands run antiparallel through the site).
    for (int k = 0; k < n; ++k) {
        std::array<int, 4> t{};
        if (m > 0) {
            if (k % 2 == 0)
                t = {u[k], v[n - k], u[k + 1], v[n - 1 - k]};
            else
                t = {v[n - 1 - k], u[k + 1], v[n - k], u[k]};
        } else {
            if (k % 2 == 0)
                t = {v[n - 1 - k], u[k], v[n - k], u[k + 1]};
            else
                t = {u[k], v[n - 1 - k], u[k + 1], v[n - k]};
        }
        cr.push_back(t);
    }
    std::vector<int> raw_map;
    LinkDiagram out = LinkDiagram::build(std::move(cr), count_unknot_components(l), &raw_map);
    if (relabel) {
        relabel->assign(l.edge_count() + 1, 0);
        for (int e = 1; e <= l.edge_count(); ++e) (*relabel)[e] = raw_map[e];
    }
    return out;
}

LinkDiagram insert_twists(const LinkDiagram& l, int e1, int e2, int m) {
    return DiagramSurgery::insert_twists(l, e1, e2, m, nullptr);
}

} // namespace linkconc
