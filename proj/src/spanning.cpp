#include "braidlab/spanning.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "braidlab/error.hpp"
#include "braidlab/topology.hpp"

namespace braidlab {

Graph SpanningData::numbered() const {
    Graph h;
    for (int i = 0; i < graph.vertex_count(); ++i) h.add_vertex(graph.label(vertex_at[i]));
    for (const auto& e : graph.edges()) h.add_edge(order[e.u], order[e.v]);
    h.set_base(0);
    h.set_name(graph.name());
    return h;
}

int SpanningData::iota(int e) const {
    const Edge& ed = graph.edge(e);
    return std::max(order[ed.u], order[ed.v]);
}

int SpanningData::tau(int e) const {
    const Edge& ed = graph.edge(e);
    return std::min(order[ed.u], order[ed.v]);
}

BranchTable::BranchTable(const SpanningData& sd) {
    const int n = sd.graph.vertex_count();
    parent_.assign(n, -1);
    parent_edge_.assign(n, -1);
    children_.assign(n, {});
    essential_.assign(n, 0);
    tin_.assign(n, 0);
    tout_.assign(n, 0);
    depth_.assign(n, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int e = 0; e < sd.graph.edge_count(); ++e) {
        if (!sd.in_tree[e]) continue;
        int a = sd.order[sd.graph.edge(e).u];
        int b = sd.order[sd.graph.edge(e).v];
        adj[a].emplace_back(b, e);
        adj[b].emplace_back(a, e);
    }
    for (int v = 0; v < n; ++v) essential_[v] = sd.graph.degree(sd.vertex_at[v]) >= 3;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto [w, e] : adj[v]) {
            if (seen[w]) continue;
            seen[w] = 1;
            parent_[w] = v;
            parent_edge_[w] = e;
            depth_[w] = depth_[v] + 1;
            children_[v].push_back(w);
            queue.push_back(w);
        }
    }
    for (auto& c : children_) std::sort(c.begin(), c.end());
    int timer = 0;
    std::vector<std::pair<int, size_t>> stack{{0, 0}};
    tin_[0] = timer++;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < children_[v].size()) {
            int w = children_[v][i++];
            tin_[w] = timer++;
            stack.emplace_back(w, 0);
        } else {
            tout_[v] = timer++;
            stack.pop_back();
        }
    }
}

int BranchTable::mu(int v) const {
    return v == 0 ? static_cast<int>(children_[0].size()) - 1 : static_cast<int>(children_[v].size());
}

int BranchTable::branch_of_child(int v, int child) const {
    const auto& c = children_[v];
    auto it = std::find(c.begin(), c.end(), child);
    if (it == c.end()) throw PreconditionError("not a child");
    return static_cast<int>(it - c.begin()) + (v == 0 ? 0 : 1);
}

int BranchTable::child_on_branch(int v, int branch) const {
    int idx = branch - (v == 0 ? 0 : 1);
    if (idx < 0 || idx >= static_cast<int>(children_[v].size())) return -1;
    return children_[v][idx];
}

int BranchTable::g(int v, int w) const {
    if (v == w || !in_subtree(v, w)) return 0;
    for (int c : children_[v])
        if (in_subtree(c, w)) return branch_of_child(v, c);
    throw InvariantViolation("subtree lookup failed");
}

int BranchTable::lca(int v, int w) const {
    while (depth_[v] > depth_[w]) v = parent_[v];
    while (depth_[w] > depth_[v]) w = parent_[w];
    while (v != w) {
        v = parent_[v];
        w = parent_[w];
    }
    return v;
}

int BranchTable::wedge(int v, int w) const {
    int x = lca(v, w);
    while (x != 0 && !essential_[x]) x = parent_[x];
    return x;
}

namespace {

std::vector<int> edge_block(const Graph& g) {
    std::vector<int> blk(g.edge_count(), -1);
    auto blocks = biconnected_blocks(g);
    for (size_t i = 0; i < blocks.size(); ++i)
        for (int e : blocks[i]) blk[e] = static_cast<int>(i);
    return blk;
}

// Walk from v along e through degree-2 vertices; returns the end vertex.
int walk_chain(const Graph& g, int v, int e) {
    int cur = v;
    while (true) {
        int nx = g.other_end(e, cur);
        if (g.degree(nx) != 2 || nx == v) return nx;
        int f = -1;
        for (int x : g.incident(nx))
            if (x != e) f = x;
        cur = nx;
        e = f;
    }
}

int smallest_label(const Graph& g, const std::vector<int>& vs) {
    int best = -1;
    for (int v : vs)
        if (best < 0 || g.label(v) < g.label(best)) best = v;
    return best;
}

int base_general(const Graph& g) {
    std::vector<int> leaves;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= 1) leaves.push_back(v);
    if (!leaves.empty()) return smallest_label(g, leaves);

    auto blocks = biconnected_blocks(g);
    std::vector<int> blocks_at(g.vertex_count(), 0);
    std::vector<std::set<int>> vsets;
    for (const auto& b : blocks) {
        std::set<int> vs;
        for (int e : b) {
            vs.insert(g.edge(e).u);
            vs.insert(g.edge(e).v);
        }
        for (int v : vs) ++blocks_at[v];
        vsets.push_back(std::move(vs));
    }
    std::vector<int> cands;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].size() != vsets[i].size()) continue;  // not a cycle
        int shared = 0;
        for (int v : vsets[i]) shared += blocks_at[v] > 1;
        if (shared > 1) continue;
        for (int v : vsets[i])
            if (g.degree(v) == 2) cands.push_back(v);
    }
    if (cands.empty())
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 2) cands.push_back(v);
    if (cands.empty()) return 0;
    return smallest_label(g, cands);
}

}  // namespace

int choose_base(const Graph& g, SpanningMode mode) {
    if (mode != SpanningMode::LinearCactus) return base_general(g);
    auto blocks = building_blocks(g);
    if (blocks.size() == 1 && blocks[0].essential.empty()) return base_general(g);
    // essential vertex -> block index
    std::map<int, int> block_of;
    for (size_t i = 0; i < blocks.size(); ++i)
        for (int v : blocks[i].essential) block_of[v] = static_cast<int>(i);
    auto outer = [&](size_t bi) {
        std::vector<int> out;
        for (int v : blocks[bi].essential) {
            bool touches_other = false;
            for (int e : g.incident(v)) {
                int end = walk_chain(g, v, e);
                auto it = block_of.find(end);
                if (it != block_of.end() && it->second != static_cast<int>(bi)) touches_other = true;
            }
            if (!touches_other || blocks.size() == 1) out.push_back(v);
        }
        return out;
    };
    std::vector<int> cands;
    for (size_t bi : {size_t{0}, blocks.size() - 1}) {
        for (int v : outer(bi))
            for (int e : g.incident(v)) {
                int end = walk_chain(g, v, e);
                if (g.degree(end) == 1) cands.push_back(end);
            }
    }
    if (!cands.empty()) return smallest_label(g, cands);
    return base_general(g);
}

SpanningData build_spanning(const Graph& g, SpanningMode mode) {
    if (!g.is_connected()) throw PreconditionError("graph must be connected");
    if (mode != SpanningMode::General && !is_cactus(g)) throw PreconditionError("cactus spanning needs a cactus graph");
    if (mode == SpanningMode::LinearCactus) building_blocks(g);  // throws if not linear

    const int nv = g.vertex_count();
    int base = g.base() ? *g.base() : choose_base(g, mode);
    auto blk = edge_block(g);
    std::vector<char> essential(nv, 0);
    for (int v = 0; v < nv; ++v) essential[v] = g.degree(v) >= 3;

    SpanningData sd;
    sd.graph = g;
    sd.graph.set_base(base);
    sd.mode = mode;
    sd.in_tree.assign(g.edge_count(), 0);
    sd.order.assign(nv, -1);
    std::vector<char> edge_seen(g.edge_count(), 0);

    auto forward = [&](int v, int e) {
        // does the side of e at v still hold an unvisited essential vertex?
        std::vector<char> seen(nv, 0);
        seen[v] = 1;
        int start = g.other_end(e, v);
        if (seen[start]) return false;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (essential[x] && sd.order[x] < 0) return true;
            for (int f : g.incident(x)) {
                int y = g.other_end(f, x);
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        return false;
    };

    auto ordered_edges = [&](int v, int in_edge) {
        std::vector<int> es;
        for (int e : g.incident(v))
            if (e != in_edge && std::find(es.begin(), es.end(), e) == es.end()) es.push_back(e);
        std::vector<std::tuple<int, int, int>> keyed;
        for (int e : es) {
            int pri = 1;
            if (in_edge >= 0 && blk[e] == blk[in_edge]) pri = 0;
            else if (mode == SpanningMode::LinearCactus && forward(v, e)) pri = 2;
            int tie = e;
            if (g.rotation()) {
                const auto& rot = (*g.rotation())[v];
                int pos = static_cast<int>(std::find(rot.begin(), rot.end(), e) - rot.begin());
                int ref = in_edge >= 0 ? static_cast<int>(std::find(rot.begin(), rot.end(), in_edge) - rot.begin()) : -1;
                int d = static_cast<int>(rot.size());
                tie = ((pos - ref) % d + d) % d;
            }
            keyed.emplace_back(pri, tie, e);
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> out;
        for (auto& [p, t, e] : keyed) out.push_back(e);
        return out;
    };

    int next = 0;
    struct Frame {
        int v;
        int in_edge;
        std::vector<int> edges;
        size_t i = 0;
        bool sorted = false;
    };
    std::vector<Frame> stack;
    sd.order[base] = next++;
    stack.push_back({base, -1, {}, 0, false});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (!f.sorted) {
            // edge priorities depend on what is visited so far
            f.edges = ordered_edges(f.v, f.in_edge);
            f.sorted = true;
        }
        if (f.i == f.edges.size()) {
            stack.pop_back();
            continue;
        }
        int e = f.edges[f.i++];
        if (edge_seen[e]) continue;
        edge_seen[e] = 1;
        int w = g.other_end(e, f.v);
        if (sd.order[w] >= 0) {
            sd.deleted.push_back(e);
            continue;
        }
        sd.in_tree[e] = 1;
        sd.order[w] = next++;
        int v = f.v;
        (void)v;
        stack.push_back({w, e, {}, 0, false});
    }
    if (next != nv) throw InvariantViolation("spanning DFS missed vertices");
    sd.vertex_at.assign(nv, -1);
    for (int v = 0; v < nv; ++v) sd.vertex_at[sd.order[v]] = v;
    return sd;
}

bool PropertyReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return !c.checked || c.holds; });
}

const PropertyCheck* PropertyReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

PropertyReport verify_properties(const SpanningData& sd) {
    PropertyReport rep;
    const Graph& g = sd.graph;
    const int nv = g.vertex_count();
    auto lbl = [&](int num) { return std::to_string(g.label(sd.vertex_at[num])); };

    PropertyCheck numbering{"numbering"};
    {
        std::vector<int> seen(nv, 0);
        for (int v = 0; v < nv; ++v) {
            if (sd.order[v] < 0 || sd.order[v] >= nv || seen[sd.order[v]]++) {
                numbering.holds = false;
                numbering.counterexample = "order is not a bijection";
                break;
            }
        }
        int tree_edges = static_cast<int>(std::count(sd.in_tree.begin(), sd.in_tree.end(), 1));
        if (numbering.holds && tree_edges != nv - 1) {
            numbering.holds = false;
            numbering.counterexample = "tree does not span";
        }
        if (numbering.holds && g.base() && sd.order[*g.base()] != 0) {
            numbering.holds = false;
            numbering.counterexample = "base is not numbered 0";
        }
    }
    rep.checks.push_back(numbering);
    if (!numbering.holds) return rep;

    BranchTable bt(sd);
    PropertyCheck t1{"T1"}, t2{"T2"}, t3{"T3"}, t4{"T4"}, t5{"T5"};
    for (int d : sd.deleted) {
        int i = sd.iota(d), t = sd.tau(d);
        if (g.degree(sd.vertex_at[i]) != 2 && t1.holds) {
            t1.holds = false;
            t1.counterexample = "deleted edge initial vertex " + lbl(i) + " has degree != 2";
        }
        if (t != 0 && g.degree(sd.vertex_at[t]) < 3 && t1.holds) {
            t1.holds = false;
            t1.counterexample = "deleted edge terminal vertex " + lbl(t) + " has degree < 3";
        }
    }
    for (size_t a = 0; a < sd.deleted.size(); ++a)
        for (size_t b = a + 1; b < sd.deleted.size(); ++b) {
            int d1 = sd.deleted[a], d2 = sd.deleted[b];
            if (sd.tau(d1) == sd.tau(d2) && bt.g(sd.tau(d1), sd.iota(d1)) == bt.g(sd.tau(d2), sd.iota(d2)) &&
                t2.holds) {
                t2.holds = false;
                t2.counterexample = "deleted edges " + std::to_string(d1) + " and " + std::to_string(d2) +
                                    " share terminal vertex and branch";
            }
        }
    for (int d : sd.deleted) {
        int i = sd.iota(d), t = sd.tau(d);
        if (!bt.in_subtree(t, i)) {
            if (t3.holds) {
                t3.holds = false;
                t3.counterexample = "deleted edge " + std::to_string(d) + " does not join a vertex to an ancestor";
            }
            continue;
        }
        for (int v = bt.parent(i); v != t && v >= 0; v = bt.parent(v))
            if (bt.g(v, i) != 1 && t3.holds) {
                t3.holds = false;
                t3.counterexample = "vertex " + lbl(v) + " sees iota of deleted edge " + std::to_string(d) +
                                    " on branch " + std::to_string(bt.g(v, i));
            }
    }
    if (sd.mode != SpanningMode::General) {
        // Only pairs where neither is an ancestor of the other.
        for (int v1 = 1; v1 < nv && t4.holds; ++v1)
            for (int v2 = v1 + 1; v2 < nv && t4.holds; ++v2) {
                int w = bt.wedge(v1, v2);
                if (!(w < v1 && w < v2) || bt.in_subtree(v1, v2) || bt.in_subtree(v2, v1)) continue;
                std::vector<char> seen(nv, 0);
                seen[sd.vertex_at[w]] = 1;
                std::vector<int> stack{sd.vertex_at[v1]};
                seen[sd.vertex_at[v1]] = 1;
                while (!stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    for (int e : g.incident(x)) {
                        int y = g.other_end(e, x);
                        if (!seen[y]) {
                            seen[y] = 1;
                            stack.push_back(y);
                        }
                    }
                }
                if (seen[sd.vertex_at[v2]]) {
                    t4.holds = false;
                    t4.counterexample = "vertices " + lbl(v1) + " and " + lbl(v2) + " connect around " + lbl(w);
                }
            }
    } else {
        t4.checked = false;
    }
    if (sd.mode == SpanningMode::LinearCactus) {
        auto blocks = building_blocks(g);
        std::vector<std::pair<int, int>> ranges;
        for (const auto& b : blocks) {
            if (b.essential.empty()) continue;
            int lo = nv, hi = -1;
            for (int v : b.vertices) {
                lo = std::min(lo, sd.order[v]);
                hi = std::max(hi, sd.order[v]);
            }
            ranges.emplace_back(lo, hi);
        }
        for (size_t a = 0; a < ranges.size(); ++a)
            for (size_t b = a + 1; b < ranges.size(); ++b) {
                auto [m1, M1] = ranges[a];
                auto [m2, M2] = ranges[b];
                if (!(M1 <= m2 || M2 <= m1) && t5.holds) {
                    t5.holds = false;
                    t5.counterexample = "blocks " + std::to_string(a) + " and " + std::to_string(b) + " interleave";
                }
            }
        std::vector<int> ess;
        for (int v = 0; v < nv; ++v)
            if (bt.essential(v)) ess.push_back(v);
        for (size_t a = 0; a < ess.size(); ++a)
            for (size_t b = a + 1; b < ess.size(); ++b) {
                int A = ess[a], B = ess[b];
                if ((bt.wedge(A, B) != A || bt.g(A, B) != bt.mu(A)) && t5.holds) {
                    t5.holds = false;
                    t5.counterexample = "essential vertices " + lbl(A) + " < " + lbl(B) + " are not on a linear spine";
                }
            }
    } else {
        t5.checked = false;
    }
    for (auto* c : {&t1, &t2, &t3, &t4, &t5}) rep.checks.push_back(*c);
    return rep;
}

Prepared prepare(const Graph& g, int n, SpanningMode mode, int margin) {
    Prepared p;
    SubdivisionMap first = subdivide_for(g, n + margin);
    int base = first.subdivided.base() ? *first.subdivided.base() : choose_base(first.subdivided, mode);
    SubdivisionMap second = subdivide_for(first.subdivided, n + margin, {base});
    // compose the two maps
    SubdivisionMap m;
    m.original = g;
    m.subdivided = second.subdivided;
    for (int e : second.edge_origin) m.edge_origin.push_back(first.edge_origin[e]);
    for (int v : second.vertex_origin) m.vertex_origin.push_back(v < 0 ? -1 : first.vertex_origin[v]);
    m.subdivided.set_base(base);
    p.subdivision = std::move(m);
    p.spanning = build_spanning(p.subdivision.subdivided, mode);
    return p;
}

std::string format_spanning(const SpanningData& sd) {
    std::ostringstream out;
    const Graph& g = sd.graph;
    out << "base " << g.label(sd.vertex_at[0]) << "\n";
    for (int i = 0; i < g.vertex_count(); ++i) out << "number " << i << " vertex " << g.label(sd.vertex_at[i]) << "\n";
    for (int e = 0; e < g.edge_count(); ++e)
        out << (sd.in_tree[e] ? "tree " : "deleted ") << sd.iota(e) << " -> " << sd.tau(e) << "\n";
    return out.str();
}

}  // namespace braidlab
