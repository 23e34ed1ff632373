#include "braidlab/subdivision.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "braidlab/error.hpp"

namespace braidlab {

namespace {

struct Chain {
    int start = 0;
    int end = 0;
    std::vector<int> edges;  // in walking order from start
    int first_from = 0;      // endpoint of edges[0] that the walk left from
};

std::vector<Chain> chains_of(const Graph& g, const std::vector<char>& special) {
    std::vector<Chain> out;
    std::vector<char> used(g.edge_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (!special[s]) continue;
        for (int e0 : g.incident(s)) {
            if (used[e0]) continue;
            Chain c;
            c.start = s;
            c.first_from = s;
            int cur = s;
            int e = e0;
            while (true) {
                used[e] = 1;
                c.edges.push_back(e);
                int next = g.other_end(e, cur);
                if (special[next]) {
                    c.end = next;
                    break;
                }
                int nxt_edge = -1;
                for (int f : g.incident(next))
                    if (f != e) nxt_edge = f;
                if (nxt_edge < 0 || used[nxt_edge]) throw InvariantViolation("chain walk failed");
                cur = next;
                e = nxt_edge;
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace

SubdivisionMap subdivide_for(const Graph& g, int n, const std::vector<int>& pinned) {
    if (n < 1) throw PreconditionError("braid index must be positive");
    if (!g.is_connected()) throw PreconditionError("graph must be connected");

    std::vector<char> special(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) special[v] = g.degree(v) != 2;
    for (int p : pinned) special.at(p) = 1;
    if (std::find(special.begin(), special.end(), 1) == special.end()) special[0] = 1;

    auto chains = chains_of(g, special);
    std::vector<int> target(chains.size());
    for (size_t i = 0; i < chains.size(); ++i) {
        int need = chains[i].start == chains[i].end ? n + 1 : n - 1;
        target[i] = std::max<int>(need, static_cast<int>(chains[i].edges.size()));
    }
    // Two chains between the same pair bound a cycle of their summed length.
    std::map<std::pair<int, int>, std::vector<size_t>> by_pair;
    for (size_t i = 0; i < chains.size(); ++i) {
        const auto& c = chains[i];
        if (c.start != c.end) by_pair[{std::min(c.start, c.end), std::max(c.start, c.end)}].push_back(i);
    }
    for (auto& [pair, ids] : by_pair) {
        if (ids.size() < 2) continue;
        while (true) {
            std::stable_sort(ids.begin(), ids.end(), [&](size_t a, size_t b) { return target[a] < target[b]; });
            if (target[ids[0]] + target[ids[1]] >= n + 1) break;
            ++target[ids[0]];
        }
    }

    std::vector<int> extra(g.edge_count(), 0);
    std::vector<int> from(g.edge_count(), -1);
    for (size_t i = 0; i < chains.size(); ++i) {
        int have = static_cast<int>(chains[i].edges.size());
        int e = chains[i].edges.front();
        extra[e] = target[i] - have;
        from[e] = chains[i].first_from;
    }

    SubdivisionMap m;
    m.original = g;
    Graph& h = m.subdivided;
    for (int v = 0; v < g.vertex_count(); ++v) h.add_vertex(g.label(v));
    m.vertex_origin.resize(g.vertex_count());
    std::iota(m.vertex_origin.begin(), m.vertex_origin.end(), 0);

    // first/last piece of each original edge, oriented from `from` side
    std::vector<int> first_piece(g.edge_count()), last_piece(g.edge_count());
    std::vector<std::vector<int>> inserted_rot;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        int a = from[e] >= 0 ? from[e] : ed.u;
        int b = g.other_end(e, a);
        int prev = a;
        int k = extra[e];
        int first = -1;
        int last = -1;
        for (int i = 0; i < k; ++i) {
            int w = h.add_vertex();
            m.vertex_origin.push_back(-1);
            int pe = h.add_edge(prev, w);
            m.edge_origin.push_back(e);
            if (first < 0) first = pe;
            if (i > 0) inserted_rot.back().push_back(pe);
            inserted_rot.push_back({pe});
            prev = w;
        }
        int pe = h.add_edge(prev, b);
        m.edge_origin.push_back(e);
        if (first < 0) first = pe;
        if (k > 0) inserted_rot.back().push_back(pe);
        last = pe;
        // record pieces relative to u/v of the original edge
        if (a == ed.u) {
            first_piece[e] = first;
            last_piece[e] = last;
        } else {
            first_piece[e] = last;
            last_piece[e] = first;
        }
    }

    if (g.rotation()) {
        Graph::Rotation rot(h.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::map<int, int> seen;
            for (int e : (*g.rotation())[v]) {
                const Edge& ed = g.edge(e);
                int piece;
                if (ed.is_loop()) piece = seen[e]++ == 0 ? first_piece[e] : last_piece[e];
                else piece = ed.u == v ? first_piece[e] : last_piece[e];
                rot[v].push_back(piece);
            }
        }
        for (size_t i = 0; i < inserted_rot.size(); ++i) rot[g.vertex_count() + i] = inserted_rot[i];
        h.set_rotation(std::move(rot));
    }
    h.set_base(g.base());
    h.set_name(g.name());
    return m;
}

Graph contract(const SubdivisionMap& m) {
    const Graph& h = m.subdivided;
    Graph out;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (m.vertex_origin[v] >= 0) out.add_vertex(h.label(v));
    std::vector<int> new_id(h.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (m.vertex_origin[v] >= 0) new_id[v] = next++;
    std::vector<char> used(h.edge_count(), 0);
    for (int s = 0; s < h.vertex_count(); ++s) {
        if (new_id[s] < 0) continue;
        for (int e0 : h.incident(s)) {
            if (used[e0]) continue;
            int cur = s;
            int e = e0;
            while (true) {
                used[e] = 1;
                int nx = h.other_end(e, cur);
                if (new_id[nx] >= 0) {
                    out.add_edge(new_id[s], new_id[nx]);
                    break;
                }
                int f = -1;
                for (int x : h.incident(nx))
                    if (x != e) f = x;
                cur = nx;
                e = f;
            }
        }
    }
    out.set_name(h.name());
    return out;
}

}  // namespace braidlab
