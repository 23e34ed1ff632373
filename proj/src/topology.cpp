#include "braidlab/topology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "braidlab/error.hpp"

namespace braidlab {

std::vector<int> PatternGraph::branch_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (graph.degree(v) >= 3) out.push_back(v);
    return out;
}

PatternGraph make_pattern(std::string name, Graph g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 2) throw PreconditionError("pattern " + name + " has a degree-2 vertex");
    g.set_name(name);
    return PatternGraph{std::move(name), std::move(g)};
}

PatternGraph load_pattern(const std::filesystem::path& path) {
    Graph g = load_graph(path);
    std::string name = g.name();
    return make_pattern(std::move(name), std::move(g));
}

namespace {

class Embedder {
public:
    Embedder(const Graph& host, const PatternGraph& p, SearchBudget budget)
        : h_(host), p_(p.graph), budget_(budget) {
        const int pv = p_.vertex_count();
        is_leaf_.assign(pv, 0);
        for (int v = 0; v < pv; ++v) {
            if (p_.degree(v) != 1) continue;
            int nb = p_.other_end(p_.incident(v)[0], v);
            if (p_.degree(nb) != 1) is_leaf_[v] = 1;
        }
        for (int v = 0; v < pv; ++v)
            if (!is_leaf_[v]) core_.push_back(v);
        if (core_.size() > 8) throw PreconditionError("pattern has more than 8 branch vertices");
        std::stable_sort(core_.begin(), core_.end(),
                         [&](int a, int b) { return p_.degree(a) > p_.degree(b); });
        rank_.assign(pv, -1);
        for (size_t i = 0; i < core_.size(); ++i) rank_[core_[i]] = static_cast<int>(i);
        // core edges are routed right after their later endpoint is placed
        edges_at_.resize(core_.size());
        for (int e = 0; e < p_.edge_count(); ++e) {
            const Edge& ed = p_.edge(e);
            if (is_leaf_[ed.u] || is_leaf_[ed.v]) {
                leaf_edges_.push_back(e);
                continue;
            }
            edges_at_[std::max(rank_[ed.u], rank_[ed.v])].push_back(e);
        }
        map_.assign(pv, -1);
        paths_.assign(p_.edge_count(), {});
        vused_.assign(h_.vertex_count(), 0);
        eused_.assign(h_.edge_count(), 0);
    }

    std::optional<Embedding> run() {
        if (place(0)) {
            Embedding emb;
            emb.vertex_map = map_;
            emb.paths = paths_;
            return emb;
        }
        return std::nullopt;
    }

private:
    void tick() {
        if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("topological containment search exceeded node budget");
    }

    bool place(size_t i) {
        if (i == core_.size()) return match_leaves();
        int pv = core_[i];
        for (int hv = 0; hv < h_.vertex_count(); ++hv) {
            if (vused_[hv] || h_.degree(hv) < p_.degree(pv)) continue;
            tick();
            vused_[hv] = 1;
            map_[pv] = hv;
            if (route(i, 0)) return true;
            map_[pv] = -1;
            vused_[hv] = 0;
        }
        return false;
    }

    bool route(size_t i, size_t j) {
        if (j == edges_at_[i].size()) return place(i + 1);
        int e = edges_at_[i][j];
        int a = map_[p_.edge(e).u];
        int b = map_[p_.edge(e).v];
        int free_vertices = 0;
        for (char u : vused_) free_vertices += !u;
        for (int len = 1; len <= free_vertices + 1; ++len) {
            std::vector<int> vs{a};
            if (extend(i, j, e, b, len, vs)) return true;
        }
        return false;
    }

    // Depth-limited enumeration of simple paths of exactly `len` edges.
    bool extend(size_t i, size_t j, int pe, int target, int len, std::vector<int>& vs) {
        tick();
        int cur = vs.back();
        int depth = static_cast<int>(vs.size()) - 1;
        for (int he : h_.incident(cur)) {
            if (eused_[he]) continue;
            int nx = h_.other_end(he, cur);
            if (depth + 1 == len) {
                if (nx != target) continue;
                eused_[he] = 1;
                vs.push_back(nx);
                paths_[pe] = vs;
                if (route(i, j + 1)) return true;
                vs.pop_back();
                eused_[he] = 0;
            } else {
                if (vused_[nx]) continue;
                eused_[he] = 1;
                vused_[nx] = 1;
                vs.push_back(nx);
                if (extend(i, j, pe, target, len, vs)) return true;
                vs.pop_back();
                vused_[nx] = 0;
                eused_[he] = 0;
            }
        }
        return false;
    }

    // Leaf edges only need distinct free neighbours of the image of their anchor.
    bool match_leaves() {
        std::vector<int> owner(h_.vertex_count(), -1);
        std::vector<int> via(leaf_edges_.size(), -1);
        std::vector<std::pair<int, int>> opts;
        std::function<bool(size_t, std::vector<char>&)> augment = [&](size_t li, std::vector<char>& seen) {
            const Edge& ed = p_.edge(leaf_edges_[li]);
            int anchor = is_leaf_[ed.u] ? ed.v : ed.u;
            int ha = map_[anchor];
            for (int he : h_.incident(ha)) {
                if (eused_[he]) continue;
                int nx = h_.other_end(he, ha);
                if (vused_[nx] || seen[nx]) continue;
                seen[nx] = 1;
                if (owner[nx] < 0 || augment(owner[nx], seen)) {
                    owner[nx] = static_cast<int>(li);
                    via[li] = he;
                    return true;
                }
            }
            return false;
        };
        for (size_t li = 0; li < leaf_edges_.size(); ++li) {
            tick();
            std::vector<char> seen(h_.vertex_count(), 0);
            if (!augment(li, seen)) return false;
        }
        for (int hv = 0; hv < h_.vertex_count(); ++hv) {
            if (owner[hv] < 0) continue;
            int e = leaf_edges_[owner[hv]];
            const Edge& ed = p_.edge(e);
            int leaf = is_leaf_[ed.u] ? ed.u : ed.v;
            int anchor = p_.other_end(e, leaf);
            map_[leaf] = hv;
            paths_[e] = ed.u == anchor ? std::vector<int>{map_[anchor], hv} : std::vector<int>{hv, map_[anchor]};
        }
        return true;
    }

    const Graph& h_;
    const Graph& p_;
    SearchBudget budget_;
    std::int64_t nodes_ = 0;
    std::vector<char> is_leaf_;
    std::vector<int> core_;
    std::vector<int> rank_;
    std::vector<std::vector<int>> edges_at_;
    std::vector<int> leaf_edges_;
    std::vector<int> map_;
    std::vector<std::vector<int>> paths_;
    std::vector<char> vused_;
    std::vector<char> eused_;
};

}  // namespace

std::optional<Embedding> find_topological_embedding(const Graph& host, const PatternGraph& p,
                                                      SearchBudget budget) {
    return Embedder(host, p, budget).run();
}

bool contains_topologically(const Graph& host, const PatternGraph& p, SearchBudget budget) {
    return find_topological_embedding(host, p, budget).has_value();
}

std::vector<std::vector<int>> biconnected_blocks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
        disc[v] = low[v] = timer++;
        for (int e : g.incident(v)) {
            if (e == parent_edge) continue;
            if (g.edge(e).is_loop()) continue;
            int w = g.other_end(e, v);
            if (disc[w] < 0) {
                edge_stack.push_back(e);
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<int> blk;
                    while (true) {
                        int f = edge_stack.back();
                        edge_stack.pop_back();
                        blk.push_back(f);
                        if (f == e) break;
                    }
                    std::sort(blk.begin(), blk.end());
                    blocks.push_back(std::move(blk));
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.push_back(e);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] < 0) dfs(v, -1);
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).is_loop()) blocks.push_back({e});
    return blocks;
}

namespace {

std::set<int> block_vertices(const Graph& g, const std::vector<int>& blk) {
    std::set<int> vs;
    for (int e : blk) {
        vs.insert(g.edge(e).u);
        vs.insert(g.edge(e).v);
    }
    return vs;
}

}  // namespace

bool is_cactus(const Graph& g) {
    for (const auto& blk : biconnected_blocks(g))
        if (blk.size() > block_vertices(g, blk).size()) return false;
    return true;
}

std::string nucleus_name(Nucleus n) { return "N" + std::to_string(static_cast<int>(n)); }

std::vector<std::pair<Nucleus, PatternGraph>> default_nuclei() {
    std::vector<std::pair<Nucleus, PatternGraph>> out;
    out.emplace_back(Nucleus::N1, make_pattern("N1", theta_graph()));

    Graph n2;  // A=0, B=1; double edge A-B, loop at B, pendant at A
    for (int i = 0; i < 3; ++i) n2.add_vertex(i);
    n2.add_edge(0, 1);
    n2.add_edge(0, 1);
    n2.add_edge(1, 1);
    n2.add_edge(0, 2);
    out.emplace_back(Nucleus::N2, make_pattern("N2", std::move(n2)));

    Graph n3;  // triangle with a pendant at each corner
    for (int i = 0; i < 6; ++i) n3.add_vertex(i);
    n3.add_edge(0, 1);
    n3.add_edge(1, 2);
    n3.add_edge(2, 0);
    for (int i = 0; i < 3; ++i) n3.add_edge(i, i + 3);
    out.emplace_back(Nucleus::N3, make_pattern("N3", std::move(n3)));

    Graph n4;  // centre 0, arms 1..3, two leaves per arm
    for (int i = 0; i < 10; ++i) n4.add_vertex(i);
    for (int a = 1; a <= 3; ++a) {
        n4.add_edge(0, a);
        n4.add_edge(a, 2 + 2 * a);
        n4.add_edge(a, 3 + 2 * a);
    }
    out.emplace_back(Nucleus::N4, make_pattern("N4", std::move(n4)));
    return out;
}

std::vector<Nucleus> detect_nuclei(const Graph& g, const std::vector<std::pair<Nucleus, PatternGraph>>& patterns,
                                   SearchBudget budget) {
    std::vector<Nucleus> out;
    for (const auto& [tag, p] : patterns)
        if (contains_topologically(g, p, budget)) out.push_back(tag);
    return out;
}

std::vector<Nucleus> detect_nuclei(const Graph& g, SearchBudget budget) {
    return detect_nuclei(g, default_nuclei(), budget);
}

std::vector<BuildingBlock> building_blocks(const Graph& g) {
    if (!is_cactus(g)) throw PreconditionError("building_blocks needs a cactus graph");
    if (!detect_nuclei(g).empty()) throw PreconditionError("building_blocks needs a graph without nuclei");

    const int n = g.vertex_count();
    std::vector<char> essential(n, 0);
    for (int v = 0; v < n; ++v) essential[v] = g.degree(v) >= 3;

    std::vector<BuildingBlock> blocks;
    std::vector<int> block_of(n, -1);
    for (const auto& blk : biconnected_blocks(g)) {
        auto vs = block_vertices(g, blk);
        if (blk.size() != vs.size()) continue;  // bridges
        std::vector<int> ess;
        for (int v : vs)
            if (essential[v]) ess.push_back(v);
        if (ess.size() != 2) continue;
        for (int v : ess)
            if (block_of[v] >= 0) throw PreconditionError("candy cycles must not touch other cycles");
        BuildingBlock b{BlockKind::Candy, ess, {vs.begin(), vs.end()}};
        for (int v : ess) block_of[v] = static_cast<int>(blocks.size());
        blocks.push_back(std::move(b));
    }
    for (int v = 0; v < n; ++v) {
        if (!essential[v] || block_of[v] >= 0) continue;
        block_of[v] = static_cast<int>(blocks.size());
        blocks.push_back(BuildingBlock{BlockKind::StarBouquet, {v}, {v}});
    }
    if (blocks.empty()) {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        return {BuildingBlock{BlockKind::StarBouquet, {}, all}};
    }
    // Loop vertices join their star-bouquet.
    for (const auto& blk : biconnected_blocks(g)) {
        auto vs = block_vertices(g, blk);
        if (blk.size() != vs.size()) continue;
        std::vector<int> ess;
        for (int v : vs)
            if (essential[v]) ess.push_back(v);
        if (ess.size() == 1 && blocks[block_of[ess[0]]].kind == BlockKind::StarBouquet)
            for (int v : vs)
                if (v != ess[0]) blocks[block_of[ess[0]]].vertices.push_back(v);
    }

    // Block adjacency via chains of degree-2 vertices between essential vertices.
    const int nb = static_cast<int>(blocks.size());
    std::vector<std::set<int>> adj(nb);
    for (int s = 0; s < n; ++s) {
        if (!essential[s]) continue;
        for (int e0 : g.incident(s)) {
            int cur = s;
            int e = e0;
            while (true) {
                int nx = g.other_end(e, cur);
                if (essential[nx]) {
                    if (block_of[nx] != block_of[s]) adj[block_of[s]].insert(block_of[nx]);
                    break;
                }
                if (g.degree(nx) != 2) break;
                int f = -1;
                for (int x : g.incident(nx))
                    if (x != e) f = x;
                cur = nx;
                e = f;
            }
        }
    }
    int start = -1;
    for (int b = 0; b < nb; ++b) {
        if (adj[b].size() > 2) throw PreconditionError("building blocks are not linearly arranged");
        if (adj[b].size() <= 1) {
            int mb = *std::min_element(blocks[b].vertices.begin(), blocks[b].vertices.end());
            if (start < 0 || mb < *std::min_element(blocks[start].vertices.begin(), blocks[start].vertices.end()))
                start = b;
        }
    }
    if (start < 0) throw PreconditionError("building blocks form a cycle");
    std::vector<BuildingBlock> ordered;
    std::vector<char> seen(nb, 0);
    int prev = -1;
    for (int cur = start; cur >= 0;) {
        seen[cur] = 1;
        ordered.push_back(blocks[cur]);
        int nxt = -1;
        for (int x : adj[cur])
            if (x != prev && !seen[x]) nxt = x;
        prev = cur;
        cur = nxt;
    }
    if (static_cast<int>(ordered.size()) != nb) throw PreconditionError("building blocks are not linearly arranged");
    return ordered;
}

}  // namespace braidlab
