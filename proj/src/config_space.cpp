#include "braidlab/config_space.hpp"

#include <algorithm>

#include "braidlab/error.hpp"

namespace braidlab {

bool CubeCell::operator<(const CubeCell& o) const {
    if (dim != o.dim) return dim < o.dim;
    if (size != o.size) return size < o.size;
    return m < o.m;
}

size_t CubeCellHash::operator()(const CubeCell& c) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ (static_cast<std::uint64_t>(c.dim) << 8 | c.size);
    for (int i = 0; i < c.size; ++i) {
        h ^= c.m[i];
        h *= 1099511628211ull;
    }
    return static_cast<size_t>(h ^ (h >> 29));
}

namespace {

void sort_members(const Graph& g, CubeCell& c) {
    std::sort(c.m.begin(), c.m.begin() + c.dim,
              [&](std::uint16_t a, std::uint16_t b) { return tau_of(g, a) < tau_of(g, b); });
    std::sort(c.m.begin() + c.dim, c.m.begin() + c.size);
}

}  // namespace

CubeCell make_cell(const Graph& g, std::vector<int> edges, std::vector<int> vertices) {
    const size_t total = edges.size() + vertices.size();
    if (total > static_cast<size_t>(kMaxBraidIndex)) throw PreconditionError("braid index above supported maximum");
    if (g.vertex_count() + g.edge_count() > 65535) throw BudgetExceeded("graph too large for packed cells");
    CubeCell c;
    c.dim = static_cast<std::uint8_t>(edges.size());
    c.size = static_cast<std::uint8_t>(total);
    for (size_t i = 0; i < edges.size(); ++i) c.m[i] = static_cast<std::uint16_t>(edges[i]);
    for (size_t i = 0; i < vertices.size(); ++i) c.m[edges.size() + i] = static_cast<std::uint16_t>(vertices[i]);
    sort_members(g, c);
    if (!is_valid_cell(g, c)) throw PreconditionError("cell members do not have disjoint closures");
    return c;
}

bool is_valid_cell(const Graph& g, const CubeCell& c) {
    std::vector<int> pts;
    for (auto e : c.edges()) {
        if (e >= g.edge_count()) return false;
        pts.push_back(g.edge(e).u);
        if (!g.edge(e).is_loop()) pts.push_back(g.edge(e).v);
    }
    for (auto v : c.vertices()) {
        if (v >= g.vertex_count()) return false;
        pts.push_back(v);
    }
    std::sort(pts.begin(), pts.end());
    return std::adjacent_find(pts.begin(), pts.end()) == pts.end();
}

CubeCell replace_edge(const Graph& g, const CubeCell& c, int j, int vertex) {
    CubeCell out;
    out.dim = static_cast<std::uint8_t>(c.dim - 1);
    out.size = c.size;
    int w = 0;
    for (int i = 0; i < c.dim; ++i)
        if (i != j) out.m[w++] = c.m[i];
    // vertices stay sorted: insert `vertex` in place
    int k = c.dim;
    while (k < c.size && c.m[k] < vertex) out.m[w++] = c.m[k++];
    out.m[w++] = static_cast<std::uint16_t>(vertex);
    while (k < c.size) out.m[w++] = c.m[k++];
    (void)g;
    return out;
}

namespace {

template <class Emit>
void enumerate_dim(const Graph& g, int n, int k, Emit&& emit) {
    std::vector<int> edge_order(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) edge_order[e] = e;
    std::stable_sort(edge_order.begin(), edge_order.end(),
                     [&](int a, int b) { return tau_of(g, a) < tau_of(g, b); });
    std::vector<char> occ(g.vertex_count(), 0);
    CubeCell cur;
    cur.dim = static_cast<std::uint8_t>(k);
    cur.size = static_cast<std::uint8_t>(n);

    std::vector<int> free_vs;
    auto place_vertices = [&](auto&& self, int slot, int from) -> void {
        if (slot == n) {
            emit(cur);
            return;
        }
        int remaining = n - slot;
        for (int v = from; v < g.vertex_count(); ++v) {
            if (occ[v]) continue;
            // not enough vertices left is fine to detect lazily
            cur.m[slot] = static_cast<std::uint16_t>(v);
            self(self, slot + 1, v + 1);
            (void)remaining;
        }
    };
    auto place_edges = [&](auto&& self, int slot, int from) -> void {
        if (slot == k) {
            place_vertices(place_vertices, k, 0);
            return;
        }
        for (int idx = from; idx < g.edge_count(); ++idx) {
            int e = edge_order[idx];
            const Edge& ed = g.edge(e);
            if (occ[ed.u] || occ[ed.v]) continue;
            occ[ed.u] = occ[ed.v] = 1;
            cur.m[slot] = static_cast<std::uint16_t>(e);
            self(self, slot + 1, idx + 1);
            occ[ed.u] = occ[ed.v] = 0;
        }
    };
    place_edges(place_edges, 0, 0);
}

}  // namespace

std::vector<std::vector<CubeCell>> enumerate_cells(const Graph& g, int n, int max_dim, CellBudget budget) {
    if (n < 1 || n > kMaxBraidIndex) throw PreconditionError("braid index out of supported range");
    if (g.vertex_count() + g.edge_count() > 65535) throw BudgetExceeded("graph too large for packed cells");
    std::vector<std::vector<CubeCell>> out;
    std::int64_t total = 0;
    for (int k = 0; k <= std::min(max_dim, n); ++k) {
        std::vector<CubeCell> cells;
        enumerate_dim(g, n, k, [&](const CubeCell& c) {
            if (++total > budget.max_cells) throw BudgetExceeded("cell enumeration exceeded cell budget");
            cells.push_back(c);
        });
        std::sort(cells.begin(), cells.end());
        if (cells.empty()) break;
        out.push_back(std::move(cells));
    }
    return out;
}

std::int64_t count_cells(const Graph& g, int n, int k) {
    std::int64_t count = 0;
    enumerate_dim(g, n, k, [&](const CubeCell&) { ++count; });
    return count;
}

int top_dimension(const Graph& g, int n) {
    int k = 0;
    while (k < n) {
        bool any = false;
        try {
            enumerate_dim(g, n, k + 1, [&](const CubeCell&) {
                any = true;
                throw 0;
            });
        } catch (int) {
        }
        if (!any) break;
        ++k;
    }
    return k;
}

ChainComplex boundary_matrices(const Graph& g, int n, std::vector<std::vector<CubeCell>> cells) {
    ChainComplex cc;
    cc.n = n;
    cc.cells = std::move(cells);
    cc.boundary.resize(cc.cells.size());
    for (size_t k = 1; k < cc.cells.size(); ++k) {
        std::unordered_map<CubeCell, int, CubeCellHash> index;
        index.reserve(cc.cells[k - 1].size() * 2);
        for (size_t i = 0; i < cc.cells[k - 1].size(); ++i) index.emplace(cc.cells[k - 1][i], static_cast<int>(i));
        SparseMatrix& m = cc.boundary[k];
        m.rows = static_cast<int>(cc.cells[k - 1].size());
        m.cols = static_cast<int>(cc.cells[k].size());
        m.columns.resize(m.cols);
        for (int col = 0; col < m.cols; ++col) {
            const CubeCell& c = cc.cells[k][col];
            for (int j = 0; j < c.dim; ++j) {
                int e = c.m[j];
                std::int64_t sign = (j % 2 == 0) ? 1 : -1;
                auto hi = index.find(replace_edge(g, c, j, iota_of(g, e)));
                auto lo = index.find(replace_edge(g, c, j, tau_of(g, e)));
                if (hi == index.end() || lo == index.end()) throw InvariantViolation("face missing from cell list");
                m.add(col, hi->second, sign);
                m.add(col, lo->second, -sign);
            }
        }
        m.normalize();
    }
    return cc;
}

ChainComplex build_complex(const Graph& g, int n, int max_dim, CellBudget budget) {
    return boundary_matrices(g, n, enumerate_cells(g, n, max_dim, budget));
}

bool boundary_squares_to_zero(const ChainComplex& cc) {
    for (size_t k = 2; k < cc.boundary.size(); ++k) {
        const auto& outer = cc.boundary[k - 1];
        const auto& inner = cc.boundary[k];
        for (const auto& col : inner.columns) {
            std::unordered_map<int, std::int64_t> acc;
            for (auto& [r, v] : col)
                for (auto& [r2, v2] : outer.columns[r]) acc[r2] += v * v2;
            for (auto& [r2, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

std::int64_t Homology::euler_from_cells() const {
    std::int64_t chi = 0;
    for (size_t k = 0; k < cell_counts.size(); ++k) chi += (k % 2 ? -1 : 1) * cell_counts[k];
    return chi;
}

std::int64_t Homology::euler_from_betti() const {
    std::int64_t chi = 0;
    for (size_t k = 0; k < groups.size(); ++k) chi += (k % 2 ? -1 : 1) * groups[k].betti;
    return chi;
}

Homology homology(const Graph& g, int n, CellBudget budget) {
    ChainComplex cc = build_complex(g, n, n, budget);
    Homology h;
    const size_t top = cc.cells.size();
    h.cell_counts.resize(top);
    h.ranks.assign(top + 1, 0);
    std::vector<std::vector<Integer>> torsion(top + 1);
    for (size_t k = 0; k < top; ++k) h.cell_counts[k] = static_cast<std::int64_t>(cc.cells[k].size());
    for (size_t k = 1; k < top; ++k) {
        auto s = smith(cc.boundary[k]);
        h.ranks[k] = s.rank;
        torsion[k - 1] = std::move(s.torsion);
    }
    h.groups.resize(top);
    for (size_t k = 0; k < top; ++k) {
        h.groups[k].betti = h.cell_counts[k] - h.ranks[k] - h.ranks[k + 1];
        h.groups[k].torsion = torsion[k];
    }
    return h;
}

HomologyGroup homology_in_degree(const Graph& g, int n, int k, CellBudget budget) {
    if (k < 0) throw PreconditionError("negative homological degree");
    ChainComplex cc = build_complex(g, n, k + 1, budget);
    HomologyGroup out;
    if (k >= static_cast<int>(cc.cells.size())) return out;
    std::int64_t rk = 0, rk1 = 0;
    if (k >= 1) rk = smith(cc.boundary[k]).rank;
    if (k + 1 < static_cast<int>(cc.cells.size())) {
        auto s = smith(cc.boundary[k + 1]);
        rk1 = s.rank;
        out.torsion = std::move(s.torsion);
    }
    out.betti = static_cast<std::int64_t>(cc.cells[k].size()) - rk - rk1;
    return out;
}

void export_sparse(const ChainComplex& cc, std::ostream& out) {
    for (size_t k = 1; k < cc.boundary.size(); ++k) {
        const auto& m = cc.boundary[k];
        std::size_t nnz = 0;
        for (const auto& c : m.columns) nnz += c.size();
        out << "dim " << k << " rows " << m.rows << " cols " << m.cols << " nnz " << nnz << "\n";
        for (int c = 0; c < m.cols; ++c)
            for (auto& [r, v] : m.columns[c]) out << r << " " << c << " " << v << "\n";
    }
}

}  // namespace braidlab
