#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <unordered_map>
#include <vector>

#include "braidlab/graph.hpp"
#include "braidlab/intmat.hpp"

namespace braidlab {

inline constexpr int kMaxBraidIndex = 8;

// k edges followed by n-k vertices. Edges are kept sorted by their smaller
// endpoint, vertices ascending; the orientation of an edge runs from the
// larger endpoint id (iota) to the smaller one (tau).
struct CubeCell {
    std::uint8_t dim = 0;
    std::uint8_t size = 0;
    std::array<std::uint16_t, kMaxBraidIndex> m{};

    std::span<const std::uint16_t> edges() const { return {m.data(), dim}; }
    std::span<const std::uint16_t> vertices() const { return {m.data() + dim, static_cast<size_t>(size - dim)}; }

    bool operator==(const CubeCell& o) const { return dim == o.dim && size == o.size && m == o.m; }
    bool operator<(const CubeCell& o) const;
};

struct CubeCellHash {
    size_t operator()(const CubeCell& c) const noexcept;
};

// Build a cell from arbitrary member lists, checking closure-disjointness.
CubeCell make_cell(const Graph& g, std::vector<int> edges, std::vector<int> vertices);
bool is_valid_cell(const Graph& g, const CubeCell& c);

inline int iota_of(const Graph& g, int e) { return std::max(g.edge(e).u, g.edge(e).v); }
inline int tau_of(const Graph& g, int e) { return std::min(g.edge(e).u, g.edge(e).v); }

// Face obtained by replacing the j-th edge with one of its endpoints.
CubeCell replace_edge(const Graph& g, const CubeCell& c, int j, int vertex);

struct CellBudget {
    std::int64_t max_cells = 20'000'000;
};

// All cells of dimension 0..max_dim, each list in canonical order.
std::vector<std::vector<CubeCell>> enumerate_cells(const Graph& g, int n, int max_dim, CellBudget budget = {});
std::int64_t count_cells(const Graph& g, int n, int k);

struct ChainComplex {
    int n = 0;
    std::vector<std::vector<CubeCell>> cells;   // per dimension
    std::vector<SparseMatrix> boundary;         // boundary[k]: C_k -> C_{k-1}; boundary[0] empty
};

ChainComplex boundary_matrices(const Graph& g, int n, std::vector<std::vector<CubeCell>> cells);
ChainComplex build_complex(const Graph& g, int n, int max_dim, CellBudget budget = {});

// Largest k with a k-cell.
int top_dimension(const Graph& g, int n);

bool boundary_squares_to_zero(const ChainComplex& cc);

struct HomologyGroup {
    std::int64_t betti = 0;
    std::vector<Integer> torsion;
};

struct Homology {
    std::vector<std::int64_t> cell_counts;  // per dimension
    std::vector<std::int64_t> ranks;        // ranks[k] = rank of boundary[k]
    std::vector<HomologyGroup> groups;      // H_0 .. H_top
    std::int64_t euler_from_cells() const;
    std::int64_t euler_from_betti() const;
};

// Full integral homology of UD_n g through the top dimension.
Homology homology(const Graph& g, int n, CellBudget budget = {});
// H_k only (needs boundaries k and k+1).
HomologyGroup homology_in_degree(const Graph& g, int n, int k, CellBudget budget = {});

void export_sparse(const ChainComplex& cc, std::ostream& out);

}  // namespace braidlab
