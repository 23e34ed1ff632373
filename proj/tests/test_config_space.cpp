#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "braidlab/config_space.hpp"
#include "braidlab/subdivision.hpp"

using namespace braidlab;

namespace {

// count k-cells by filtering all mixed subsets of size n
std::int64_t brute_count(const Graph& g, int n, int k) {
    const int V = g.vertex_count(), E = g.edge_count();
    std::int64_t count = 0;
    std::vector<int> es, vs;
    std::function<void(int)> pick_vertex;
    std::function<void(int)> pick_edge = [&](int from) {
        if (static_cast<int>(es.size()) == k) {
            pick_vertex(0);
            return;
        }
        for (int e = from; e < E; ++e) {
            es.push_back(e);
            pick_edge(e + 1);
            es.pop_back();
        }
    };
    pick_vertex = [&](int from) {
        if (static_cast<int>(es.size() + vs.size()) == n) {
            std::set<int> used;
            bool ok = true;
            for (int e : es) {
                ok = ok && !g.edge(e).is_loop() && used.insert(g.edge(e).u).second && used.insert(g.edge(e).v).second;
            }
            for (int v : vs) ok = ok && used.insert(v).second;
            count += ok;
            return;
        }
        for (int v = from; v < V; ++v) {
            vs.push_back(v);
            pick_vertex(v + 1);
            vs.pop_back();
        }
    };
    pick_edge(0);
    return count;
}

}  // namespace

TEST_CASE("UD_2 of a three-vertex path") {
    Graph p = path_graph(3);
    auto cells = enumerate_cells(p, 2, 2);
    CHECK(cells[0].size() == 3);
    CHECK(cells[1].size() == 2);
    CHECK((cells.size() < 3 || cells[2].empty()));
    auto h = homology(p, 2);
    CHECK(h.groups[0].betti == 1);
    CHECK(h.groups[1].betti == 0);
}

TEST_CASE("n = 1 gives the graph itself") {
    Graph g = complete_graph(4);
    auto cells = enumerate_cells(g, 1, 1);
    CHECK(static_cast<int>(cells[0].size()) == g.vertex_count());
    CHECK(static_cast<int>(cells[1].size()) == g.edge_count());
}

TEST_CASE("cell counts match the subset filter") {
    Graph g = subdivide_for(complete_graph(5), 2).subdivided;
    auto cells = enumerate_cells(g, 2, 2);
    for (int k = 0; k <= 2; ++k) {
        CAPTURE(k);
        CHECK(static_cast<std::int64_t>(cells[k].size()) == brute_count(g, 2, k));
        CHECK(count_cells(g, 2, k) == brute_count(g, 2, k));
    }
}

TEST_CASE("interval boundary and d^2 = 0") {
    Graph g = subdivide_for(theta_graph(), 3).subdivided;
    auto cc = build_complex(g, 3, 3);
    CHECK(boundary_squares_to_zero(cc));
    // a 1-cell {e} + v has boundary (iota, v) - (tau, v)
    const auto& c = cc.cells[1][0];
    const auto& col = cc.boundary[1].columns[0];
    REQUIRE(col.size() == 2);
    CHECK(col[0].second + col[1].second == 0);
    int e = c.edges()[0];
    auto up = replace_edge(g, c, 0, iota_of(g, e)), down = replace_edge(g, c, 0, tau_of(g, e));
    for (auto [row, val] : col) {
        if (cc.cells[0][row] == up) CHECK(val == 1);
        if (cc.cells[0][row] == down) CHECK(val == -1);
    }
}

TEST_CASE("square boundaries close up") {
    Graph g = subdivide_for(star_graph(4), 3).subdivided;
    auto cc = build_complex(g, 2, 2);
    REQUIRE(cc.cells.size() > 2);
    REQUIRE(!cc.cells[2].empty());
    for (const auto& col : cc.boundary[2].columns) {
        CHECK(col.size() == 4);
        int sum = 0;
        for (auto [r, v] : col) sum += static_cast<int>(v < 0 ? -v : v);
        CHECK(sum == 4);
    }
    CHECK(boundary_squares_to_zero(cc));
}

TEST_CASE("claw at n = 2 has one loop") {
    Graph y = subdivide_for(star_graph(3), 2).subdivided;
    CHECK(homology_in_degree(y, 2, 1).betti == 1);
}

TEST_CASE("Euler-Poincare on small graphs") {
    for (const Graph& g : {star_graph(3), cycle_graph(4), theta_graph(), complete_graph(4)}) {
        for (int n = 2; n <= 3; ++n) {
            auto h = homology(subdivide_for(g, n).subdivided, n);
            CHECK(h.euler_from_cells() == h.euler_from_betti());
        }
    }
}

TEST_CASE("cell budget is enforced") {
    Graph g = subdivide_for(complete_graph(4), 4).subdivided;
    CHECK_THROWS(enumerate_cells(g, 4, 4, CellBudget{10}));
}
