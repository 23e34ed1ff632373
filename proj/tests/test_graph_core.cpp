#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "braidlab/error.hpp"
#include "braidlab/subdivision.hpp"
#include "braidlab/topology.hpp"

using namespace braidlab;

namespace {

Graph two_triangles() { return parse_graph("e 0 1\ne 1 2\ne 2 0\ne 0 3\ne 3 4\ne 4 0\n"); }

// every path between vertices of degree != 2 through degree-2 vertices
std::vector<int> chain_lengths(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 2) continue;
        for (int e : g.incident(v)) {
            int len = 1, prev = v, cur = g.other_end(e, v), edge = e;
            while (g.degree(cur) == 2 && cur != v) {
                int next_e = -1;
                for (int f : g.incident(cur))
                    if (f != edge) next_e = f;
                prev = cur;
                edge = next_e;
                cur = g.other_end(edge, prev);
                ++len;
            }
            out.push_back(len);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("parse and format round trip") {
    Graph g = parse_graph("# demo\nv 7\nv 3\nv 5\ne 7 3\ne 3 5\nbase 7\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.base().has_value());
    Graph h = parse_graph(format_graph(g));
    CHECK(h.edge_count() == 2);
    CHECK(h.label(*h.base()) == 7);
}

TEST_CASE("parse rejects dangling input") {
    CHECK_THROWS_AS(parse_graph("e 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("e 0 1\nbase 9\n"), ParseError);
}

TEST_CASE("subdivision: single edge is already sufficient") {
    auto m = subdivide_for(path_graph(2), 2);
    CHECK(m.subdivided.edge_count() == 1);
}

TEST_CASE("subdivision: triangle at n = 2 is unchanged") {
    auto m = subdivide_for(cycle_graph(3), 2);
    CHECK(m.subdivided.edge_count() == 3);
}

TEST_CASE("subdivision: theta at n = 4 gets chains of length at least 3") {
    auto m = subdivide_for(theta_graph(), 4);
    auto lens = chain_lengths(m.subdivided);
    REQUIRE(!lens.empty());
    for (int l : lens) CHECK(l >= 3);
    Graph back = contract(m);
    CHECK(back.edge_count() == 3);
    CHECK(back.vertex_count() == 2);
}

TEST_CASE("topological containment") {
    auto theta = make_pattern("theta", theta_graph());
    CHECK(contains_topologically(theta_graph(), theta));
    CHECK_FALSE(contains_topologically(cycle_graph(5), theta));
    auto emb = find_topological_embedding(complete_graph(4), theta);
    REQUIRE(emb.has_value());
    // witness paths are internally disjoint
    std::set<int> interior;
    for (const auto& p : emb->paths)
        for (size_t i = 1; i + 1 < p.size(); ++i) CHECK(interior.insert(p[i]).second);
}

TEST_CASE("cactus recognition") {
    CHECK(is_cactus(two_triangles()));
    CHECK_FALSE(is_cactus(theta_graph()));
    CHECK_FALSE(is_cactus(complete_graph(4)));
    CHECK(is_cactus(complete_graph(4)) == !contains_topologically(complete_graph(4), make_pattern("t", theta_graph())));
}

TEST_CASE("nuclei detection") {
    CHECK(detect_nuclei(parse_graph("e 0 1\ne 1 2\ne 2 3\ne 1 4\ne 2 5\n")).empty());
    CHECK(detect_nuclei(theta_graph()) == std::vector<Nucleus>{Nucleus::N1});
    for (auto& [k, p] : default_nuclei()) {
        auto found = detect_nuclei(p.graph);
        REQUIRE(!found.empty());
        CHECK(found.front() == k);
        if (k != Nucleus::N1) CHECK(std::find(found.begin(), found.end(), Nucleus::N1) == found.end());
    }
}

TEST_CASE("pattern files agree with the built-in nuclei") {
    for (auto& [k, p] : default_nuclei()) {
        auto q = load_pattern(std::string(BRAIDLAB_DATA_DIR) + "/patterns/" + p.name + ".graph");
        CHECK(q.graph.edge_count() == p.graph.edge_count());
        CHECK(contains_topologically(q.graph, p));
        CHECK(contains_topologically(p.graph, q));
    }
}

TEST_CASE("building blocks") {
    SUBCASE("candy") {
        auto bs = building_blocks(parse_graph("e 0 1\ne 1 2\ne 2 3\ne 3 0\ne 1 4\ne 3 5\n"));
        REQUIRE(bs.size() == 1);
        CHECK(bs[0].kind == BlockKind::Candy);
    }
    SUBCASE("wedge of two circles") {
        auto bs = building_blocks(parse_graph("e 0 0\ne 0 0\n"));
        REQUIRE(bs.size() == 1);
        CHECK(bs[0].kind == BlockKind::StarBouquet);
    }
    SUBCASE("pendant, candy, bouquet chain") {
        Graph g = parse_graph("e 9 0\ne 0 8\ne 0 1\ne 1 2\ne 2 3\ne 3 0\ne 3 4\ne 4 4\ne 4 4\n");
        // pendants do not form blocks of their own
        auto bs = building_blocks(g);
        REQUIRE(bs.size() == 2);
        CHECK(bs[0].kind == BlockKind::Candy);
        CHECK(bs[1].kind == BlockKind::StarBouquet);
    }
}
