#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "braidlab/spanning.hpp"
#include "braidlab/subdivision.hpp"
#include "braidlab/topology.hpp"

using namespace braidlab;

namespace {

Graph corpus(const std::string& name) { return load_graph(std::string(BRAIDLAB_DATA_DIR) + "/corpus/" + name + ".graph"); }

}  // namespace

TEST_CASE("path numbered along itself") {
    Graph p = path_graph(4);
    p.set_base(0);
    auto sd = build_spanning(p, SpanningMode::LinearCactus);
    CHECK(sd.deleted.empty());
    Graph h = sd.numbered();
    for (int e = 0; e < h.edge_count(); ++e) CHECK(std::abs(h.edge(e).u - h.edge(e).v) == 1);
    CHECK(sd.order[0] == 0);
}

TEST_CASE("single cycle: one deleted edge ending at the base") {
    auto pr = prepare(cycle_graph(4), 2, SpanningMode::Cactus);
    REQUIRE(pr.spanning.deleted.size() == 1);
    CHECK(pr.spanning.tau(pr.spanning.deleted[0]) == 0);
}

TEST_CASE("structural invariants of the numbering") {
    for (const std::string name : {"C4", "Y", "N2", "N3", "N4", "candy", "twocandy", "bouquetcandy"}) {
        CAPTURE(name);
        auto pr = prepare(corpus(name), 4, SpanningMode::Cactus);
        const auto& sd = pr.spanning;
        CHECK(sd.order[*sd.graph.base()] == 0);
        int tree = 0;
        for (int e = 0; e < sd.graph.edge_count(); ++e) {
            if (!sd.graph.edge(e).is_loop()) CHECK(sd.iota(e) > sd.tau(e));
            tree += sd.in_tree[e];
        }
        CHECK(tree == sd.graph.vertex_count() - 1);
        CHECK(verify_properties(sd).all_hold());
    }
}

TEST_CASE("linear cactus: T5 and g(A,B) = mu(A)") {
    for (const std::string name : {"C4", "candy", "twocandy", "bouquetcandy", "htree"}) {
        CAPTURE(name);
        auto pr = prepare(corpus(name), 4, SpanningMode::LinearCactus);
        auto rep = verify_properties(pr.spanning);
        CHECK(rep.all_hold());
        REQUIRE(rep.find("T5") != nullptr);
        CHECK(rep.find("T5")->holds);
        BranchTable bt(pr.spanning);
        for (int a = 0; a < bt.size(); ++a)
            for (int b = a + 1; b < bt.size(); ++b) {
                if (!bt.essential(a) || !bt.essential(b) || a == 0) continue;
                CHECK(bt.wedge(a, b) == a);
                CHECK(bt.g(a, b) == bt.mu(a));
            }
    }
}

TEST_CASE("N2 in linear mode still satisfies the tree properties") {
    auto pr = prepare(corpus("N2"), 4, SpanningMode::Cactus);
    CHECK(verify_properties(pr.spanning).all_hold());
}

TEST_CASE("corrupted numbering is caught") {
    auto pr = prepare(corpus("candy"), 3, SpanningMode::Cactus);
    SpanningData sd = pr.spanning;
    // drop one tree edge so the tree no longer spans
    auto it = std::find(sd.in_tree.begin(), sd.in_tree.end(), 1);
    REQUIRE(it != sd.in_tree.end());
    *it = 0;
    auto rep = verify_properties(sd);
    CHECK_FALSE(rep.all_hold());
    bool witness = false;
    for (const auto& c : rep.checks)
        if (c.checked && !c.holds) witness = witness || !c.counterexample.empty();
    CHECK(witness);
}

TEST_CASE("branch queries") {
    auto pr = prepare(corpus("Y"), 2, SpanningMode::Cactus);
    BranchTable bt(pr.spanning);
    int centre = -1;
    for (int v = 0; v < bt.size(); ++v)
        if (bt.essential(v)) centre = v;
    REQUIRE(centre >= 0);
    for (int v = 0; v < bt.size(); ++v)
        for (int w = 0; w < bt.size(); ++w) {
            int x = bt.wedge(v, w);
            CHECK(x <= std::min(v, w));
            if (v == x && v != w && bt.essential(v)) CHECK(bt.g(v, w) >= 1);
            if (!bt.in_subtree(v, w)) CHECK(bt.g(v, w) == 0);
        }
    // leaves on different branches of the centre meet there
    std::vector<int> leaves;
    for (int v = 0; v < bt.size(); ++v)
        if (bt.children(v).empty() && bt.in_subtree(centre, v)) leaves.push_back(v);
    REQUIRE(leaves.size() >= 2);
    CHECK(bt.wedge(leaves[0], leaves[1]) == centre);
}

TEST_CASE("T3: vertices between the ends of a deleted edge see it on branch 1") {
    auto pr = prepare(corpus("candy"), 4, SpanningMode::Cactus);
    const auto& sd = pr.spanning;
    BranchTable bt(sd);
    for (int d : sd.deleted) {
        int t = sd.tau(d), i = sd.iota(d);
        for (int v = bt.parent(i); v != t && v > 0; v = bt.parent(v))
            if (bt.essential(v)) CHECK(bt.g(v, i) == 1);
    }
}
