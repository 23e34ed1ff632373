#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "braidlab/config_space.hpp"
#include "braidlab/morse.hpp"
#include "braidlab/spanning.hpp"
#include "braidlab/subdivision.hpp"
#include "braidlab/topology.hpp"

using namespace braidlab;

namespace {

Graph corpus(const std::string& name) { return load_graph(std::string(BRAIDLAB_DATA_DIR) + "/corpus/" + name + ".graph"); }

MorseComplex morse(const Graph& g, int n, SpanningMode mode = SpanningMode::Cactus) {
    return MorseComplex(prepare(g, n, mode).spanning, n);
}

}  // namespace

TEST_CASE("the stacked 0-cell is the only critical 0-cell") {
    auto mc = morse(corpus("candy"), 3);
    REQUIRE(mc.critical(0).size() == 1);
    const auto& c = mc.critical(0)[0];
    std::vector<int> verts(c.vertices().begin(), c.vertices().end());
    CHECK(verts == std::vector<int>{0, 1, 2});
    CHECK(mc.classify(c).kind == MorseKind::Critical);
}

TEST_CASE("a deleted edge with everything blocked is critical") {
    auto mc = morse(corpus("C4"), 2);
    REQUIRE(mc.spanning().deleted.size() == 1);
    const int d = mc.spanning().deleted[0];
    int found = 0;
    for (const auto& c : mc.critical(1))
        if (c.edges()[0] == d) {
            ++found;
            CHECK(mc.classify(c).kind == MorseKind::Critical);
            CHECK_FALSE(mc.order_respecting(c, d));
        }
    CHECK(found == 1);
}

TEST_CASE("claw at n = 2: one critical 1-cell at the centre") {
    auto mc = morse(star_graph(3), 2);
    REQUIRE(mc.critical(1).size() == 1);
    CHECK(mc.critical(2).empty());
    auto nm = mc.name_of(mc.critical(1)[0]);
    CHECK(mc.branches().essential(nm.first.vertex));
    CHECK(nm.first.branch == 2);
    CHECK(nm.first.counts == std::vector<int>{1, 0});
    auto p = mc.raw_presentation();
    CHECK(p.generator_count() == 1);
    CHECK(p.relators.empty());
}

TEST_CASE("names round trip and satisfy the size bounds") {
    for (const std::string name : {"N2", "twocandy", "htree"}) {
        for (int n = 2; n <= 4; ++n) {
            auto mc = morse(corpus(name), n);
            for (int dim = 1; dim <= 2; ++dim)
                for (const auto& c : mc.critical(dim)) {
                    auto nm = mc.name_of(c);
                    CHECK(mc.cell_of(nm) == c);
                    CHECK(mc.is_critical(c));
                    int total = nm.first.total() + (nm.second ? nm.second->total() : 0);
                    CHECK(total <= n - dim);
                }
        }
    }
}

TEST_CASE("critical census reproduces the Euler characteristic") {
    for (const std::string name : {"Y", "candy", "N3", "htree"}) {
        for (int n = 2; n <= 3; ++n) {
            auto mc = morse(corpus(name), n);
            auto census = mc.critical_census();
            std::int64_t chi = 0;
            for (size_t k = 0; k < census.size(); ++k) chi += (k % 2 ? -1 : 1) * census[k];
            CHECK(chi == homology(subdivide_for(corpus(name), n).subdivided, n).euler_from_betti());
            CHECK(census[1] == static_cast<std::int64_t>(mc.critical(1).size()));
            CHECK(census[2] == static_cast<std::int64_t>(mc.critical(2).size()));
        }
    }
}

TEST_CASE("name-based listing agrees with exhaustive classification on a non-cactus graph") {
    auto mc = morse(complete_graph(4), 3, SpanningMode::General);
    auto census = mc.critical_census();
    CHECK(census[1] == static_cast<std::int64_t>(mc.critical(1).size()));
    CHECK(census[2] == static_cast<std::int64_t>(mc.critical(2).size()));
}

TEST_CASE("rewriting fixes critical cells") {
    auto mc = morse(corpus("N2"), 4);
    for (size_t i = 0; i < mc.critical(1).size(); ++i)
        CHECK(mc.rewrite(mc.critical(1)[i]) == GroupWord::generator(static_cast<int>(i)));
}

TEST_CASE("boundary word agrees with the cubical boundary up to a global sign") {
    auto mc = morse(corpus("candy"), 3);
    auto cc = build_complex(mc.graph(), 3, 2);
    std::map<CubeCell, int> row;
    for (size_t i = 0; i < cc.cells[1].size(); ++i) row[cc.cells[1][i]] = static_cast<int>(i);
    std::map<CubeCell, int> col;
    for (size_t i = 0; i < cc.cells[2].size(); ++i) col[cc.cells[2][i]] = static_cast<int>(i);
    for (const auto& c : mc.critical(2)) {
        auto word = mc.boundary_word(c);
        CHECK(word.size() == 4);
        std::map<int, std::int64_t> from_word, from_complex;
        for (auto [cell, sign] : word) from_word[row.at(cell)] -= sign;
        for (auto [r, v] : cc.boundary[2].columns[col.at(c)]) from_complex[r] += v;
        CHECK(from_word == from_complex);
    }
}

TEST_CASE("bold words") {
    auto mc = morse(corpus("twocandy"), 4, SpanningMode::LinearCactus);
    const auto& bt = mc.branches();
    for (int A = 1; A < bt.size(); ++A) {
        if (!bt.essential(A)) continue;
        const int mu = bt.mu(A);
        CHECK(mc.bold_A(A, std::vector<int>(mu, 0), 1, 1).empty());
        // a = (a)_l
        auto a = vec::delta(mu, 1, 2);
        CHECK(mc.bold_A(A, a, 1, 1).empty());
    }
}

TEST_CASE("closed forms match the rewrite and carry case tags") {
    std::map<int, int> tags;
    for (const std::string name : {"N2", "N3", "twocandy"}) {
        auto mc = morse(corpus(name), 4);
        for (const auto& c : mc.critical(2)) {
            int tag = 0;
            auto w = mc.closed_form_boundary(c, false, &tag);
            CHECK(equal_up_to_cyclic_and_inverse(w, mc.boundary_relator(c)));
            ++tags[tag];
        }
    }
    CHECK(tags.size() >= 3);
}

TEST_CASE("linear closed form in case 3 is a plain commutator of letters") {
    auto mc = morse(corpus("twocandy"), 4, SpanningMode::LinearCactus);
    int seen = 0;
    for (const auto& c : mc.critical(2)) {
        int tag = 0;
        auto w = mc.closed_form_boundary(c, true, &tag);
        if (tag != 3) continue;
        ++seen;
        CHECK(w.length() == 4);
        CHECK(equal_up_to_cyclic_and_inverse(w, mc.boundary_relator(c)));
    }
    CHECK(seen > 0);
}

TEST_CASE("raw presentations abelianize to the oracle") {
    for (const std::string name : {"Y", "C4", "N2", "bouquet"}) {
        for (int n = 2; n <= 3; ++n) {
            auto mc = morse(corpus(name), n);
            auto h = homology_in_degree(subdivide_for(corpus(name), n).subdivided, n, 1);
            auto ab = abelianization(mc.raw_presentation());
            CHECK(ab.rank == h.betti);
        }
    }
}

TEST_CASE("trees at n = 2 give free groups") {
    auto mc = morse(corpus("htree"), 2);
    CHECK(mc.critical(2).empty());
    CHECK(mc.raw_presentation().generator_count() == 2);
}
