#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "braidlab/config_space.hpp"
#include "braidlab/error.hpp"
#include "braidlab/fox.hpp"
#include "braidlab/raag.hpp"
#include "braidlab/subdivision.hpp"
#include "braidlab/tietze.hpp"

using namespace braidlab;

namespace {

Graph corpus(const std::string& name) { return load_graph(std::string(BRAIDLAB_DATA_DIR) + "/corpus/" + name + ".graph"); }

MorseComplex morse(const Graph& g, int n, SpanningMode mode = SpanningMode::Cactus) {
    return MorseComplex(prepare(g, n, mode).spanning, n);
}

}  // namespace

TEST_CASE("linear cacti have no S1 cells") {
    for (const std::string name : {"candy", "twocandy", "bouquetcandy", "htree"}) {
        auto mc = morse(corpus(name), 4, SpanningMode::LinearCactus);
        for (const auto& c : classify_2cells(mc)) CHECK(c.cls != CellClass::S1);
    }
}

TEST_CASE("N2 census: five relators survive") {
    auto scr = build_scr(morse(corpus("N2"), 4));
    CHECK(scr.scr.relators.size() == 5);
    CHECK(scr.scr.generator_count() == 11);
}

TEST_CASE("trees have no targets") {
    for (const std::string name : {"Y", "htree", "P4"}) {
        auto scr = build_scr(morse(corpus(name), 4));
        CHECK(scr.targets.empty());
        CHECK(scr.count(CellClass::S0) == 0);
    }
}

TEST_CASE("target chains stay short") {
    for (const std::string name : {"candy", "N2", "bouquetcandy"}) {
        auto mc = morse(corpus(name), 4);
        auto scr = build_scr(mc);
        for (const auto& t : scr.targets) CHECK(t.matches_display);
        CHECK(scr.max_chain <= mc.n() - 1);
        CHECK(scr.targets.size() == static_cast<size_t>(scr.count(CellClass::S0)));
    }
}

TEST_CASE("substitution") {
    auto scr = build_scr(morse(corpus("candy"), 4));
    // target-free words pass through
    for (size_t g = 0; g < scr.target_of.size(); ++g) {
        auto w = GroupWord::generator(static_cast<int>(g));
        if (scr.target_of[g] < 0) CHECK(scr.s(w) == w);
        else {
            auto img = scr.s(w);
            for (int l : img.letters()) CHECK(scr.target_of[letter_index(l)] < 0);
        }
    }
}

TEST_CASE("S4 relators become commutators") {
    for (const std::string name : {"N2", "twocandy", "bouquetcandy"}) {
        auto scr = build_scr(morse(corpus(name), 4));
        for (size_t i = 0; i < scr.relators.size(); ++i) {
            if (scr.relators[i].cls != CellClass::S4) continue;
            GroupWord u, v;
            CHECK(split_cyclic_commutator(scr.scr.relators[i].word, &u, &v));
        }
    }
}

TEST_CASE("reduced presentations are commutator-related and match H1") {
    for (const std::string name : {"C4", "N3", "candy", "twocandy"}) {
        for (int n = 2; n <= 4; ++n) {
            auto scr = build_scr(morse(corpus(name), n));
            CHECK(is_commutator_related(scr.scr.relator_words(), scr.scr.generator_count()));
            auto h = homology_in_degree(subdivide_for(corpus(name), n).subdivided, n, 1);
            CHECK(abelianization(scr.scr).rank == h.betti);
        }
    }
}

TEST_CASE("general mode is refused") {
    CHECK_THROWS_AS(build_scr(morse(complete_graph(4), 3, SpanningMode::General)), OutOfScope);
}

TEST_CASE("RAAG word problem") {
    RaagGroup G(3);
    G.add_edge(0, 1);
    auto a = GroupWord::generator(0), b = GroupWord::generator(1), c = GroupWord::generator(2);
    CHECK(G.is_trivial(GroupWord::commutator(a, b)));
    CHECK_FALSE(G.is_trivial(GroupWord::commutator(a, c)));
    CHECK(G.is_trivial(a * c * b * c.inverse() * b.inverse() * c * a.inverse() * c.inverse()) == false);
    CHECK(G.is_trivial(a * b * c * b.inverse() * c.inverse() * a.inverse() * c * b * c.inverse() * b.inverse()) == false);
    CHECK(G.reduce(a * b * a.inverse()) == b);
}

TEST_CASE("RAAG construction") {
    SUBCASE("star bouquet: no candies, relators verbatim") {
        auto mc = morse(corpus("bouquet"), 4, SpanningMode::LinearCactus);
        auto scr = build_scr(mc);
        auto rr = build_raag(mc, scr);
        CHECK(rr.candies.empty());
        CHECK(rr.group.relators.size() == scr.scr.relators.size());
        for (size_t i = 0; i < rr.group.relators.size(); ++i)
            CHECK(equal_up_to_cyclic_and_inverse(rr.group.relators[i].word, scr.scr.relators[i].word));
        CHECK(rr.check.ok());
    }
    SUBCASE("single candy: one H4 letter") {
        auto mc = morse(corpus("candy"), 4, SpanningMode::LinearCactus);
        auto rr = build_raag(mc, build_scr(mc));
        CHECK(rr.candies.size() == 1);
        CHECK(std::count(rr.h_class.begin(), rr.h_class.end(), 4) == 1);
        CHECK(rr.check.ok());
    }
    SUBCASE("trees and longer chains") {
        for (const std::string name : {"Y", "htree", "twocandy", "bouquetcandy"}) {
            auto mc = morse(corpus(name), 4, SpanningMode::LinearCactus);
            auto rr = build_raag(mc, build_scr(mc));
            CHECK(rr.check.ok());
            CHECK(static_cast<int>(rr.group.generator_count()) ==
                  homology_in_degree(subdivide_for(corpus(name), 4).subdivided, 4, 1).betti);
        }
    }
}

TEST_CASE("RAAG needs four strands") {
    auto mc = morse(corpus("candy"), 3, SpanningMode::LinearCactus);
    CHECK_THROWS_AS(build_raag(mc, build_scr(mc)), OutOfScope);
}
