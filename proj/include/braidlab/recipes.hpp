#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidlab/cohomology.hpp"
#include "braidlab/graph.hpp"
#include "braidlab/tietze.hpp"
#include "braidlab/topology.hpp"

namespace braidlab {

struct CupCheck {
    std::string name;             // e.g. "(X,Y)"
    std::vector<int> left, right; // generator subsets
    std::vector<Integer> sums;    // per relator
    bool zero() const;
};

struct RecipeOutcome {
    Nucleus nucleus = Nucleus::N2;
    int embeddings_tried = 0;
    Graph embedded;                               // input with the base and rotation used
    std::map<std::string, std::string> letters;   // role -> SCR generator name
    std::vector<int> X, Y, Z;
    Presentation scr;
    std::vector<std::string> relator_cells;       // origin of each SCR relator
    std::vector<CupCheck> cup_checks;
    MasseyCertificate certificate;
    // SCR relator index and orientation of the reference r1, r2, ...; sign 0
    // when the relator only agrees modulo the others.
    std::vector<int> reference_relators;
    std::vector<int> reference_signs;

    bool cup_zero() const;
};

struct RecipeOptions {
    int n = 4;
    std::int64_t embedding_budget = 512;
};

// Try embeddings (base vertex, rotation system) until the recipe for
// `which` yields a certificate with rho outside the indeterminacy lattice.
// Returns nullopt when every embedding within budget fails.
std::optional<RecipeOutcome> run_recipe(const Graph& g, Nucleus which, const RecipeOptions& opts = {});

// Visit the input as given, then each leaf as base, then rotation systems,
// until `visit` returns true. Throws BudgetExceeded past `budget` visits.
int for_each_embedding(const Graph& g, std::int64_t budget, const std::function<bool(const Graph&)>& visit);

// (-1, 0, +2, 0) on the reference (r1..r4) modulo the projected lattice.
bool n2_rho_pattern(const RecipeOutcome& out);

}  // namespace braidlab

namespace braidlab {

// Relabeling search between two commutator presentations. Each relator
// is reduced to the bivector u^v of its abelianized commutator halves;
// a match is an injection of reference generators onto the literal
// support of `ours` plus generator signs carrying one bivector multiset
// onto the other. When no direct relabeling exists, both sides have each
// two-letter commutator half g^-1 h replaced by a new generator (a free
// basis change) and the search is retried on the result.
struct ShapeMatch {
    bool matched = false;
    std::int64_t candidates = 0;   // complete bijections examined
    std::vector<int> image;        // reference generator -> ours
    std::vector<int> sign;
    bool absorbed = false;         // matched only after absorb_pairs on both sides
    std::string reason;
};

Presentation absorb_pairs(const Presentation& p);
ShapeMatch match_shape(const Presentation& ours, const Presentation& reference, std::int64_t budget = 10000);

}  // namespace braidlab
