#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidlab/group_word.hpp"
#include "braidlab/tietze.hpp"

namespace braidlab {

// Right-angled Artin group on `generators` letters; commute[i][j] marks an edge.
class RaagGroup {
public:
    explicit RaagGroup(int generators = 0);
    void add_edge(int i, int j);
    bool commute(int i, int j) const { return i == j || commute_[i][j]; }
    int generator_count() const { return static_cast<int>(commute_.size()); }
    std::vector<std::pair<int, int>> edges() const;

    // Reduced form; a word is trivial iff its reduced form is empty.
    GroupWord reduce(const GroupWord& w) const;
    bool is_trivial(const GroupWord& w) const { return reduce(w).empty(); }

private:
    std::vector<std::vector<char>> commute_;
};

struct Candy {
    int small = -1;        // A, the smaller essential vertex
    int large = -1;        // C
    int deleted_branch = 0;  // A_k with k = -deleted_branch
};

struct RaagIsoCheck {
    bool psi_phi_identity = false;
    bool phi_psi_identity = false;
    bool relators_vanish = false;   // psi(s r~(dc)) trivial in G
    bool abelianization_agrees = false;
    std::vector<std::string> failures;
    bool ok() const { return psi_phi_identity && phi_psi_identity && relators_vanish && abelianization_agrees; }
};

struct RaagResult {
    std::vector<Candy> candies;
    std::vector<int> h_class;       // SCR generator -> 0 or 1..4
    std::vector<int> in_c;          // indices into the classified cells forming the set C
    Presentation group;             // G, generator i pairs with SCR generator i
    RaagGroup raag;
    std::vector<GroupWord> phi;     // G generator -> word over SCR generators
    std::vector<GroupWord> psi;     // SCR generator -> word over G generators
    RaagIsoCheck check;
};

// Needs n = 4 and a linear cactus spanning tree. Throws OutOfScope otherwise.
RaagResult build_raag(const MorseComplex& mc, const ScrResult& scr);

std::vector<Candy> find_candies(const MorseComplex& mc);

}  // namespace braidlab
