#pragma once

#include <string>
#include <vector>

#include "braidlab/group_word.hpp"
#include "braidlab/morse.hpp"

namespace braidlab {

// S0 cells are eliminated together with their targets; S1..S4 keep a relator.
enum class CellClass { S0 = 0, S1 = 1, S2 = 2, S3 = 3, S4 = 4 };
std::string cell_class_name(CellClass c);

struct ClassifiedCell {
    CubeCell cell;
    CriticalCellName name;
    CaseInfo info;
    CellClass cls = CellClass::S1;
};

std::vector<ClassifiedCell> classify_2cells(const MorseComplex& mc);

struct Target {
    int generator = -1;        // raw generator index of B_l(b+d1)
    int source = -1;           // index into the classified cells
    GroupWord replacement;     // R(t) over raw generators
    bool matches_display = false;  // R(t) equals the bold-word display
};

struct ScrRelator {
    int source = -1;
    CellClass cls = CellClass::S1;
    GroupWord raw_left, raw_right;  // before s, over raw generators
    GroupWord left, right;     // over SCR generators
    GroupWord literal;         // s(r~(dc)) over SCR generators
    bool literal_agrees = false;
};

struct ScrResult {
    Presentation raw;
    std::vector<ClassifiedCell> cells;
    std::vector<Target> targets;
    std::vector<int> target_of;   // raw generator -> target index or -1
    std::vector<int> scr_index;   // raw generator -> SCR generator or -1
    std::vector<int> raw_index;   // SCR generator -> raw generator
    std::vector<GroupWord> s_images;  // raw generator -> word free of targets
    int max_chain = 0;
    Presentation scr;
    std::vector<ScrRelator> relators;  // aligned with scr.relators

    GroupWord s(const GroupWord& raw_word) const;
    GroupWord to_scr(const GroupWord& raw_word) const;  // s, then reindex
    int count(CellClass c) const;
};

// Needs a cactus spanning tree. Throws OutOfScope otherwise.
ScrResult build_scr(const MorseComplex& mc);

// Q = w x^e w^-1 for a single letter x^e.
bool split_conjugate_letter(const GroupWord& q, GroupWord* w, int* letter);

// Some cyclic rotation of w is literally u v u^-1 v^-1.
bool split_cyclic_commutator(const GroupWord& w, GroupWord* u, GroupWord* v);

}  // namespace braidlab
