#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidlab/intmat.hpp"

namespace braidlab {

// Freely reduced word; letter +(i+1) is generator i, -(i+1) its inverse.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<int> letters);  // reduces
    static GroupWord generator(int index, int exponent = 1);

    const std::vector<int>& letters() const { return letters_; }
    size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    GroupWord inverse() const;
    GroupWord& operator*=(const GroupWord& o);
    friend GroupWord operator*(GroupWord a, const GroupWord& b) { return a *= b; }
    bool operator==(const GroupWord& o) const { return letters_ == o.letters_; }
    bool operator!=(const GroupWord& o) const { return letters_ != o.letters_; }

    std::vector<std::int64_t> exponent_sums(int generators) const;
    bool mentions(int index) const;
    int max_generator() const;  // -1 when empty

    // u v u^-1 v^-1
    static GroupWord commutator(const GroupWord& u, const GroupWord& v);

    GroupWord cyclically_reduced() const;

    // Replace each generator by a word.
    GroupWord substitute(const std::vector<GroupWord>& images) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::vector<int> letters_;
};

inline int letter_index(int letter) { return (letter > 0 ? letter : -letter) - 1; }
inline int letter_sign(int letter) { return letter > 0 ? 1 : -1; }

// Equality of normal closures' obvious witnesses: cyclic rotation and inversion.
bool equal_up_to_cyclic_and_inverse(const GroupWord& a, const GroupWord& b);

// Split a word as u v u^-1 v^-1 when it literally has that shape.
bool split_commutator(const GroupWord& w, GroupWord* u, GroupWord* v);

struct Relator {
    GroupWord word;
    bool is_commutator = false;  // built from an explicit pair
    GroupWord left;
    GroupWord right;
    std::string origin;
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Relator> relators;

    int generator_count() const { return static_cast<int>(generators.size()); }
    std::vector<GroupWord> relator_words() const;
    void add_relator(GroupWord w, std::string origin = {});
    void add_commutator(GroupWord u, GroupWord v, std::string origin = {});
};

// H_1 of the presented group: free rank and torsion.
struct Abelianization {
    std::int64_t rank = 0;
    std::vector<Integer> torsion;
    bool operator==(const Abelianization& o) const { return rank == o.rank && torsion == o.torsion; }
};
Abelianization abelianization(const Presentation& p);

// `gen <i> := <name>` then `rel <i> := g<i> g<j>^-1 ...`
std::string format_presentation(const Presentation& p);
std::string format_word_plain(const GroupWord& w);
GroupWord parse_word_plain(const std::string& text);
Presentation parse_presentation(const std::string& text);

}  // namespace braidlab
