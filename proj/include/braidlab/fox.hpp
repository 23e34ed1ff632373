#pragma once

#include <vector>

#include "braidlab/group_word.hpp"
#include "braidlab/intmat.hpp"

namespace braidlab {

inline constexpr int kMaxFoxDepth = 3;

// eps_{i1..ik}(w) = eps d_{i1} ... d_{ik} (w), k <= 3. Equals the coefficient
// of X_{i1}...X_{ik} in the Magnus expansion x_i -> 1 + X_i.
Integer eps(const std::vector<int>& key, const GroupWord& w);

// Sum over keys of w1[i1]...wk[ik] eps_{i1..ik}(w), one pass over the word.
Integer eps_weighted(const std::vector<std::vector<Integer>>& weights, const GroupWord& w);

bool is_commutator_related(const std::vector<GroupWord>& relators, int generators);

}  // namespace braidlab
