#include "braidlab/fox.hpp"

#include "braidlab/error.hpp"

namespace braidlab {

Integer eps_weighted(const std::vector<std::vector<Integer>>& weights, const GroupWord& w) {
    const size_t k = weights.size();
    if (k < 1 || k > static_cast<size_t>(kMaxFoxDepth)) throw PreconditionError("Fox depth must be 1..3");
    // c[m] = weighted Magnus coefficient of the length-m key prefix over the scanned prefix.
    std::vector<Integer> c(k + 1, 0);
    c[0] = 1;
    std::vector<Integer> next(k + 1);
    for (int x : w.letters()) {
        const int j = letter_index(x);
        auto weight = [&](size_t m) -> const Integer& {
            static const Integer zero = 0;
            const auto& wm = weights[m - 1];
            return j < static_cast<int>(wm.size()) ? wm[j] : zero;
        };
        if (x > 0) {
            for (size_t m = k; m >= 1; --m) c[m] += c[m - 1] * weight(m);
            continue;
        }
        // x^-1 -> 1 - X + X^2 - X^3
        for (size_t m = 1; m <= k; ++m) {
            Integer acc = c[m];
            Integer prod = 1;
            for (size_t t = 1; t <= m; ++t) {
                prod *= weight(m - t + 1);
                if (prod == 0) break;
                Integer term = c[m - t] * prod;
                if (t % 2) acc -= term;
                else acc += term;
            }
            next[m] = acc;
        }
        for (size_t m = 1; m <= k; ++m) c[m] = next[m];
    }
    return c[k];
}

Integer eps(const std::vector<int>& key, const GroupWord& w) {
    std::vector<std::vector<Integer>> weights;
    for (int i : key) {
        if (i < 0) throw PreconditionError("negative generator index in key");
        std::vector<Integer> unit(static_cast<size_t>(i) + 1, 0);
        unit[i] = 1;
        weights.push_back(std::move(unit));
    }
    return eps_weighted(weights, w);
}

bool is_commutator_related(const std::vector<GroupWord>& relators, int generators) {
    for (const auto& r : relators) {
        for (auto s : r.exponent_sums(generators))
            if (s != 0) return false;
    }
    return true;
}

}  // namespace braidlab
