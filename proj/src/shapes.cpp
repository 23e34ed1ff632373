#include <algorithm>
#include <cstdlib>
#include <set>

#include "braidlab/error.hpp"
#include "braidlab/recipes.hpp"

namespace braidlab {

ShapeMatch match_direct(const Presentation& ours, const Presentation& reference, std::int64_t budget);

namespace {

using Bivector = std::map<std::pair<int, int>, long>;

Bivector bivector_of(const GroupWord& w) {
    GroupWord u, v;
    if (!split_cyclic_commutator(w, &u, &v)) throw PreconditionError("relator is not a commutator: " + format_word_plain(w));
    std::map<int, long> a, b;
    for (int l : u.letters()) a[std::abs(l) - 1] += l > 0 ? 1 : -1;
    for (int l : v.letters()) b[std::abs(l) - 1] += l > 0 ? 1 : -1;
    Bivector out;
    for (auto [i, x] : a)
        for (auto [j, y] : b) {
            if (i == j || x == 0 || y == 0) continue;
            if (i < j) out[{i, j}] += x * y;
            else out[{j, i}] -= x * y;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Overall relator sign is irrelevant; fix the first coefficient positive.
Bivector normalized(Bivector b) {
    if (!b.empty() && b.begin()->second < 0)
        for (auto& [k, v] : b) v = -v;
    return b;
}

Bivector relabel(const Bivector& b, const std::vector<int>& image, const std::vector<int>& sign) {
    Bivector out;
    for (auto [k, v] : b) {
        int i = image[k.first], j = image[k.second];
        long c = v * sign[k.first] * sign[k.second];
        if (i < j) out[{i, j}] += c;
        else out[{j, i}] -= c;
    }
    return normalized(out);
}

std::vector<int> abelian_degrees(const std::vector<Bivector>& bs, int gens) {
    std::vector<int> deg(gens, 0);
    for (const auto& b : bs) {
        std::set<int> seen;
        for (auto& [k, v] : b) seen.insert({k.first, k.second});
        for (int g : seen) ++deg[g];
    }
    return deg;
}

// One pass over the relators: a commutator half that is a two-letter word
// l1 l2 in distinct generators becomes a fresh generator t, eliminating
// gen(l2) through l2 = l1^-1 t. A Tietze change of free basis.
Presentation absorb_pairs_impl(Presentation p) {
    for (size_t i = 0; i < p.relators.size(); ++i) {
        GroupWord u, v;
        if (!split_cyclic_commutator(p.relators[i].word, &u, &v)) continue;
        for (const GroupWord* half : {&v, &u}) {
            const auto& ls = half->letters();
            if (ls.size() != 2 || std::abs(ls[0]) == std::abs(ls[1])) continue;
            const int t = p.generator_count() + 1;
            p.generators.push_back("(" + format_word_plain(*half) + ")");
            const int l1 = ls[0], l2 = ls[1];
            // l2 = l1^-1 t, so gen(l2)^e with e = sign(l2) is (l1^-1 t)^e
            GroupWord repl = GroupWord::generator(std::abs(l1) - 1, l1 > 0 ? -1 : 1) * GroupWord::generator(t - 1);
            if (l2 < 0) repl = repl.inverse();
            for (auto& r : p.relators) {
                GroupWord w;
                for (int l : r.word.letters()) {
                    if (std::abs(l) != std::abs(l2)) w = w * GroupWord::generator(std::abs(l) - 1, l > 0 ? 1 : -1);
                    else w = w * (l > 0 ? repl : repl.inverse());
                }
                r.word = w.cyclically_reduced();
            }
            break;
        }
    }
    return p;
}

}  // namespace

Presentation absorb_pairs(const Presentation& p) { return absorb_pairs_impl(p); }

ShapeMatch match_shape(const Presentation& ours, const Presentation& reference, std::int64_t budget) {
    ShapeMatch m = match_direct(ours, reference, budget);
    if (m.matched) return m;
    ShapeMatch n = match_direct(absorb_pairs_impl(ours), absorb_pairs_impl(reference), budget - m.candidates);
    n.candidates += m.candidates;
    n.absorbed = true;
    if (!n.matched) n.reason = m.reason + "; after absorbing two-letter halves: " + n.reason;
    return n;
}

ShapeMatch match_direct(const Presentation& ours, const Presentation& reference, std::int64_t budget) {
    ShapeMatch m;
    if (ours.relators.size() != reference.relators.size()) {
        m.reason = "relator counts differ";
        return m;
    }
    auto support_of = [](const Presentation& p) {
        std::set<int> s;
        for (const auto& r : p.relators)
            for (int l : r.word.letters()) s.insert(std::abs(l) - 1);
        return std::vector<int>(s.begin(), s.end());
    };
    const std::vector<int> support = support_of(ours), ref_support = support_of(reference);
    const int k = static_cast<int>(ref_support.size());
    if (static_cast<int>(support.size()) != k) {
        m.reason = "literal support has " + std::to_string(support.size()) + " generators, reference has " + std::to_string(k);
        return m;
    }

    std::vector<Bivector> mine, theirs;
    for (const auto& r : ours.relators) mine.push_back(normalized(bivector_of(r.word)));
    for (const auto& r : reference.relators) theirs.push_back(bivector_of(r.word));
    std::multiset<Bivector> target(mine.begin(), mine.end());
    auto deg_ours = abelian_degrees(mine, ours.generator_count());
    auto deg_ref = abelian_degrees(theirs, reference.generator_count());

    std::vector<int> image(reference.generator_count(), -1), sign(reference.generator_count(), 1);
    std::vector<bool> used(ours.generator_count(), false);
    auto check = [&]() {
        for (int mask = 0; mask < (1 << k); ++mask) {
            for (int i = 0; i < k; ++i) sign[ref_support[i]] = (mask >> i) & 1 ? -1 : 1;
            std::multiset<Bivector> got;
            for (const auto& b : theirs) got.insert(relabel(b, image, sign));
            if (got == target) return true;
        }
        return false;
    };
    std::function<bool(int)> assign = [&](int i) {
        if (i == k) {
            if (++m.candidates > budget) throw BudgetExceeded("shape search exceeded " + std::to_string(budget) + " bijections");
            return check();
        }
        const int r = ref_support[i];
        for (int g : support) {
            if (used[g] || deg_ours[g] != deg_ref[r]) continue;
            used[g] = true;
            image[r] = g;
            if (assign(i + 1)) return true;
            used[g] = false;
        }
        return false;
    };
    m.matched = assign(0);
    if (m.matched) m.image = image, m.sign = sign;
    else m.reason = "no relabeling carries the reference bivectors onto ours";
    return m;
}

}  // namespace braidlab
