#include "braidlab/tietze.hpp"

#include <cstdlib>

#include "braidlab/error.hpp"

namespace braidlab {

std::string cell_class_name(CellClass c) { return "S" + std::to_string(static_cast<int>(c)); }

std::vector<ClassifiedCell> classify_2cells(const MorseComplex& mc) {
    std::vector<ClassifiedCell> out;
    for (const auto& c : mc.critical(2)) {
        ClassifiedCell cc;
        cc.cell = c;
        cc.name = mc.name_of(c);
        cc.info = mc.case_of(c);
        switch (cc.info.tag) {
            case 1: cc.cls = CellClass::S1; break;
            case 2: cc.cls = CellClass::S2; break;
            case 3: cc.cls = CellClass::S3; break;
            case 4: cc.cls = vec::total(cc.name.first.counts) == 0 ? CellClass::S0 : CellClass::S4; break;
            default: throw InvariantViolation("2-cell " + mc.format(cc.name) + " has no case");
        }
        out.push_back(std::move(cc));
    }
    return out;
}

bool split_conjugate_letter(const GroupWord& q, GroupWord* w, int* letter) {
    const auto& l = q.letters();
    if (l.size() % 2 == 0) return false;
    const size_t m = l.size() / 2;
    for (size_t i = 0; i < m; ++i)
        if (l[i] != -l[l.size() - 1 - i]) return false;
    *w = GroupWord(std::vector<int>(l.begin(), l.begin() + m));
    *letter = l[m];
    return true;
}

bool split_cyclic_commutator(const GroupWord& w, GroupWord* u, GroupWord* v) {
    auto r = w.cyclically_reduced().letters();
    for (size_t i = 0; i < r.size(); ++i) {
        std::vector<int> rot(r.begin() + i, r.end());
        rot.insert(rot.end(), r.begin(), r.begin() + i);
        if (split_commutator(GroupWord(rot), u, v)) return true;
    }
    return false;
}

GroupWord ScrResult::s(const GroupWord& w) const { return w.substitute(s_images); }

GroupWord ScrResult::to_scr(const GroupWord& w) const {
    std::vector<int> out;
    GroupWord sw = s(w);
    for (int x : sw.letters()) {
        int j = scr_index[letter_index(x)];
        if (j < 0) throw InvariantViolation("target survived the substitution");
        out.push_back(letter_sign(x) * (j + 1));
    }
    return GroupWord(out);
}

int ScrResult::count(CellClass c) const {
    int k = 0;
    for (const auto& cc : cells) k += cc.cls == c;
    return k;
}

namespace {

// Solve the literal relator of an S0 cell for its target.
GroupWord solve_for(const GroupWord& w, int gen, const std::string& what) {
    const auto& l = w.letters();
    int pos = -1;
    for (size_t i = 0; i < l.size(); ++i)
        if (letter_index(l[i]) == gen) {
            if (pos >= 0) throw InvariantViolation("target occurs twice in the relator of " + what);
            pos = static_cast<int>(i);
        }
    if (pos < 0) throw InvariantViolation("target missing from the relator of " + what);
    GroupWord u(std::vector<int>(l.begin(), l.begin() + pos));
    GroupWord v(std::vector<int>(l.begin() + pos + 1, l.end()));
    GroupWord t = u.inverse() * v.inverse();
    return letter_sign(l[pos]) > 0 ? t : t.inverse();
}

GroupWord display_replacement(const MorseComplex& mc, const ClassifiedCell& cc) {
    const NameBlock& A = cc.name.first;
    const NameBlock& B = *cc.name.second;
    const int k = std::abs(A.branch);
    if (k == 0) return {};
    auto b = vec::add_delta(B.counts, 1, 1);
    const int nb = vec::total(b);
    const int l = std::abs(B.branch);
    GroupWord a = mc.letter({A.vertex, A.branch, vec::delta(mc.branches().mu(A.vertex), k, nb)});
    GroupWord bl = mc.letter({B.vertex, B.branch, B.counts});
    // b + d_l - d1 and b - d1 are B.counts + d_l and B.counts
    GroupWord w1 = mc.bold_A(B.vertex, vec::add_delta(B.counts, l, 1), 1, 1);
    GroupWord w2 = mc.bold_A(B.vertex, B.counts, 1, 1);
    return w1 * a * bl * a.inverse() * w2.inverse();
}

}  // namespace

ScrResult build_scr(const MorseComplex& mc) {
    if (mc.spanning().mode == SpanningMode::General)
        throw OutOfScope("commutator-relator presentations need a cactus spanning tree");
    ScrResult r;
    r.raw = mc.raw_presentation();
    r.cells = classify_2cells(mc);
    const int ng = r.raw.generator_count();
    r.target_of.assign(ng, -1);

    for (size_t i = 0; i < r.cells.size(); ++i) {
        const auto& cc = r.cells[i];
        if (cc.cls != CellClass::S0) continue;
        const NameBlock& B = *cc.name.second;
        NameBlock tb{B.vertex, B.branch, vec::add_delta(B.counts, 1, 1)};
        CubeCell tc = mc.cell_of(tb);
        int gen = mc.generator_index(tc);
        const std::string what = mc.format(cc.name);
        if (gen < 0) throw InvariantViolation("target " + mc.format(tb) + " of " + what + " is not critical");
        if (r.target_of[gen] >= 0) throw InvariantViolation("target " + mc.format(tb) + " is claimed twice");
        Target t;
        t.generator = gen;
        t.source = static_cast<int>(i);
        t.replacement = solve_for(r.raw.relators[i].word, gen, what);
        t.matches_display = t.replacement == display_replacement(mc, cc);
        r.target_of[gen] = static_cast<int>(r.targets.size());
        r.targets.push_back(std::move(t));
    }

    // s, resolving targets recursively
    r.s_images.assign(ng, {});
    std::vector<int> state(ng, 0), depth(ng, 0);
    auto resolve = [&](auto&& self, int g) -> void {
        if (state[g] == 2) return;
        if (state[g] == 1) throw InvariantViolation("target substitution has a cycle at " + r.raw.generators[g]);
        if (r.target_of[g] < 0) {
            r.s_images[g] = GroupWord::generator(g);
            state[g] = 2;
            return;
        }
        state[g] = 1;
        const GroupWord& rep = r.targets[r.target_of[g]].replacement;
        int d = 0;
        for (int x : rep.letters()) {
            int h = letter_index(x);
            self(self, h);
            d = std::max(d, depth[h]);
        }
        GroupWord img;
        for (int x : rep.letters()) img *= letter_sign(x) > 0 ? r.s_images[letter_index(x)] : r.s_images[letter_index(x)].inverse();
        r.s_images[g] = img;
        depth[g] = d + 1;
        r.max_chain = std::max(r.max_chain, depth[g]);
        state[g] = 2;
    };
    for (int g = 0; g < ng; ++g) resolve(resolve, g);

    r.scr_index.assign(ng, -1);
    for (int g = 0; g < ng; ++g)
        if (r.target_of[g] < 0) {
            r.scr_index[g] = static_cast<int>(r.raw_index.size());
            r.raw_index.push_back(g);
            r.scr.generators.push_back(r.raw.generators[g]);
        }

    for (size_t i = 0; i < r.cells.size(); ++i) {
        const auto& cc = r.cells[i];
        if (cc.cls == CellClass::S0) continue;
        ScrRelator rel;
        rel.source = static_cast<int>(i);
        rel.cls = cc.cls;
        rel.literal = r.to_scr(r.raw.relators[i].word);
        GroupWord x, v;
        bool ok = false;
        if (cc.cls == CellClass::S4) {
            const NameBlock& A = cc.name.first;
            const NameBlock& B = *cc.name.second;
            const int k = std::abs(A.branch);
            const int nb = B.total();
            const int mu = mc.branches().mu(A.vertex);
            const int gab = mc.branches().g(A.vertex, B.vertex);
            GroupWord a1 = mc.letter({A.vertex, A.branch, vec::delta(mu, k, nb + 1)});
            GroupWord w1 = mc.bold_A(A.vertex, A.counts, gab, nb + 2);
            GroupWord a2 = mc.letter({A.vertex, A.branch, vec::add_delta(A.counts, k, nb + 1)});
            GroupWord w2 = mc.bold_A(A.vertex, A.counts, gab, nb + 1);
            x = mc.letter(B);
            v = a1.inverse() * w1.inverse() * a2 * w2;
            ok = true;
            // holds only modulo the other relators; the literal word must at
            // least be commutator-related
            bool zero = true;
            for (auto e : rel.literal.exponent_sums(r.scr.generator_count())) zero = zero && e == 0;
            rel.literal_agrees = zero;
        } else {
            auto f = mc.rewritten_faces(cc.cell);
            GroupWord wq, ws;
            int lq = 0, ls = 0;
            if (f[0] == f[2] && split_conjugate_letter(f[1], &wq, &lq) && split_conjugate_letter(f[3], &ws, &ls) &&
                lq == ls) {
                x = GroupWord(std::vector<int>{lq});
                v = ws.inverse() * f[0] * wq;
                ok = true;
            }
        }
        if (ok) {
            rel.raw_left = x;
            rel.raw_right = v;
            rel.left = r.to_scr(x);
            rel.right = r.to_scr(v);
            if (cc.cls != CellClass::S4)
                rel.literal_agrees =
                    equal_up_to_cyclic_and_inverse(GroupWord::commutator(rel.left, rel.right), rel.literal);
        } else if (split_cyclic_commutator(rel.literal, &rel.left, &rel.right)) {
            rel.literal_agrees = true;
        } else {
            rel.left = rel.literal;
            rel.right = {};
        }
        const std::string origin = mc.format(cc.name);
        if (rel.right.empty() && !ok) r.scr.add_relator(rel.literal, origin);
        else r.scr.add_commutator(rel.left, rel.right, origin);
        r.relators.push_back(std::move(rel));
    }
    return r;
}

}  // namespace braidlab
