#include "braidlab/raag.hpp"

#include <cstdlib>
#include <map>

#include "braidlab/error.hpp"

namespace braidlab {

RaagGroup::RaagGroup(int generators) : commute_(generators, std::vector<char>(generators, 0)) {}

void RaagGroup::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= generator_count() || j >= generator_count())
        throw PreconditionError("RAAG edge out of range");
    commute_[i][j] = commute_[j][i] = 1;
}

std::vector<std::pair<int, int>> RaagGroup::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < generator_count(); ++i)
        for (int j = i + 1; j < generator_count(); ++j)
            if (commute_[i][j]) out.emplace_back(i, j);
    return out;
}

GroupWord RaagGroup::reduce(const GroupWord& w) const {
    // Cancel x^e against an earlier x^-e when everything in between commutes
    // with x. The stack stays reduced, so the result is empty iff w = 1.
    std::vector<int> st;
    for (int x : w.letters()) {
        const int g = letter_index(x);
        bool cancelled = false;
        for (size_t i = st.size(); i-- > 0;) {
            if (st[i] == -x) {
                st.erase(st.begin() + static_cast<std::ptrdiff_t>(i));
                cancelled = true;
                break;
            }
            if (!commute(g, letter_index(st[i]))) break;
        }
        if (!cancelled) st.push_back(x);
    }
    return GroupWord(st);
}

std::vector<Candy> find_candies(const MorseComplex& mc) {
    const Graph& g = mc.graph();
    const BranchTable& bt = mc.branches();
    std::vector<Candy> out;
    for (int d : mc.spanning().deleted) {
        const int t = tau_of(g, d), i = iota_of(g, d);
        std::vector<int> ess;
        int cur = i;
        while (cur != t) {
            if (cur <= 0) throw InvariantViolation("deleted edge does not close a cycle above its terminal vertex");
            if (bt.essential(cur)) ess.push_back(cur);
            cur = bt.parent(cur);
        }
        if (!bt.essential(t) || ess.size() != 1) continue;
        out.push_back({t, ess.front(), -bt.g(t, i)});
    }
    return out;
}

namespace {

struct Builder {
    const MorseComplex& mc;
    const ScrResult& scr;
    RaagResult& r;
    std::vector<int> candy_of;      // SCR generator -> candy index
    std::map<int, int> y_of_large;  // candy large vertex -> SCR generator of its H4 cell
    std::vector<int> psi_state;

    int scr_gen(const NameBlock& b, const std::string& why) const {
        int raw = -1;
        try {
            raw = mc.generator_index(mc.cell_of(b));
        } catch (const PreconditionError&) {
        }
        if (raw < 0) throw InvariantViolation(why + ": " + mc.format(b) + " is not a critical 1-cell");
        int j = scr.scr_index[raw];
        if (j < 0) throw InvariantViolation(why + ": " + mc.format(b) + " is a target");
        return j;
    }

    GroupWord bold_c(const Candy& cd, int i) const {
        const int mu = mc.branches().mu(cd.large);
        return scr.to_scr(mc.bold_A(cd.large, vec::delta(mu, mu, i), 1, 1));
    }

    int x_i(const Candy& cd, int i) const {
        const int k = -cd.deleted_branch;
        return scr_gen({cd.small, cd.deleted_branch, vec::delta(mc.branches().mu(cd.small), k, i)}, "candy cell");
    }

    int total(int j) const { return mc.name_of(mc.critical(1)[scr.raw_index[j]]).first.total(); }

    GroupWord psi_word(const GroupWord& w) {
        GroupWord out;
        for (int x : w.letters()) {
            GroupWord img = psi_of(letter_index(x));
            out *= letter_sign(x) > 0 ? img : img.inverse();
        }
        return out;
    }

    GroupWord psi_of(int j) {
        if (psi_state[j] == 2) return r.psi[j];
        if (psi_state[j] == 1) throw InvariantViolation("psi is defined circularly");
        psi_state[j] = 1;
        const int cls = r.h_class[j];
        GroupWord bar = GroupWord::generator(j);
        GroupWord img = bar;
        if (cls != 0) {
            const Candy& cd = r.candies[candy_of[j]];
            auto gbar = [](int i) { return GroupWord::generator(i); };
            if (cls == 1) img = psi_word(bold_c(cd, 1)).inverse() * bar;
            else if (cls == 3) img = psi_word(bold_c(cd, 2)).inverse() * gbar(x_i(cd, 2)) * gbar(y_of_large.at(cd.large));
            else if (cls == 2 && total(j) == 2) img = psi_word(bold_c(cd, 2)).inverse() * bar;
            else if (cls == 2) img = psi_word(bold_c(cd, 2)).inverse() * gbar(x_i(cd, 2)) * bar;
            else img = gbar(x_i(cd, 3)) * bar.inverse() * gbar(x_i(cd, 2)).inverse();
        }
        r.psi[j] = img;
        psi_state[j] = 2;
        return img;
    }

    GroupWord phi_word(const GroupWord& w) const {
        GroupWord out;
        for (int x : w.letters()) out *= letter_sign(x) > 0 ? r.phi[letter_index(x)] : r.phi[letter_index(x)].inverse();
        return out;
    }
};

}  // namespace

RaagResult build_raag(const MorseComplex& mc, const ScrResult& scr) {
    if (mc.n() != 4) throw OutOfScope("the RAAG construction is implemented for four strands only");
    if (mc.spanning().mode != SpanningMode::LinearCactus)
        throw OutOfScope("the RAAG construction needs a linear cactus spanning tree");
    RaagResult r;
    Builder b{mc, scr, r, {}, {}, {}};
    const BranchTable& bt = mc.branches();
    const int ng = scr.scr.generator_count();
    r.candies = find_candies(mc);
    r.h_class.assign(ng, 0);
    b.candy_of.assign(ng, -1);

    for (size_t ci = 0; ci < r.candies.size(); ++ci) {
        const Candy& cd = r.candies[ci];
        const int mu = bt.mu(cd.large);
        int y = b.scr_gen({cd.large, mu, vec::add_delta(vec::delta(mu, mu, 2), 1, 1)}, "H4 cell");
        b.y_of_large[cd.large] = y;
        r.h_class[y] = 4;
        b.candy_of[y] = static_cast<int>(ci);
    }
    for (int j = 0; j < ng; ++j) {
        auto nm = mc.name_of(mc.critical(1)[scr.raw_index[j]]);
        for (size_t ci = 0; ci < r.candies.size(); ++ci) {
            const Candy& cd = r.candies[ci];
            if (nm.first.vertex != cd.small || nm.first.branch != cd.deleted_branch) continue;
            int last = nm.first.counts[-cd.deleted_branch - 1];
            if (last >= 1 && last <= 3) {
                if (r.h_class[j] != 0) throw InvariantViolation("a generator lies in two H classes");
                r.h_class[j] = last;
                b.candy_of[j] = static_cast<int>(ci);
            }
        }
    }

    for (int j = 0; j < ng; ++j)
        r.group.generators.push_back(r.h_class[j] ? "~" + scr.scr.generators[j] : scr.scr.generators[j]);
    r.raag = RaagGroup(ng);

    // phi: G -> SCR
    r.phi.resize(ng);
    for (int j = 0; j < ng; ++j) {
        GroupWord x = GroupWord::generator(j);
        const int cls = r.h_class[j];
        if (cls == 0) {
            r.phi[j] = x;
            continue;
        }
        const Candy& cd = r.candies[b.candy_of[j]];
        const GroupWord x2 = GroupWord::generator(b.x_i(cd, 2));
        if (cls == 1 || cls == 3) r.phi[j] = b.bold_c(cd, cls) * x;
        else if (cls == 2 && b.total(j) == 2) r.phi[j] = b.bold_c(cd, 2) * x;
        else if (cls == 2) r.phi[j] = x2.inverse() * x;
        else r.phi[j] = x2.inverse() * GroupWord::generator(b.x_i(cd, 3));
    }
    r.psi.resize(ng);
    b.psi_state.assign(ng, 0);
    for (int j = 0; j < ng; ++j) b.psi_of(j);

    // the set C and F
    std::vector<char> is_target(scr.raw.generator_count(), 0);
    for (const auto& t : scr.targets) is_target[t.generator] = 1;
    for (const auto& rel : scr.relators) {
        const size_t i = static_cast<size_t>(rel.source);
        const auto& cc = scr.cells[i];
        if (rel.raw_left.empty()) throw InvariantViolation("relator of " + mc.format(cc.name) + " has no commutator form");
        bool clean = true;
        for (const GroupWord* w : {&rel.raw_left, &rel.raw_right})
            for (int x : w->letters()) clean = clean && !is_target[letter_index(x)];
        if (!clean) continue;
        r.in_c.push_back(static_cast<int>(i));
        const NameBlock& A = cc.name.first;
        const NameBlock& B = *cc.name.second;
        const int k = std::abs(A.branch);
        const int muA = bt.mu(A.vertex);
        int left = b.scr_gen(B, "F");
        int right;
        if (cc.cls == CellClass::S4 && k > 0 && A.counts == vec::delta(muA, k, 1)) {
            auto it = b.y_of_large.find(B.vertex);
            if (it == b.y_of_large.end())
                throw InvariantViolation("S4 cell " + mc.format(cc.name) + " is not inside a candy");
            right = it->second;
        } else {
            right = b.scr_gen({A.vertex, A.branch, vec::add_delta(A.counts, muA, B.total() + 1)}, "F");
        }
        if (left == right) throw InvariantViolation("F(" + mc.format(cc.name) + ") is a trivial commutator");
        r.group.add_commutator(GroupWord::generator(left), GroupWord::generator(right), mc.format(cc.name));
        r.raag.add_edge(left, right);
    }

    // checks
    RaagIsoCheck& chk = r.check;
    chk.psi_phi_identity = chk.phi_psi_identity = true;
    for (int j = 0; j < ng; ++j) {
        if (b.psi_word(r.phi[j]) != GroupWord::generator(j)) {
            chk.psi_phi_identity = false;
            chk.failures.push_back("psi(phi(" + r.group.generators[j] + ")) is not the generator");
        }
        if (b.phi_word(r.psi[j]) != GroupWord::generator(j)) {
            chk.phi_psi_identity = false;
            chk.failures.push_back("phi(psi(" + scr.scr.generators[j] + ")) is not the generator");
        }
    }
    chk.relators_vanish = true;
    for (size_t i = 0; i < scr.cells.size(); ++i) {
        GroupWord w = b.psi_word(scr.to_scr(scr.raw.relators[i].word));
        if (!r.raag.is_trivial(w)) {
            chk.relators_vanish = false;
            chk.failures.push_back("psi of the relator of " + mc.format(scr.cells[i].name) + " is nontrivial in G");
        }
    }
    chk.abelianization_agrees = abelianization(r.group) == abelianization(scr.scr);
    if (!chk.abelianization_agrees) chk.failures.push_back("H1 of G differs from H1 of the SCR presentation");
    return r;
}

}  // namespace braidlab
