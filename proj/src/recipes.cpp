#include "braidlab/recipes.hpp"

#include <algorithm>
#include <cstdlib>

#include "braidlab/error.hpp"
#include "braidlab/spanning.hpp"

namespace braidlab {

bool CupCheck::zero() const {
    return std::all_of(sums.begin(), sums.end(), [](const Integer& v) { return v == 0; });
}

bool RecipeOutcome::cup_zero() const {
    return std::all_of(cup_checks.begin(), cup_checks.end(), [](const CupCheck& c) { return c.zero(); });
}

int for_each_embedding(const Graph& g, std::int64_t budget, const std::function<bool(const Graph&)>& visit) {
    int tried = 0;
    auto attempt = [&](const Graph& h) {
        if (tried >= budget) throw BudgetExceeded("embedding search exceeded " + std::to_string(budget) + " attempts");
        ++tried;
        return visit(h);
    };
    if (attempt(g)) return tried;

    std::vector<int> bases;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) bases.push_back(v);
    for (int b : bases) {
        Graph h = g;
        h.clear_rotation();
        h.set_base(b);
        if (attempt(h)) return tried;
    }

    // cyclic orders at branch vertices: permutations with the first end fixed
    std::vector<int> branch;
    std::vector<std::vector<std::vector<int>>> orders;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 3) continue;
        std::vector<int> inc(g.incident(v).begin(), g.incident(v).end());
        std::sort(inc.begin() + 1, inc.end());
        std::vector<std::vector<int>> opts;
        do {
            opts.push_back(inc);
        } while (std::next_permutation(inc.begin() + 1, inc.end()));
        branch.push_back(v);
        orders.push_back(std::move(opts));
    }
    if (branch.empty()) return tried;
    std::vector<size_t> digit(branch.size(), 0);
    while (true) {
        Graph::Rotation rot(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) rot[v].assign(g.incident(v).begin(), g.incident(v).end());
        for (size_t i = 0; i < branch.size(); ++i) rot[branch[i]] = orders[i][digit[i]];
        for (int b : bases) {
            Graph h = g;
            h.set_rotation(rot);
            h.set_base(b);
            if (attempt(h)) return tried;
        }
        size_t i = 0;
        while (i < digit.size() && ++digit[i] == orders[i].size()) digit[i++] = 0;
        if (i == digit.size()) break;
    }
    return tried;
}

namespace {

struct CycleRec {
    int tau = 0;
    int branch = 0;            // name branch of the deleted edge (negative)
    std::vector<int> verts;    // tree path from iota up to tau
};

std::vector<CycleRec> cycles_of(const MorseComplex& mc) {
    const Graph& g = mc.graph();
    const BranchTable& bt = mc.branches();
    std::vector<CycleRec> out;
    for (int d : mc.spanning().deleted) {
        CycleRec c;
        c.tau = tau_of(g, d);
        int cur = iota_of(g, d);
        if (c.tau == 0) continue;
        c.branch = -bt.g(c.tau, cur);
        while (cur != c.tau) {
            if (cur <= 0) throw InvariantViolation("cycle does not close above its terminal vertex");
            c.verts.push_back(cur);
            cur = bt.parent(cur);
        }
        c.verts.push_back(c.tau);
        std::sort(c.verts.begin(), c.verts.end());
        out.push_back(std::move(c));
    }
    return out;
}

bool has(const std::vector<int>& sorted, int v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

struct Context {
    const MorseComplex& mc;
    const ScrResult& scr;

    int gen(const NameBlock& b) const {
        int raw = -1;
        try {
            raw = mc.generator_index(mc.cell_of(b));
        } catch (const PreconditionError&) {
            return -1;
        }
        return raw < 0 ? -1 : scr.scr_index[raw];
    }

    // SCR generators A_k(a) with a_|k| >= lo
    std::vector<int> family(int A, int k, int lo) const {
        std::vector<int> out;
        for (int j = 0; j < scr.scr.generator_count(); ++j) {
            auto nm = mc.name_of(mc.critical(1)[scr.raw_index[j]]);
            if (nm.first.vertex == A && nm.first.branch == k && nm.first.counts[std::abs(k) - 1] >= lo)
                out.push_back(j);
        }
        return out;
    }

    int relator_of(const NameBlock& a, const NameBlock& b) const {
        CriticalCellName nm{a, b, mc.n() - 2 - a.total() - b.total()};
        CubeCell c;
        try {
            c = mc.cell_of(nm);
        } catch (const PreconditionError&) {
            return -1;
        }
        for (size_t i = 0; i < scr.relators.size(); ++i)
            if (scr.cells[scr.relators[i].source].cell == c) return static_cast<int>(i);
        return -1;
    }

    int orientation(int rel, const GroupWord& ref) const {
        if (rel < 0) return 0;
        const GroupWord& w = scr.scr.relators[rel].word;
        auto rotations_match = [](const GroupWord& a, const GroupWord& b) {
            auto x = a.cyclically_reduced().letters(), y = b.cyclically_reduced().letters();
            if (x.size() != y.size()) return false;
            for (size_t i = 0; i <= x.size(); ++i) {
                if (x == y) return true;
                if (!x.empty()) std::rotate(x.begin(), x.begin() + 1, x.end());
            }
            return false;
        };
        if (rotations_match(w, ref)) return 1;
        if (rotations_match(w, ref.inverse())) return -1;
        return 0;
    }
};

GroupWord G(int j, int e = 1) { return GroupWord::generator(j, e); }

Class1 indicator(int g, const std::vector<int>& s) {
    Class1 c(g, 0);
    for (int x : s) c.at(x) += 1;
    return c;
}

// Fill cup checks and the certificate; true when rho escapes the lattice.
bool evaluate(RecipeOutcome& out, const ScrResult& scr, std::vector<std::pair<std::string, std::pair<std::vector<int>, std::vector<int>>>> extra) {
    const Presentation& p = scr.scr;
    out.cup_checks.clear();
    extra.insert(extra.begin(), {{"(X,Y)", {out.X, out.Y}}, {"(Y,Z)", {out.Y, out.Z}}});
    for (auto& [name, pr] : extra) {
        CupCheck c{name, pr.first, pr.second, cup_zero_sums(p, pr.first, pr.second)};
        out.cup_checks.push_back(std::move(c));
    }
    if (!out.cup_zero()) return false;
    const int g = p.generator_count();
    out.certificate = massey_nontrivial(p, indicator(g, out.X), indicator(g, out.Y), indicator(g, out.Z));
    return out.certificate.nontrivial();
}

void finish(RecipeOutcome& out, const ScrResult& scr) {
    out.scr = scr.scr;
    out.relator_cells.clear();
    for (const auto& r : scr.scr.relators) out.relator_cells.push_back(r.origin);
}

bool try_n2(const Context& cx, RecipeOutcome& out) {
    const BranchTable& bt = cx.mc.branches();
    auto cyc = cycles_of(cx.mc);
    for (const auto& O : cyc)
        for (const auto& O2 : cyc) {
            if (&O == &O2) continue;
            const int A = O.tau, B = O2.tau;
            if (!(A < B) || !bt.essential(A) || !bt.essential(B) || !has(O.verts, B)) continue;
            std::vector<int> common;
            std::set_intersection(O.verts.begin(), O.verts.end(), O2.verts.begin(), O2.verts.end(), std::back_inserter(common));
            if (common != std::vector<int>{B}) continue;
            bool lowest = true;
            for (const auto& c : cyc)
                if (has(c.verts, A) && c.tau != A) lowest = false;
            if (!lowest) continue;
            const int k = std::abs(O.branch), l = std::abs(O2.branch);
            const int muA = bt.mu(A), muB = bt.mu(B);
            NameBlock xb[4], yb{B, O2.branch, std::vector<int>(muB, 0)}, zb{B, l, vec::delta(muB, 1, 1)};
            int x[4];
            bool ok = true;
            for (int i = 1; i <= 3; ++i) {
                xb[i] = {A, O.branch, vec::delta(muA, k, i)};
                x[i] = cx.gen(xb[i]);
                ok = ok && x[i] >= 0;
            }
            const int y = cx.gen(yb), z = cx.gen(zb);
            if (!ok || y < 0 || z < 0) continue;
            out.letters = {{"x1", cx.scr.scr.generators[x[1]]}, {"x2", cx.scr.scr.generators[x[2]]},
                           {"x3", cx.scr.scr.generators[x[3]]}, {"y", cx.scr.scr.generators[y]},
                           {"z", cx.scr.scr.generators[z]}};
            out.X = {y};
            out.Y = cx.family(A, O.branch, 1);
            out.Z = {x[2]};
            std::vector<int> rel = {cx.relator_of(xb[1], yb), cx.relator_of(xb[2], yb),
                                    cx.relator_of(xb[1], {B, O2.branch, vec::delta(muB, 1, 1)}), cx.relator_of(xb[1], zb)};
            std::vector<GroupWord> ref = {
                GroupWord::commutator(G(y), G(x[1], -1) * G(x[2])),
                GroupWord::commutator(G(y), G(x[1], -1) * G(x[3])),
                GroupWord::commutator(G(z) * G(x[1]) * G(y) * G(x[1], -1), G(x[2], -1) * G(x[3])),
                GroupWord::commutator(G(z), G(x[2], -1) * G(x[3]))};
            out.reference_relators = rel;
            out.reference_signs.clear();
            for (size_t i = 0; i < rel.size(); ++i) out.reference_signs.push_back(cx.orientation(rel[i], ref[i]));
            if (evaluate(out, cx.scr, {})) return true;
        }
    return false;
}

bool try_n3(const Context& cx, RecipeOutcome& out) {
    const BranchTable& bt = cx.mc.branches();
    auto cyc = cycles_of(cx.mc);
    for (size_t oi = 0; oi < cyc.size(); ++oi) {
        const auto& O = cyc[oi];
        std::vector<int> ess;
        for (int v : O.verts)
            if (bt.essential(v)) ess.push_back(v);
        const int A = O.tau;
        if (A == 0 || ess.empty() || ess.front() != A) continue;
        for (size_t bi = 1; bi < ess.size(); ++bi)
            for (size_t ci = bi + 1; ci < ess.size(); ++ci) {
                const int B = ess[bi], C = ess[ci];
                bool alone = true;
                for (size_t oj = 0; oj < cyc.size(); ++oj)
                    if (oj != oi && (has(cyc[oj].verts, A) || has(cyc[oj].verts, B) || has(cyc[oj].verts, C)))
                        alone = false;
                if (!alone) continue;
                const int k = std::abs(O.branch), muA = bt.mu(A), muB = bt.mu(B), muC = bt.mu(C);
                NameBlock xb[3], yb{B, muB, vec::delta(muB, 1, 1)}, zb{C, muC, vec::delta(muC, 1, 1)};
                int x[3];
                bool ok = true;
                for (int i = 0; i < 3; ++i) {
                    xb[i] = {A, O.branch, vec::delta(muA, k, i + 1)};
                    x[i] = cx.gen(xb[i]);
                    ok = ok && x[i] >= 0;
                }
                const int y = cx.gen(yb), z = cx.gen(zb);
                if (!ok || y < 0 || z < 0) continue;
                out.letters = {{"x0", cx.scr.scr.generators[x[0]]}, {"x1", cx.scr.scr.generators[x[1]]},
                               {"x2", cx.scr.scr.generators[x[2]]}, {"y", cx.scr.scr.generators[y]},
                               {"z", cx.scr.scr.generators[z]}};
                out.X = out.Z = {x[1], y, z};
                std::sort(out.X.begin(), out.X.end());
                out.Z = out.X;
                out.Y = cx.family(A, O.branch, 2);
                std::vector<int> rel = {cx.relator_of(xb[0], yb), cx.relator_of(xb[0], zb), cx.relator_of(yb, zb)};
                std::vector<GroupWord> ref = {
                    GroupWord::commutator(G(y), G(x[1], -1) * G(x[2])),
                    GroupWord::commutator(G(z), G(x[1], -1) * G(x[2])),
                    GroupWord::commutator(G(z), G(x[2]) * G(x[1]) * G(y) * G(x[1], -1) * G(x[2], -1))};
                out.reference_relators = rel;
                out.reference_signs.clear();
                for (size_t i = 0; i < rel.size(); ++i) out.reference_signs.push_back(cx.orientation(rel[i], ref[i]));
                if (evaluate(out, cx.scr, {})) return true;
            }
    }
    return false;
}

bool try_n4(const Context& cx, RecipeOutcome& out) {
    const BranchTable& bt = cx.mc.branches();
    std::vector<int> ess;
    for (int v = 1; v < bt.size(); ++v)
        if (bt.essential(v)) ess.push_back(v);
    for (int A : ess)
        for (int B : ess) {
            if (!(A < B) || bt.wedge(A, B) != A || bt.mu(A) < 2 || bt.g(A, B) != bt.mu(A)) continue;
            for (int C : ess)
                for (int D : ess) {
                    if (!(B < C && C < D)) continue;
                    if (bt.wedge(B, C) != B || bt.wedge(B, D) != B || bt.wedge(C, D) != B) continue;
                    const int m = bt.g(A, B), nn = bt.g(B, C), l = bt.g(B, D);
                    const int muA = bt.mu(A), muB = bt.mu(B), muC = bt.mu(C), muD = bt.mu(D);
                    NameBlock xpb{A, m, vec::delta(muA, 1, 1)};
                    NameBlock xb{A, m, vec::add_delta(vec::delta(muA, 1, 1), m, 2)};
                    NameBlock yb{B, l, vec::add_delta(vec::delta(muB, nn, 2), l, 1)};
                    NameBlock zb{C, muC, vec::delta(muC, 1, 1)}, wb{D, muD, vec::delta(muD, 1, 1)};
                    const int xp = cx.gen(xpb), x = cx.gen(xb), y = cx.gen(yb), z = cx.gen(zb), w = cx.gen(wb);
                    if (xp < 0 || x < 0 || y < 0 || z < 0 || w < 0) continue;
                    const auto& nm = cx.scr.scr.generators;
                    out.letters = {{"x'", nm[xp]}, {"x", nm[x]}, {"y", nm[y]}, {"z", nm[z]}, {"w", nm[w]}};
                    out.X = {x, z, w};
                    std::sort(out.X.begin(), out.X.end());
                    out.Z = out.X;
                    out.Y = {y};
                    out.reference_relators = {cx.relator_of(xpb, zb), cx.relator_of(xpb, wb), cx.relator_of(zb, wb)};
                    out.reference_signs.assign(3, 0);
                    if (evaluate(out, cx.scr, {{"({x},{y})", {{x}, {y}}}, {"({z},{y})", {{z}, {y}}}, {"({w},{y})", {{w}, {y}}}}))
                        return true;
                }
        }
    return false;
}

}  // namespace

std::optional<RecipeOutcome> run_recipe(const Graph& g, Nucleus which, const RecipeOptions& opts) {
    if (which == Nucleus::N1) throw PreconditionError("N1 has no Massey recipe");
    if (!is_cactus(g)) throw OutOfScope("Massey recipes are stated for cactus graphs");
    RecipeOutcome out;
    out.nucleus = which;
    bool found = false;
    int tried = for_each_embedding(g, opts.embedding_budget, [&](const Graph& h) {
        auto pr = prepare(h, opts.n, SpanningMode::Cactus);
        MorseComplex mc(pr.spanning, opts.n);
        ScrResult scr = build_scr(mc);
        Context cx{mc, scr};
        bool ok = which == Nucleus::N2 ? try_n2(cx, out) : which == Nucleus::N3 ? try_n3(cx, out) : try_n4(cx, out);
        if (ok) {
            out.embedded = h;
            finish(out, scr);
            found = true;
        }
        return ok;
    });
    if (!found) return std::nullopt;
    out.embeddings_tried = tried;
    return out;
}

bool n2_rho_pattern(const RecipeOutcome& out) {
    if (out.nucleus != Nucleus::N2 || out.reference_relators.size() != 4) return false;
    for (size_t i = 0; i < 4; ++i)
        if (out.reference_relators[i] < 0 || out.reference_signs[i] == 0) return false;
    const int want[4] = {-1, 0, 2, 0};
    auto project = [&](const Class2& v) {
        Class2 p;
        for (int r : out.reference_relators) p.push_back(v.at(r));
        return p;
    };
    Class2 diff = project(out.certificate.rho);
    for (size_t i = 0; i < 4; ++i) diff[i] -= want[i] * out.reference_signs[i];
    std::vector<Class2> gens;
    for (const auto& b : out.certificate.lattice_basis) gens.push_back(project(b));
    return make_lattice(gens, 4).contains(diff);
}

}  // namespace braidlab
