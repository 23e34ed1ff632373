#include "braidlab/morse.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "braidlab/error.hpp"

namespace braidlab {

int NameBlock::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

namespace vec {

int total(const std::vector<int>& a) { return std::accumulate(a.begin(), a.end(), 0); }

std::vector<int> minus(std::vector<int> a, int alpha) {
    for (int s = 0; s < alpha; ++s) {
        auto it = std::find_if(a.begin(), a.end(), [](int x) { return x > 0; });
        if (it == a.end()) throw PreconditionError("vector minus exceeds its total");
        --*it;
    }
    return a;
}

int first_nonzero(const std::vector<int>& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return static_cast<int>(i) + 1;
    return 0;
}

std::vector<int> truncate(std::vector<int> a, int k) {
    for (size_t i = static_cast<size_t>(std::max(k, 0)); i < a.size(); ++i) a[i] = 0;
    return a;
}

std::vector<int> add_delta(std::vector<int> a, int k, int m) {
    if (k < 1 || k > static_cast<int>(a.size())) throw PreconditionError("branch index out of range");
    a[k - 1] += m;
    return a;
}

std::vector<int> delta(int size, int k, int m) { return add_delta(std::vector<int>(size, 0), k, m); }

}  // namespace vec

MorseComplex::MorseComplex(const SpanningData& sd, int n, MorseOptions opts)
    : sd_(sd), g_(sd.numbered()), bt_(sd), n_(n), opts_(opts), in_tree_(sd.in_tree) {
    if (n < 1 || n > kMaxBraidIndex) throw PreconditionError("braid index out of range");
}

bool MorseComplex::is_endpoint(const CubeCell& c, int v) const {
    for (int e : c.edges()) {
        const Edge& ed = g_.edge(e);
        if (ed.u == v || ed.v == v) return true;
    }
    return false;
}

bool MorseComplex::occupied(const CubeCell& c, int v) const {
    auto vs = c.vertices();
    return std::binary_search(vs.begin(), vs.end(), static_cast<std::uint16_t>(v)) || is_endpoint(c, v);
}

bool MorseComplex::blocked(const CubeCell& c, int v) const {
    if (v == 0) return true;
    return occupied(c, bt_.parent(v));
}

bool MorseComplex::order_respecting(const CubeCell& c, int e) const {
    if (!in_tree_[e]) return false;
    int t = tau_of(g_, e), i = iota_of(g_, e);
    for (int v : c.vertices())
        if (v > t && v < i && bt_.parent(v) == t) return false;
    return true;
}

std::vector<int> MorseComplex::unblocked(const CubeCell& c) const {
    std::vector<int> out;
    for (int v : c.vertices())
        if (!blocked(c, v)) out.push_back(v);
    return out;
}

bool MorseComplex::is_critical(const CubeCell& c) const {
    for (int v : c.vertices())
        if (!blocked(c, v)) return false;
    for (int e : c.edges())
        if (order_respecting(c, e)) return false;
    return true;
}

MorseStatus MorseComplex::classify(const CubeCell& c) const {
    auto ub = unblocked(c);
    int matched = -1;
    for (int j = 0; j < c.dim; ++j) {
        int e = c.edges()[j];
        if (!order_respecting(c, e)) continue;
        int i = iota_of(g_, e);
        CubeCell lower = replace_edge(g_, c, j, i);
        auto lub = unblocked(lower);
        if (lub.empty() || lub.front() != i) continue;
        if (classify(lower).kind == MorseKind::Collapsible) continue;
        if (matched >= 0) throw InvariantViolation("cell " + format_cell(c) + " is matched twice");
        matched = e;
    }
    if (matched >= 0) return {MorseKind::Collapsible, matched};
    if (!ub.empty()) return {MorseKind::Redundant, ub.front()};
    for (int e : c.edges())
        if (order_respecting(c, e))
            throw InvariantViolation("cell " + format_cell(c) + " has an order-respecting edge but no partner");
    return {MorseKind::Critical, -1};
}

const std::vector<CubeCell>& MorseComplex::critical(int dim) const {
    if (dim < 0 || dim > 2) throw PreconditionError("critical cells are listed for dimensions 0..2");
    std::call_once(crit_once_, [&] {
        crit_.assign(3, {});
        {
            std::vector<int> verts;
            stack_down(0, n_, verts);
            crit_[0].push_back(assemble({}, verts));
        }
        // Candidates come from names: every vertex sits in a blocked stack, so
        // a critical cell is determined by its edges and branch counts.
        std::vector<NameBlock> blocks;
        for (int e = 0; e < g_.edge_count(); ++e) {
            int t = tau_of(g_, e), i = iota_of(g_, e);
            NameBlock b;
            if (in_tree_[e]) {
                b.vertex = t;
                b.branch = bt_.g(t, i);
                if (b.branch < 1 || (t != 0 && b.branch < 2)) continue;  // always order-respecting
            } else if (t == 0) {
                b.vertex = i;
                b.branch = 0;
            } else {
                b.vertex = t;
                b.branch = -bt_.g(t, i);
            }
            blocks.push_back(b);
        }
        auto counts_for = [&](int mu, int budget) {
            std::vector<std::vector<int>> out;
            std::vector<int> cur(mu, 0);
            auto rec = [&](auto&& self, int i, int left) -> void {
                if (i == mu) {
                    out.push_back(cur);
                    return;
                }
                for (int c = 0; c <= left; ++c) {
                    cur[i] = c;
                    self(self, i + 1, left - c);
                }
                cur[i] = 0;
            };
            rec(rec, 0, budget);
            return out;
        };
        std::unordered_set<CubeCell, CubeCellHash> seen;
        auto consider = [&](const CriticalCellName& nm, int d) {
            CubeCell c;
            try {
                c = cell_of(nm);
            } catch (const PreconditionError&) {
                return;
            }
            if (!is_valid_cell(g_, c) || !is_critical(c) || !seen.insert(c).second) return;
            crit_[d].push_back(c);
        };
        auto with_counts = [&](NameBlock b, int budget, auto&& next) {
            if (b.branch == 0) {
                b.counts.clear();
                next(b, 0);
                return;
            }
            for (auto& cv : counts_for(bt_.mu(b.vertex), budget)) {
                b.counts = cv;
                next(b, vec::total(cv));
            }
        };
        for (size_t i = 0; i < blocks.size() && n_ >= 1; ++i)
            with_counts(blocks[i], n_ - 1, [&](const NameBlock& b1, int used) {
                consider(CriticalCellName{b1, std::nullopt, n_ - 1 - used}, 1);
            });
        for (size_t i = 0; i < blocks.size() && n_ >= 2; ++i)
            for (size_t j = i + 1; j < blocks.size(); ++j)
                with_counts(blocks[i], n_ - 2, [&](const NameBlock& b1, int u1) {
                    with_counts(blocks[j], n_ - 2 - u1, [&](const NameBlock& b2, int u2) {
                        consider(CriticalCellName{b1, b2, n_ - 2 - u1 - u2}, 2);
                    });
                });
        for (int d = 1; d <= 2; ++d) {
            std::vector<CriticalCellName> names;
            for (const auto& c : crit_[d]) names.push_back(name_of(c));
            std::vector<size_t> idx(names.size());
            std::iota(idx.begin(), idx.end(), size_t{0});
            std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return names[x] < names[y]; });
            std::vector<CubeCell> sorted;
            for (size_t i : idx) sorted.push_back(crit_[d][i]);
            crit_[d] = std::move(sorted);
        }
        for (size_t i = 0; i < crit_[1].size(); ++i) gen_index_[crit_[1][i]] = static_cast<int>(i);
    });
    return crit_[dim];
}

std::vector<std::int64_t> MorseComplex::critical_census(CellBudget budget) const {
    auto cells = enumerate_cells(g_, n_, n_, budget);
    std::vector<std::int64_t> out;
    for (const auto& layer : cells) {
        std::int64_t k = 0;
        for (const auto& c : layer)
            if (is_critical(c)) ++k;
        out.push_back(k);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

int MorseComplex::generator_index(const CubeCell& c) const {
    critical(1);
    auto it = gen_index_.find(c);
    return it == gen_index_.end() ? -1 : it->second;
}

std::vector<std::string> MorseComplex::generator_names() const {
    std::vector<std::string> out;
    for (const auto& c : critical(1)) out.push_back(format(name_of(c)));
    return out;
}

CubeCell MorseComplex::assemble(std::vector<int> edges, std::vector<int> verts) const {
    return make_cell(g_, std::move(edges), std::move(verts));
}

int MorseComplex::tree_child_edge(int A, int branch) const {
    if (branch < 1 || branch > bt_.mu(A)) throw PreconditionError("branch index out of range at vertex");
    return bt_.parent_edge(bt_.child_on_branch(A, branch));
}

int MorseComplex::deleted_edge_at(int A, int branch) const {
    int found = -1;
    for (int d : sd_.deleted) {
        if (tau_of(g_, d) != A || bt_.g(A, iota_of(g_, d)) != branch) continue;
        if (found >= 0) throw PreconditionError("two deleted edges share a terminal vertex and branch");
        found = d;
    }
    if (found < 0) throw PreconditionError("no deleted edge on that branch");
    return found;
}

int MorseComplex::deleted_edge_to_base(int iota_vertex) const {
    for (int d : sd_.deleted)
        if (tau_of(g_, d) == 0 && iota_of(g_, d) == iota_vertex) return d;
    throw PreconditionError("no deleted edge from that vertex to the base");
}

void MorseComplex::stack_down(int start, int count, std::vector<int>& out) const {
    int cur = start;
    for (int i = 0; i < count; ++i) {
        if (cur < 0) throw PreconditionError("stack runs off the tree");
        out.push_back(cur);
        if (i + 1 < count) {
            const auto& ch = bt_.children(cur);
            if (ch.size() != 1) throw PreconditionError("stack walks into a branch point; subdivide further");
            cur = ch.front();
        }
    }
}

CubeCell MorseComplex::cell_of(const CriticalCellName& name) const {
    std::vector<NameBlock> blocks{name.first};
    if (name.second) blocks.push_back(*name.second);
    std::vector<int> edges, verts;
    bool base_occupied = false;
    for (const auto& b : blocks) {
        int e;
        if (b.branch > 0) e = tree_child_edge(b.vertex, b.branch);
        else if (b.branch < 0) e = deleted_edge_at(b.vertex, -b.branch);
        else e = deleted_edge_to_base(b.vertex);
        edges.push_back(e);
        if (tau_of(g_, e) == 0) base_occupied = true;
        const int mu = b.branch == 0 ? 0 : bt_.mu(b.vertex);
        if (static_cast<int>(b.counts.size()) != mu)
            throw PreconditionError("count vector length must equal the number of branches");
        for (int i = 1; i <= mu; ++i) {
            int cnt = b.counts[i - 1];
            if (cnt < 0) throw PreconditionError("negative count");
            if (cnt == 0) continue;
            int start = bt_.child_on_branch(b.vertex, i);
            if (i == b.branch) {
                const auto& ch = bt_.children(start);
                if (ch.size() != 1) throw PreconditionError("stack walks into a branch point; subdivide further");
                start = ch.front();
            }
            stack_down(start, cnt, verts);
        }
    }
    if (name.base < 0) throw PreconditionError("negative base count");
    if (name.base > 0) {
        int start = 0;
        if (base_occupied) {
            const auto& ch = bt_.children(0);
            if (ch.size() != 1) throw PreconditionError("base stack is ambiguous");
            start = ch.front();
        }
        stack_down(start, name.base, verts);
    }
    if (static_cast<int>(edges.size() + verts.size()) != n_)
        throw PreconditionError("name does not describe " + std::to_string(n_) + " particles");
    return assemble(std::move(edges), std::move(verts));
}

CubeCell MorseComplex::cell_of(const NameBlock& block) const {
    CriticalCellName nm;
    nm.first = block;
    nm.base = n_ - 1 - block.total();
    return cell_of(nm);
}

CriticalCellName MorseComplex::name_of(const CubeCell& c) const {
    if (c.dim < 1 || c.dim > 2) throw PreconditionError("only 1- and 2-cells have names");
    std::vector<NameBlock> blocks;
    for (int e : c.edges()) {
        int t = tau_of(g_, e), i = iota_of(g_, e);
        NameBlock b;
        if (in_tree_[e]) {
            b.vertex = t;
            b.branch = bt_.g(t, i);
        } else if (t == 0) {
            b.vertex = i;
            b.branch = 0;
        } else {
            b.vertex = t;
            b.branch = -bt_.g(t, i);
        }
        if (b.branch != 0) b.counts.assign(bt_.mu(b.vertex), 0);
        blocks.push_back(std::move(b));
    }
    CriticalCellName nm;
    auto vs = c.vertices();
    auto in_cell = [&](int v) { return std::binary_search(vs.begin(), vs.end(), static_cast<std::uint16_t>(v)); };
    for (int w : vs) {
        int cur = w;
        int owner = -1;
        bool base = false;
        while (true) {
            if (cur == 0) {
                base = true;
                break;
            }
            int p = bt_.parent(cur);
            int hit = -1;
            for (int j = 0; j < c.dim; ++j) {
                const Edge& ed = g_.edge(c.edges()[j]);
                if (ed.u == p || ed.v == p) hit = j;
            }
            if (hit >= 0) {
                if (p == 0) base = true;
                else owner = hit;
                break;
            }
            if (!in_cell(p)) throw PreconditionError("cell " + format_cell(c) + " has an unblocked vertex");
            cur = p;
        }
        if (base) {
            ++nm.base;
            continue;
        }
        NameBlock& b = blocks[owner];
        if (b.branch == 0) throw PreconditionError("vertex stacked under a base edge");
        int br = bt_.g(b.vertex, w);
        if (br < 1) throw PreconditionError("vertex stacked toward the base of its block");
        b.counts[br - 1] += 1;
    }
    nm.first = blocks[0];
    if (blocks.size() > 1) nm.second = blocks[1];
    if (cell_of(nm) != c) throw InvariantViolation("name of " + format_cell(c) + " does not round-trip");
    return nm;
}

std::string MorseComplex::format(const NameBlock& b) const {
    std::ostringstream out;
    out << "v" << g_.label(b.vertex) << "_" << b.branch << "(";
    for (size_t i = 0; i < b.counts.size(); ++i) out << (i ? "," : "") << b.counts[i];
    out << ")";
    return out.str();
}

std::string MorseComplex::format(const CriticalCellName& nm) const {
    std::string s = format(nm.first);
    if (nm.second) s += " " + format(*nm.second);
    return s;
}

std::string MorseComplex::format_cell(const CubeCell& c) const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int e : c.edges()) {
        out << (first ? "" : " ") << iota_of(g_, e) << ">" << tau_of(g_, e);
        first = false;
    }
    for (int v : c.vertices()) {
        out << (first ? "" : " ") << v;
        first = false;
    }
    out << "}";
    return out.str();
}

GroupWord MorseComplex::rewrite(const CubeCell& c) const {
    std::int64_t budget = opts_.rewrite_cap;
    return rewrite_impl(c, budget);
}

GroupWord MorseComplex::rewrite(const std::vector<std::pair<CubeCell, int>>& letters) const {
    GroupWord out;
    std::int64_t budget = opts_.rewrite_cap;
    for (const auto& [c, ex] : letters) {
        GroupWord w = rewrite_impl(c, budget);
        out *= ex > 0 ? w : w.inverse();
    }
    return out;
}

std::int64_t MorseComplex::memo_size() const {
    std::shared_lock lk(memo_mu_);
    return static_cast<std::int64_t>(memo_.size());
}

GroupWord MorseComplex::rewrite_impl(const CubeCell& c, std::int64_t& budget) const {
    if (c.dim != 1) throw PreconditionError("rewriting acts on 1-cells");
    {
        std::shared_lock lk(memo_mu_);
        auto it = memo_.find(c);
        if (it != memo_.end()) return it->second;
    }
    if (--budget < 0) throw BudgetExceeded("rewrite iteration cap exceeded");
    int gi = generator_index(c);
    if (gi >= 0) return GroupWord::generator(gi);

    const int e = c.edges()[0];
    const int ie = iota_of(g_, e), te = tau_of(g_, e);
    auto ub = unblocked(c);
    GroupWord result;
    bool done = false;
    if (order_respecting(c, e) && (ub.empty() || ub.front() > ie)) {
        done = true;  // collapsible
    } else if (ub.empty()) {
        throw InvariantViolation("cell " + format_cell(c) + " is critical but not indexed");
    }
    std::vector<int> verts(c.vertices().begin(), c.vertices().end());
    if (!done && opts_.use_shortcut) {
        for (int v : ub) {
            int p = bt_.parent(v);
            bool clear = true;
            for (int w : c.vertices())
                if (w > p && w < v) clear = false;
            if (ie > p && ie < v) clear = false;
            if (te > p && te < v) clear = false;
            if (!clear) continue;
            std::vector<int> moved = verts;
            std::replace(moved.begin(), moved.end(), v, p);
            result = rewrite_impl(assemble({e}, moved), budget);
            done = true;
            break;
        }
    }
    if (!done) {
        const int v = ub.front();
        const int ep = bt_.parent_edge(v);
        const int pv = bt_.parent(v);
        std::vector<int> rest;
        for (int w : verts)
            if (w != v) rest.push_back(w);
        auto with = [&](int extra) {
            auto r = rest;
            r.push_back(extra);
            return r;
        };
        GroupWord w1 = rewrite_impl(assemble({ep}, with(ie)), budget);
        GroupWord w2 = rewrite_impl(assemble({e}, with(pv)), budget);
        GroupWord w3 = rewrite_impl(assemble({ep}, with(te)), budget);
        result = w1 * w2 * w3.inverse();
    }
    std::unique_lock lk(memo_mu_);
    memo_.emplace(c, result);
    return result;
}

std::array<CubeCell, 4> MorseComplex::boundary_faces(const CubeCell& c) const {
    if (c.dim != 2) throw PreconditionError("boundary words are defined for 2-cells");
    int e1 = c.edges()[0], e2 = c.edges()[1];
    return {replace_edge(g_, c, 1, iota_of(g_, e2)), replace_edge(g_, c, 0, tau_of(g_, e1)),
            replace_edge(g_, c, 1, tau_of(g_, e2)), replace_edge(g_, c, 0, iota_of(g_, e1))};
}

std::vector<std::pair<CubeCell, int>> MorseComplex::boundary_word(const CubeCell& c) const {
    auto f = boundary_faces(c);
    return {{f[0], 1}, {f[1], 1}, {f[2], -1}, {f[3], -1}};
}

std::array<GroupWord, 4> MorseComplex::rewritten_faces(const CubeCell& c) const {
    auto f = boundary_faces(c);
    return {rewrite(f[0]), rewrite(f[1]), rewrite(f[2]), rewrite(f[3])};
}

GroupWord MorseComplex::boundary_relator(const CubeCell& c) const {
    auto r = rewritten_faces(c);
    return r[0] * r[1] * r[2].inverse() * r[3].inverse();
}

GroupWord MorseComplex::letter(const NameBlock& block) const { return rewrite(cell_of(block)); }

GroupWord MorseComplex::bold_A(int A, const std::vector<int>& a, int l, int m) const {
    const int mu = bt_.mu(A);
    if (static_cast<int>(a.size()) != mu) throw PreconditionError("vector length must equal mu(A)");
    if (l < 1 || l > mu) throw PreconditionError("branch index out of range in bold word");
    if (m < 1 || m > n_ - vec::total(a)) throw PreconditionError("multiplicity out of range in bold word");
    GroupWord out;
    const int total = vec::total(a);
    for (int alpha = 0; alpha < total; ++alpha) {
        auto v = vec::minus(a, alpha);
        NameBlock b{A, vec::first_nonzero(v), vec::add_delta(vec::minus(v, 1), l, m)};
        out *= letter(b);
    }
    return out;
}

GroupWord MorseComplex::bold_BA(int B, int A, const std::vector<int>& b, const std::vector<int>& a) const {
    if (!(A < B)) throw PreconditionError("bold pair needs A < B");
    if (static_cast<int>(b.size()) != bt_.mu(B)) throw PreconditionError("vector length must equal mu(B)");
    const int gab = bt_.g(A, B);
    const int nb = vec::total(b);
    GroupWord out;
    for (int alpha = 0; alpha < nb; ++alpha) {
        GroupWord w = bold_A(A, a, gab, nb + 1 - alpha);
        auto v = vec::minus(b, alpha);
        NameBlock blk{B, vec::first_nonzero(v), vec::add_delta(vec::minus(v, 1), 1, 1)};
        out *= w * letter(blk) * w.inverse();
    }
    return out;
}

CaseInfo MorseComplex::case_of(const CubeCell& c) const {
    if (c.dim != 2) throw PreconditionError("cases are defined for 2-cells");
    CaseInfo info;
    int e1 = c.edges()[0], e2 = c.edges()[1];
    info.a = tau_of(g_, e1);
    info.b = tau_of(g_, e2);
    int x = bt_.wedge(info.a, info.b);
    info.c = bt_.wedge(info.b, iota_of(g_, e1));
    if (x < info.a) info.tag = 1;
    else if (info.c == info.a) info.tag = 3;
    else if (info.c == info.b) info.tag = 4;
    else info.tag = 2;
    return info;
}

GroupWord MorseComplex::closed_form_boundary(const CubeCell& c, bool linear, int* tag_out) const {
    auto nm = name_of(c);
    const NameBlock& A = nm.first;
    const NameBlock& B = *nm.second;
    if (A.branch == 0) throw OutOfScope("closed forms need both edges away from the base");
    auto info = case_of(c);
    if (tag_out) *tag_out = info.tag;
    const int nb = B.total();
    const int na = A.total();
    const int k = std::abs(A.branch);
    GroupWord Bw = letter(B);
    switch (info.tag) {
        case 1: {
            if (linear) throw InvariantViolation("case 1 cannot occur on a linear spanning tree");
            int X = bt_.wedge(A.vertex, B.vertex);
            GroupWord om = bold_A(X, vec::delta(bt_.mu(X), bt_.g(X, B.vertex), nb + 1), bt_.g(X, A.vertex), na + 1);
            return GroupWord::commutator(Bw, om * letter(A) * om.inverse());
        }
        case 2: {
            int C = info.c;
            GroupWord gam = bold_A(C, vec::delta(bt_.mu(C), bt_.g(C, B.vertex), nb + 1), 1, 1);
            GroupWord X = letter({A.vertex, A.branch, vec::add_delta(A.counts, k, nb + 1)});
            if (linear) return GroupWord::commutator(Bw, gam * X);
            GroupWord om = bold_A(A.vertex, A.counts, k, nb + 1);
            return GroupWord::commutator(Bw, om.inverse() * gam * X * om);
        }
        case 3: {
            int nu = bt_.g(A.vertex, B.vertex);
            GroupWord X = letter({A.vertex, A.branch, vec::add_delta(A.counts, nu, nb + 1)});
            if (linear) return GroupWord::commutator(Bw, X);
            GroupWord w1 = bold_A(A.vertex, vec::add_delta(A.counts, k, 1), nu, nb + 1);
            GroupWord w2 = bold_A(A.vertex, A.counts, nu, nb + 1);
            return GroupWord::commutator(Bw, w1.inverse() * X * w2);
        }
        case 4: {
            const int l = std::abs(B.branch);
            GroupWord X = letter({A.vertex, A.branch, vec::add_delta(A.counts, k, nb + 1)});
            GroupWord B1 = letter({B.vertex, B.branch, vec::add_delta(B.counts, 1, 1)});
            if (linear) {
                GroupWord b1 = bold_A(B.vertex, vec::add_delta(B.counts, l, 1), 1, 1);
                GroupWord b2 = bold_A(B.vertex, B.counts, 1, 1);
                return B1 * b2 * X * Bw.inverse() * X.inverse() * b1.inverse();
            }
            GroupWord w1 = bold_A(A.vertex, A.counts, k, nb + 2);
            GroupWord w2 = bold_A(A.vertex, A.counts, k, nb + 1);
            GroupWord b2 = bold_BA(B.vertex, A.vertex, B.counts, A.counts);
            GroupWord b1 = bold_BA(B.vertex, A.vertex, vec::add_delta(B.counts, l, 1), A.counts);
            return w1 * B1 * w1.inverse() * b2 * X * w2 * Bw.inverse() * w2.inverse() * X.inverse() * b1.inverse();
        }
        default:
            throw InvariantViolation("unclassified 2-cell");
    }
}

Presentation MorseComplex::raw_presentation() const {
    Presentation p;
    p.generators = generator_names();
    for (const auto& c : critical(2)) p.add_relator(boundary_relator(c), format(name_of(c)));
    return p;
}

}  // namespace braidlab
