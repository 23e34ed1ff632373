#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidlab/config_space.hpp"
#include "braidlab/group_word.hpp"
#include "braidlab/spanning.hpp"

namespace braidlab {

enum class MorseKind { Critical, Collapsible, Redundant };

struct MorseStatus {
    MorseKind kind = MorseKind::Critical;
    int witness = -1;  // matching edge (collapsible) or smallest unblocked vertex (redundant)
};

// One block A_k(a) of a name. counts[i] is the number of blocked vertices on
// branch i+1 of `vertex`.
struct NameBlock {
    int vertex = 0;
    int branch = 0;
    std::vector<int> counts;

    int total() const;
    auto operator<=>(const NameBlock&) const = default;
};

struct CriticalCellName {
    NameBlock first;
    std::optional<NameBlock> second;
    int base = 0;  // s in 0_s

    int dim() const { return second ? 2 : 1; }
    auto operator<=>(const CriticalCellName&) const = default;
};

// Vector helpers on branch-count vectors (index i is branch i+1).
namespace vec {
int total(const std::vector<int>& a);
std::vector<int> minus(std::vector<int> a, int alpha);   // a - alpha
int first_nonzero(const std::vector<int>& a);            // p(a), 1-based; 0 if a = 0
std::vector<int> truncate(std::vector<int> a, int k);    // (a)_k
std::vector<int> add_delta(std::vector<int> a, int k, int m = 1);
std::vector<int> delta(int size, int k, int m = 1);
}  // namespace vec

struct MorseOptions {
    bool use_shortcut = true;          // shortcut to the parent before splitting
    std::int64_t rewrite_cap = 1'000'000;
};

// Which of the four A/B configurations a critical 2-cell falls into.
struct CaseInfo {
    int tag = 0;        // 1..4, 0 when a block sits at the base
    int a = 0, b = 0;   // tau of the two edges, a < b
    int c = 0;          // B ^ iota(A_k)
};

class MorseComplex {
public:
    MorseComplex(const SpanningData& sd, int n, MorseOptions opts = {});

    const Graph& graph() const { return g_; }
    const BranchTable& branches() const { return bt_; }
    const SpanningData& spanning() const { return sd_; }
    int n() const { return n_; }
    const MorseOptions& options() const { return opts_; }

    bool blocked(const CubeCell& c, int v) const;
    bool order_respecting(const CubeCell& c, int e) const;
    std::vector<int> unblocked(const CubeCell& c) const;
    bool is_critical(const CubeCell& c) const;
    MorseStatus classify(const CubeCell& c) const;

    // Cached lists in name order.
    const std::vector<CubeCell>& critical(int dim) const;
    // Counts per dimension over every cell of UD_n.
    std::vector<std::int64_t> critical_census(CellBudget budget = {}) const;

    int generator_index(const CubeCell& c) const;  // -1 unless critical 1-cell
    int generator_count() const { return static_cast<int>(critical(1).size()); }
    std::vector<std::string> generator_names() const;

    CriticalCellName name_of(const CubeCell& c) const;
    CubeCell cell_of(const CriticalCellName& name) const;
    CubeCell cell_of(const NameBlock& block) const;  // 1-cell completed by 0_s
    std::string format(const CriticalCellName& name) const;
    std::string format(const NameBlock& block) const;
    std::string format_cell(const CubeCell& c) const;

    // r~ on one 1-cell, memoized.
    GroupWord rewrite(const CubeCell& one_cell) const;
    GroupWord rewrite(const std::vector<std::pair<CubeCell, int>>& letters) const;
    std::int64_t memo_size() const;

    // F1 F2 F3^-1 F4^-1 with F1 = {e1, iota e2}, F2 = {tau e1, e2},
    // F3 = {e1, tau e2}, F4 = {iota e1, e2}; e1 has the smaller tau.
    std::array<CubeCell, 4> boundary_faces(const CubeCell& two_cell) const;
    std::vector<std::pair<CubeCell, int>> boundary_word(const CubeCell& two_cell) const;
    GroupWord boundary_relator(const CubeCell& two_cell) const;
    std::array<GroupWord, 4> rewritten_faces(const CubeCell& two_cell) const;

    GroupWord bold_A(int A, const std::vector<int>& a, int l, int m) const;
    GroupWord bold_BA(int B, int A, const std::vector<int>& b, const std::vector<int>& a) const;
    GroupWord letter(const NameBlock& block) const;  // r~ of the named 1-cell

    CaseInfo case_of(const CubeCell& two_cell) const;
    // Closed form of r~(dc); linear = use the simplified linear-cactus forms.
    GroupWord closed_form_boundary(const CubeCell& two_cell, bool linear, int* tag = nullptr) const;

    Presentation raw_presentation() const;

private:
    GroupWord rewrite_impl(const CubeCell& c, std::int64_t& budget) const;
    bool is_endpoint(const CubeCell& c, int v) const;
    bool occupied(const CubeCell& c, int v) const;
    CubeCell assemble(std::vector<int> edges, std::vector<int> verts) const;
    int deleted_edge_at(int A, int branch) const;
    int deleted_edge_to_base(int iota_vertex) const;
    void stack_down(int start, int count, std::vector<int>& out) const;
    int tree_child_edge(int A, int branch) const;
    int cell_edge_tau(const CubeCell& c, int j) const { return tau_of(g_, c.edges()[j]); }

    SpanningData sd_;
    Graph g_;
    BranchTable bt_;
    int n_;
    MorseOptions opts_;
    std::vector<char> in_tree_;  // per edge of g_

    mutable std::once_flag crit_once_;
    mutable std::vector<std::vector<CubeCell>> crit_;
    mutable std::unordered_map<CubeCell, int, CubeCellHash> gen_index_;

    mutable std::shared_mutex memo_mu_;
    mutable std::unordered_map<CubeCell, GroupWord, CubeCellHash> memo_;
};

}  // namespace braidlab
