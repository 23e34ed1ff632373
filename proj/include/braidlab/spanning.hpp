#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidlab/graph.hpp"
#include "braidlab/subdivision.hpp"

namespace braidlab {

enum class SpanningMode { General, Cactus, LinearCactus };

// Maximal tree plus vertex numbering. `graph` keeps the subdivided vertex ids;
// `numbered()` gives the same graph with vertex id == number, which is what
// the Morse machinery works on.
struct SpanningData {
    Graph graph;
    SpanningMode mode = SpanningMode::General;
    std::vector<char> in_tree;    // per edge
    std::vector<int> order;       // vertex -> number
    std::vector<int> vertex_at;   // number -> vertex
    std::vector<int> deleted;     // non-tree edge ids

    Graph numbered() const;
    int iota(int e) const;  // number of the initial (larger) end
    int tau(int e) const;
};

// Branch bookkeeping on numbers. Branch 0 of a non-base vertex points to the
// base; the base numbers its own branches from 0.
class BranchTable {
public:
    explicit BranchTable(const SpanningData& sd);

    int parent(int v) const { return parent_[v]; }
    int parent_edge(int v) const { return parent_edge_[v]; }
    const std::vector<int>& children(int v) const { return children_[v]; }
    bool essential(int v) const { return essential_[v]; }
    int mu(int v) const;
    int branch_of_child(int v, int child) const;  // branch number at v
    int child_on_branch(int v, int branch) const;
    bool in_subtree(int v, int w) const { return tin_[v] <= tin_[w] && tout_[w] <= tout_[v]; }
    int g(int v, int w) const;       // branch of v containing w
    int wedge(int v, int w) const;   // v ^ w
    int lca(int v, int w) const;
    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
    std::vector<int> parent_edge_;
    std::vector<std::vector<int>> children_;
    std::vector<char> essential_;
    std::vector<int> tin_;
    std::vector<int> tout_;
    std::vector<int> depth_;
};

// Base vertex choice on an already subdivided graph.
int choose_base(const Graph& g, SpanningMode mode);

SpanningData build_spanning(const Graph& g, SpanningMode mode);

struct PropertyCheck {
    explicit PropertyCheck(std::string n = {}) : name(std::move(n)) {}
    std::string name;
    bool checked = true;
    bool holds = true;
    std::string counterexample;
};

struct PropertyReport {
    std::vector<PropertyCheck> checks;
    bool all_hold() const;
    const PropertyCheck* find(const std::string& name) const;
};

PropertyReport verify_properties(const SpanningData& sd);

// Subdivide with a safety margin, pick the base, pin it if needed and build
// the spanning data. The margin keeps critical-cell names unambiguous.
struct Prepared {
    SubdivisionMap subdivision;
    SpanningData spanning;
};
Prepared prepare(const Graph& g, int n, SpanningMode mode, int margin = 1);

std::string format_spanning(const SpanningData& sd);

}  // namespace braidlab
