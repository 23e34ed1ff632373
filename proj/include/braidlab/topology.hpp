#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "braidlab/graph.hpp"

namespace braidlab {

struct PatternGraph {
    std::string name;
    Graph graph;

    std::vector<int> branch_vertices() const;  // degree >= 3
};

PatternGraph make_pattern(std::string name, Graph g);
PatternGraph load_pattern(const std::filesystem::path& path);

struct Embedding {
    std::vector<int> vertex_map;             // pattern vertex -> host vertex
    std::vector<std::vector<int>> paths;     // pattern edge -> host vertex sequence
};

struct SearchBudget {
    std::int64_t max_nodes = 5'000'000;
};

// Topological containment: pattern vertices go to distinct host vertices and
// pattern edges to internally disjoint host paths. Throws BudgetExceeded.
std::optional<Embedding> find_topological_embedding(const Graph& host, const PatternGraph& p,
                                                      SearchBudget budget = {});
bool contains_topologically(const Graph& host, const PatternGraph& p, SearchBudget budget = {});

// Every biconnected block is a single edge or a cycle.
bool is_cactus(const Graph& g);

// Biconnected blocks as edge lists (loops are their own block).
std::vector<std::vector<int>> biconnected_blocks(const Graph& g);

enum class Nucleus { N1 = 1, N2 = 2, N3 = 3, N4 = 4 };
std::string nucleus_name(Nucleus n);

// Prose-derived defaults; see README for the shapes.
std::vector<std::pair<Nucleus, PatternGraph>> default_nuclei();
std::vector<Nucleus> detect_nuclei(const Graph& g, SearchBudget budget = {});
std::vector<Nucleus> detect_nuclei(const Graph& g,
                                   const std::vector<std::pair<Nucleus, PatternGraph>>& patterns,
                                   SearchBudget budget = {});

enum class BlockKind { StarBouquet, Candy };

struct BuildingBlock {
    BlockKind kind;
    std::vector<int> essential;  // degree >= 3 vertices of the block, spine order
    std::vector<int> vertices;   // every vertex attached to the block
};

// Linear decomposition of a cactus with no nuclei, ordered along the spine.
std::vector<BuildingBlock> building_blocks(const Graph& g);

}  // namespace braidlab
