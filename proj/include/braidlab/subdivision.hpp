#pragma once

#include <vector>

#include "braidlab/graph.hpp"

namespace braidlab {

struct SubdivisionMap {
    Graph original;
    Graph subdivided;
    std::vector<int> edge_origin;    // subdivided edge -> original edge
    std::vector<int> vertex_origin;  // subdivided vertex -> original vertex, -1 if inserted
};

// Smallest subdivision such that every chain between vertices of degree != 2
// (or pinned vertices) has at least n-1 edges and every cycle has at least
// n+1 edges. Original vertices keep their ids; inserted ones are appended.
SubdivisionMap subdivide_for(const Graph& g, int n, const std::vector<int>& pinned = {});

// Contract every inserted degree-2 vertex, recovering the original edges.
Graph contract(const SubdivisionMap& m);

}  // namespace braidlab
