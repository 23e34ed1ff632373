#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidlab {

struct Edge {
    int u = 0;
    int v = 0;
    bool is_loop() const { return u == v; }
};

// Finite multigraph with dense vertex ids 0..V-1. Each vertex keeps the
// label it had in the input file so reports can refer back to it.
class Graph {
public:
    using Rotation = std::vector<std::vector<int>>;

    int add_vertex(std::int64_t label);
    int add_vertex();  // fresh label above every existing one
    int add_edge(int u, int v);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Incident edge ids; a loop is listed twice.
    std::span<const int> incident(int v) const { return incident_.at(v); }
    int degree(int v) const { return static_cast<int>(incident_.at(v).size()); }
    int other_end(int e, int v) const;

    std::int64_t label(int v) const { return labels_.at(v); }
    std::optional<int> find_label(std::int64_t label) const;

    bool is_connected() const;
    bool is_simple() const;
    int betti1() const { return edge_count() - vertex_count() + 1; }
    std::vector<int> vertices_of_degree_not(int d) const;

    const std::optional<Rotation>& rotation() const { return rotation_; }
    void set_rotation(Rotation rot);
    void clear_rotation() { rotation_.reset(); }

    std::optional<int> base() const { return base_; }
    void set_base(std::optional<int> b);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

private:
    std::vector<std::int64_t> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::optional<Rotation> rotation_;
    std::optional<int> base_;
    std::string name_;
};

// Text format: `v <id>`, `e <a> <b>`, `rot <id>: <edge indices>`,
// `base <id>`, `pattern <name>`, `#` comments.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::filesystem::path& path);
std::string format_graph(const Graph& g);

// Small constructors used by tests and the bundled pattern set.
Graph path_graph(int vertices);
Graph cycle_graph(int vertices);
Graph star_graph(int leaves);
Graph theta_graph();
Graph complete_graph(int vertices);

}  // namespace braidlab
