#include "braidlab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "braidlab/error.hpp"

namespace braidlab {

int Graph::add_vertex(std::int64_t label) {
    if (label < 0) throw PreconditionError("vertex labels must be non-negative");
    if (find_label(label)) throw PreconditionError("duplicate vertex label " + std::to_string(label));
    labels_.push_back(label);
    incident_.emplace_back();
    if (rotation_) rotation_->emplace_back();
    return vertex_count() - 1;
}

int Graph::add_vertex() {
    std::int64_t next = 0;
    for (auto l : labels_) next = std::max(next, l + 1);
    return add_vertex(next);
}

int Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw PreconditionError("edge endpoint out of range");
    edges_.push_back({u, v});
    int e = edge_count() - 1;
    incident_[u].push_back(e);
    incident_[v].push_back(e);
    rotation_.reset();
    return e;
}

int Graph::other_end(int e, int v) const {
    const Edge& ed = edges_.at(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw PreconditionError("vertex is not an endpoint of edge");
}

std::optional<int> Graph::find_label(std::int64_t label) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

bool Graph::is_connected() const {
    if (vertex_count() == 0) return true;
    std::vector<char> seen(vertex_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : incident_[v]) {
            int w = other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == vertex_count();
}

bool Graph::is_simple() const {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : edges_) {
        if (e.is_loop()) return false;
        pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

std::vector<int> Graph::vertices_of_degree_not(int d) const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (degree(v) != d) out.push_back(v);
    return out;
}

void Graph::set_rotation(Rotation rot) {
    if (static_cast<int>(rot.size()) != vertex_count())
        throw PreconditionError("rotation must list every vertex");
    for (int v = 0; v < vertex_count(); ++v) {
        auto want = incident_[v];
        auto got = rot[v];
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        if (want != got)
            throw PreconditionError("rotation at vertex " + std::to_string(labels_[v]) +
                                    " does not list each incident edge-end exactly once");
    }
    rotation_ = std::move(rot);
}

void Graph::set_base(std::optional<int> b) {
    if (b && (*b < 0 || *b >= vertex_count())) throw PreconditionError("base vertex out of range");
    base_ = b;
}

namespace {

std::string trim(std::string_view s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) return {};
    auto b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

std::int64_t parse_int(const std::string& tok, int line) {
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": expected integer, got '" + tok + "'");
    }
}

}  // namespace

Graph parse_graph(std::string_view text) {
    Graph g;
    std::vector<std::pair<std::int64_t, std::int64_t>> edge_lines;
    std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> rot_lines;
    std::optional<std::int64_t> base_label;
    std::vector<std::int64_t> declared;
    std::string name;

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "v") {
            std::string a;
            if (!(ls >> a)) throw ParseError("line " + std::to_string(lineno) + ": v needs an id");
            declared.push_back(parse_int(a, lineno));
        } else if (kw == "e") {
            std::string a, b;
            if (!(ls >> a >> b)) throw ParseError("line " + std::to_string(lineno) + ": e needs two ids");
            edge_lines.emplace_back(parse_int(a, lineno), parse_int(b, lineno));
        } else if (kw == "rot") {
            std::string rest;
            std::getline(ls, rest);
            auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw ParseError("line " + std::to_string(lineno) + ": rot needs '<id>: <edges>'");
            std::int64_t vid = parse_int(trim(rest.substr(0, colon)), lineno);
            std::istringstream es(rest.substr(colon + 1));
            std::vector<std::int64_t> list;
            std::string tok;
            while (es >> tok) {
                if (!tok.empty() && tok.back() == ',') tok.pop_back();
                if (!tok.empty()) list.push_back(parse_int(tok, lineno));
            }
            rot_lines.emplace_back(vid, std::move(list));
        } else if (kw == "base") {
            std::string a;
            if (!(ls >> a)) throw ParseError("line " + std::to_string(lineno) + ": base needs an id");
            base_label = parse_int(a, lineno);
        } else if (kw == "pattern") {
            std::getline(ls, name);
            name = trim(name);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + kw + "'");
        }
    }

    std::map<std::int64_t, int> ids;
    auto ensure = [&](std::int64_t label, bool strict) {
        auto it = ids.find(label);
        if (it != ids.end()) return it->second;
        if (strict) throw ParseError("edge endpoint " + std::to_string(label) + " is not a declared vertex");
        int id = g.add_vertex(label);
        ids[label] = id;
        return id;
    };
    for (auto l : declared) {
        if (ids.count(l)) throw ParseError("vertex " + std::to_string(l) + " declared twice");
        ensure(l, false);
    }
    const bool strict = !declared.empty();
    for (auto [a, b] : edge_lines) {
        int u = ensure(a, strict);
        int v = ensure(b, strict);
        g.add_edge(u, v);
    }
    if (!rot_lines.empty()) {
        Graph::Rotation rot(g.vertex_count());
        std::vector<char> seen(g.vertex_count(), 0);
        for (auto& [vid, list] : rot_lines) {
            auto it = ids.find(vid);
            if (it == ids.end()) throw ParseError("rot for unknown vertex " + std::to_string(vid));
            if (seen[it->second]) throw ParseError("duplicate rot for vertex " + std::to_string(vid));
            seen[it->second] = 1;
            for (auto e : list) {
                if (e < 0 || e >= g.edge_count()) throw ParseError("rot lists unknown edge index");
                rot[it->second].push_back(static_cast<int>(e));
            }
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!seen[v]) throw ParseError("rotation system must cover every vertex");
        try {
            g.set_rotation(std::move(rot));
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
    }
    if (base_label) {
        auto it = ids.find(*base_label);
        if (it == ids.end()) throw ParseError("base is not a declared vertex");
        g.set_base(it->second);
    }
    g.set_name(name);
    if (!g.is_connected()) throw ParseError("graph is not connected");
    if (g.vertex_count() == 0) throw ParseError("graph has no vertices");
    return g;
}

Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    Graph g = parse_graph(ss.str());
    if (g.name().empty()) g.set_name(path.stem().string());
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    if (!g.name().empty()) out << "# " << g.name() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "v " << g.label(v) << "\n";
    for (const auto& e : g.edges()) out << "e " << g.label(e.u) << " " << g.label(e.v) << "\n";
    if (g.rotation()) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            out << "rot " << g.label(v) << ":";
            for (int e : (*g.rotation())[v]) out << " " << e;
            out << "\n";
        }
    }
    if (g.base()) out << "base " << g.label(*g.base()) << "\n";
    return out.str();
}

Graph path_graph(int vertices) {
    Graph g;
    for (int i = 0; i < vertices; ++i) g.add_vertex(i);
    for (int i = 0; i + 1 < vertices; ++i) g.add_edge(i, i + 1);
    g.set_name("P" + std::to_string(vertices));
    return g;
}

Graph cycle_graph(int vertices) {
    Graph g;
    for (int i = 0; i < vertices; ++i) g.add_vertex(i);
    for (int i = 0; i < vertices; ++i) g.add_edge(i, (i + 1) % vertices);
    g.set_name("C" + std::to_string(vertices));
    return g;
}

Graph star_graph(int leaves) {
    Graph g;
    g.add_vertex(0);
    for (int i = 1; i <= leaves; ++i) {
        g.add_vertex(i);
        g.add_edge(0, i);
    }
    g.set_name("star" + std::to_string(leaves));
    return g;
}

Graph theta_graph() {
    Graph g;
    g.add_vertex(0);
    g.add_vertex(1);
    for (int i = 0; i < 3; ++i) g.add_edge(0, 1);
    g.set_name("theta");
    return g;
}

Graph complete_graph(int vertices) {
    Graph g;
    for (int i = 0; i < vertices; ++i) g.add_vertex(i);
    for (int i = 0; i < vertices; ++i)
        for (int j = i + 1; j < vertices; ++j) g.add_edge(i, j);
    g.set_name("K" + std::to_string(vertices));
    return g;
}

}  // namespace braidlab
