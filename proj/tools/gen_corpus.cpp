// Regenerates data/corpus: graph files plus cubical-homology expectations.
// Routes are recorded as a regression snapshot of the current pipeline.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "braidlab/config_space.hpp"
#include "braidlab/pipeline.hpp"
#include "braidlab/subdivision.hpp"
#include "braidlab/topology.hpp"

using namespace braidlab;

int main(int argc, char** argv) {
    const std::filesystem::path dir = argc > 1 ? argv[1] : std::string(BRAIDLAB_DATA_DIR) + "/corpus";
    std::filesystem::create_directories(dir);

    std::vector<std::pair<std::string, Graph>> gs = {
        {"P4", path_graph(4)},
        {"C4", cycle_graph(4)},
        {"Y", star_graph(3)},
        {"Theta", theta_graph()},
        {"K4", complete_graph(4)},
    };
    for (auto& [k, p] : default_nuclei())
        if (k != Nucleus::N1) gs.emplace_back(p.name, p.graph);
    gs.emplace_back("candy", parse_graph("e 0 1\ne 0 1\ne 0 2\ne 1 3\n"));
    gs.emplace_back("twocandy", parse_graph("e 0 1\ne 0 1\ne 0 2\ne 1 4\ne 4 5\ne 4 5\ne 5 3\n"));
    gs.emplace_back("bouquetcandy", parse_graph("e 0 0\ne 0 0\ne 0 1\ne 1 2\ne 1 2\ne 2 3\n"));
    gs.emplace_back("htree", parse_graph("e 0 1\ne 0 2\ne 0 3\ne 3 4\ne 3 5\n"));
    gs.emplace_back("bouquet", parse_graph("e 0 0\ne 0 0\ne 0 1\n"));

    for (auto& [name, g0] : gs) {
        Graph g = g0;
        g.set_name(name);
        std::ofstream(dir / (name + ".graph")) << format_graph(g);

        nlohmann::json j;
        j["by_n"] = nlohmann::json::object();
        for (int n = 2; n <= 4; ++n) {
            auto hom = homology(subdivide_for(g, n).subdivided, n);
            auto h1 = hom.groups.size() > 1 ? hom.groups[1] : HomologyGroup{};
            nlohmann::json t = nlohmann::json::array();
            for (const auto& x : h1.torsion) t.push_back(x.get_str());
            j["by_n"][std::to_string(n)] = {{"euler", hom.euler_from_betti()},
                                            {"euler_cells", hom.euler_from_cells()},
                                            {"h1_rank", h1.betti},
                                            {"h1_torsion", t}};
        }
        RunConfig c;
        c.oracle = false;
        j["route_n4"] = route_name(analyze(g, c).route);
        std::ofstream(dir / (name + ".expect.json")) << j.dump(2) << "\n";
        std::cout << name << " " << j.dump() << "\n";
    }
}
