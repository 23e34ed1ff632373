#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidlab/raag.hpp"
#include "braidlab/recipes.hpp"

namespace braidlab {

enum class Route { RaagConstructed, NonRaagCertified, NonRaagByCitation, ScrOnly, OutOfScope };
std::string route_name(Route r);

struct RunConfig {
    int n = 4;
    bool oracle = true;                       // compare against cubical homology
    std::int64_t cell_budget = 20'000'000;
    std::int64_t rewrite_budget = 1'000'000;
    std::int64_t embedding_budget = 512;
    std::int64_t search_budget = 5'000'000;   // topological minor search nodes
    std::int64_t shape_budget = 10'000;
    std::uint64_t seed = 1;

    // BRAIDLAB_CELL_BUDGET, BRAIDLAB_REWRITE_BUDGET, BRAIDLAB_EMBEDDING_BUDGET,
    // BRAIDLAB_SEARCH_BUDGET, BRAIDLAB_SHAPE_BUDGET, BRAIDLAB_SEED override.
    static RunConfig from_env();
    static RunConfig from_env(RunConfig base);
    void validate() const;
};

struct OracleNumbers {
    bool computed = false;
    Abelianization h1;
    std::int64_t beta2 = -1;
};

struct Verdict {
    std::string graph_name;
    int vertices = 0, edges = 0;
    bool cactus = false;
    int n = 0;
    std::vector<Nucleus> nuclei;
    Route route = Route::OutOfScope;
    std::string explanation;

    int raw_generators = 0, raw_relators = 0;
    std::optional<Presentation> scr;
    std::optional<Presentation> raag;
    std::optional<RaagIsoCheck> raag_check;
    std::optional<RecipeOutcome> recipe;
    std::optional<MasseyCertificate> certificate;
    OracleNumbers oracle;
    // (raw, scr, raag) abelianizations checked against the oracle
    std::vector<std::pair<std::string, bool>> h1_checks;

    nlohmann::json to_json() const;
};

Verdict analyze(const Graph& g, const RunConfig& cfg = {});

// H_1 and b2 of UD_n g through the cubical complex on a minimal subdivision.
OracleNumbers oracle_numbers(const Graph& g, int n, bool with_beta2, CellBudget budget = {});

struct CupZeroReport {
    std::vector<CupCheck> checks;
    bool all_zero() const;
};

// Recompute the cup-zero sums of the recipe pairs for the first nucleus.
CupZeroReport cup_zero_verify(const Graph& g, int n, Nucleus which, const RunConfig& cfg = {});
CupCheck cup_zero_verify(const Presentation& p, const std::string& name, const std::vector<int>& X,
                         const std::vector<int>& Y);

struct RegressionCell {
    std::string graph;
    std::string check;
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

// Each corpus entry is <name>.graph with <name>.expect.json next to it.
std::vector<RegressionCell> corpus_regression(const std::filesystem::path& dir, const RunConfig& cfg = {});

}  // namespace braidlab
