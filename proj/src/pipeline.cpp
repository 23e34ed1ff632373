#include "braidlab/pipeline.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "braidlab/config_space.hpp"
#include "braidlab/error.hpp"
#include "braidlab/subdivision.hpp"

namespace braidlab {

std::string route_name(Route r) {
    switch (r) {
        case Route::RaagConstructed: return "raag-constructed";
        case Route::NonRaagCertified: return "non-raag-certified";
        case Route::NonRaagByCitation: return "non-raag-by-citation";
        case Route::ScrOnly: return "scr-only";
        case Route::OutOfScope: return "out-of-scope";
    }
    return "?";
}

RunConfig RunConfig::from_env() { return from_env(RunConfig{}); }

RunConfig RunConfig::from_env(RunConfig base) {
    auto read = [](const char* name, auto& field) {
        const char* v = std::getenv(name);
        if (!v || !*v) return;
        char* end = nullptr;
        long long x = std::strtoll(v, &end, 10);
        if (*end != '\0') throw PreconditionError(std::string(name) + " is not an integer: " + v);
        field = static_cast<std::remove_reference_t<decltype(field)>>(x);
    };
    read("BRAIDLAB_CELL_BUDGET", base.cell_budget);
    read("BRAIDLAB_REWRITE_BUDGET", base.rewrite_budget);
    read("BRAIDLAB_EMBEDDING_BUDGET", base.embedding_budget);
    read("BRAIDLAB_SEARCH_BUDGET", base.search_budget);
    read("BRAIDLAB_SHAPE_BUDGET", base.shape_budget);
    read("BRAIDLAB_SEED", base.seed);
    base.validate();
    return base;
}

void RunConfig::validate() const {
    if (n < 1) throw PreconditionError("braid index must be positive");
    if (cell_budget <= 0 || rewrite_budget <= 0 || embedding_budget <= 0 || search_budget <= 0 || shape_budget <= 0)
        throw PreconditionError("budgets must be positive");
}

OracleNumbers oracle_numbers(const Graph& g, int n, bool with_beta2, CellBudget budget) {
    OracleNumbers o;
    Graph h = subdivide_for(g, n).subdivided;
    auto h1 = homology_in_degree(h, n, 1, budget);
    o.h1.rank = h1.betti;
    o.h1.torsion = h1.torsion;
    if (with_beta2) o.beta2 = homology_in_degree(h, n, 2, budget).betti;
    o.computed = true;
    return o;
}

bool CupZeroReport::all_zero() const {
    for (const auto& c : checks)
        if (!c.zero()) return false;
    return true;
}

CupCheck cup_zero_verify(const Presentation& p, const std::string& name, const std::vector<int>& X,
                         const std::vector<int>& Y) {
    return CupCheck{name, X, Y, cup_zero_sums(p, X, Y)};
}

CupZeroReport cup_zero_verify(const Graph& g, int n, Nucleus which, const RunConfig& cfg) {
    auto out = run_recipe(g, which, RecipeOptions{n, cfg.embedding_budget});
    if (!out) throw InvariantViolation("no embedding realizes the " + nucleus_name(which) + " recipe");
    CupZeroReport r;
    // recomputed from the stored presentation, not copied from the recipe
    for (const auto& c : out->cup_checks) r.checks.push_back(cup_zero_verify(out->scr, c.name, c.left, c.right));
    return r;
}

namespace {

nlohmann::json presentation_json(const Presentation& p) {
    nlohmann::json j;
    j["generators"] = p.generators;
    j["relators"] = nlohmann::json::array();
    for (const auto& r : p.relators) {
        std::string w;
        for (int l : r.word.letters()) {
            if (!w.empty()) w += ' ';
            w += p.generators[std::abs(l) - 1];
            if (l < 0) w += "^-1";
        }
        j["relators"].push_back(w);
    }
    return j;
}

nlohmann::json abel_json(const Abelianization& a) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& x : a.torsion) t.push_back(x.get_str());
    return {{"rank", a.rank}, {"torsion", t}};
}

}  // namespace

nlohmann::json Verdict::to_json() const {
    nlohmann::json j;
    j["graph"] = {{"name", graph_name}, {"vertices", vertices}, {"edges", edges}, {"cactus", cactus}};
    j["n"] = n;
    j["nuclei"] = nlohmann::json::array();
    for (auto k : nuclei) j["nuclei"].push_back(nucleus_name(k));
    j["route"] = route_name(route);
    j["explanation"] = explanation;
    j["raw"] = {{"generators", raw_generators}, {"relators", raw_relators}};
    if (scr) j["scr"] = presentation_json(*scr);
    if (raag) j["raag"] = presentation_json(*raag);
    if (raag_check) {
        j["raag_check"] = {{"psi_phi_identity", raag_check->psi_phi_identity},
                           {"phi_psi_identity", raag_check->phi_psi_identity},
                           {"relators_vanish", raag_check->relators_vanish},
                           {"abelianization_agrees", raag_check->abelianization_agrees},
                           {"failures", raag_check->failures}};
    }
    if (recipe) {
        nlohmann::json r;
        r["nucleus"] = nucleus_name(recipe->nucleus);
        r["embeddings_tried"] = recipe->embeddings_tried;
        r["letters"] = recipe->letters;
        r["X"] = recipe->X;
        r["Y"] = recipe->Y;
        r["Z"] = recipe->Z;
        r["cup_checks"] = nlohmann::json::array();
        for (const auto& c : recipe->cup_checks) r["cup_checks"].push_back({{"pair", c.name}, {"zero", c.zero()}});
        r["reference_relators"] = recipe->reference_relators;
        r["reference_signs"] = recipe->reference_signs;
        j["recipe"] = r;
    }
    if (certificate) j["certificate"] = braidlab::to_json(*certificate);
    if (oracle.computed) {
        j["oracle"] = {{"h1", abel_json(oracle.h1)}};
        if (oracle.beta2 >= 0) j["oracle"]["beta2"] = oracle.beta2;
    }
    j["h1_checks"] = nlohmann::json::object();
    for (const auto& [name, ok] : h1_checks) j["h1_checks"][name] = ok;
    return j;
}

Verdict analyze(const Graph& g, const RunConfig& cfg) {
    cfg.validate();
    Verdict v;
    v.graph_name = g.name();
    v.vertices = g.vertex_count();
    v.edges = g.edge_count();
    v.cactus = is_cactus(g);
    v.n = cfg.n;
    v.nuclei = detect_nuclei(g, SearchBudget{cfg.search_budget});
    const bool has_n1 = !v.nuclei.empty() && v.nuclei.front() == Nucleus::N1;

    if (has_n1) {
        if (cfg.n != 4) {
            v.route = Route::OutOfScope;
            v.explanation = "contains N1; the non-RAAG result for such graphs is known only for 4 strands";
            return v;
        }
        v.route = Route::NonRaagByCitation;
        v.explanation = "contains N1, for which B_4 is known not to be a right-angled Artin group";
        return v;
    }
    if (!v.cactus) throw InvariantViolation("graph without N1 is not a cactus");

    const bool linear = v.nuclei.empty();
    auto pr = prepare(g, cfg.n, linear ? SpanningMode::LinearCactus : SpanningMode::Cactus);
    MorseOptions mopts;
    mopts.rewrite_cap = cfg.rewrite_budget;
    MorseComplex mc(pr.spanning, cfg.n, mopts);
    ScrResult scr = build_scr(mc);
    v.raw_generators = scr.raw.generator_count();
    v.raw_relators = static_cast<int>(scr.raw.relators.size());
    v.scr = scr.scr;

    // The cubical oracle is only practical for small braid index.
    if (cfg.oracle && cfg.n <= 4) {
        v.oracle = oracle_numbers(g, cfg.n, !linear && cfg.n == 4, CellBudget{cfg.cell_budget});
        v.h1_checks.emplace_back("raw", abelianization(scr.raw) == v.oracle.h1);
        v.h1_checks.emplace_back("scr", abelianization(scr.scr) == v.oracle.h1);
    }

    if (cfg.n != 4) {
        v.route = Route::ScrOnly;
        v.explanation = "RAAG and Massey constructions are available for 4 strands only";
        return v;
    }

    if (linear) {
        RaagResult rr = build_raag(mc, scr);
        v.raag = rr.group;
        v.raag_check = rr.check;
        if (v.oracle.computed) v.h1_checks.emplace_back("raag", abelianization(rr.group) == v.oracle.h1);
        if (!rr.check.ok()) {
            std::string why;
            for (const auto& f : rr.check.failures) why += (why.empty() ? "" : "; ") + f;
            throw InvariantViolation("RAAG verification failed: " + why);
        }
        v.route = Route::RaagConstructed;
        v.explanation = "no nuclei; explicit RAAG presentation verified";
        return v;
    }

    Nucleus first = v.nuclei.front();
    std::optional<RecipeOutcome> out;
    try {
        out = run_recipe(g, first, RecipeOptions{cfg.n, cfg.embedding_budget});
    } catch (const BudgetExceeded& e) {
        v.route = Route::ScrOnly;
        v.explanation = std::string("recipe search stopped: ") + e.what();
        return v;
    }
    if (!out) {
        v.route = Route::ScrOnly;
        v.explanation = "no embedding realizes the " + nucleus_name(first) + " recipe";
        return v;
    }
    if (v.oracle.computed) {
        if (auto refusal = certificate_refusal(out->scr, v.oracle.beta2)) {
            v.route = Route::ScrOnly;
            v.explanation = "certificate refused: " + *refusal;
            v.recipe = std::move(out);
            return v;
        }
    }
    v.certificate = out->certificate;
    v.recipe = std::move(out);
    v.route = Route::NonRaagCertified;
    v.explanation = "triple Massey product on the " + nucleus_name(first) + " letters is nontrivial";
    return v;
}

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw PreconditionError("cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::vector<RegressionCell> corpus_regression(const std::filesystem::path& dir, const RunConfig& cfg) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".graph") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    std::vector<RegressionCell> cells;
    for (const auto& f : files) {
        Graph g = load_graph(f);
        auto expect_path = f;
        expect_path.replace_extension(".expect.json");
        nlohmann::json expect;
        try {
            expect = nlohmann::json::parse(slurp(expect_path));
        } catch (const std::exception& e) {
            cells.push_back({g.name(), "expect", false, 0, e.what()});
            continue;
        }
        auto timed = [&](const std::string& check, auto fn) {
            auto t0 = std::chrono::steady_clock::now();
            RegressionCell c{g.name(), check, false, 0, {}};
            try {
                c.pass = fn(c.detail);
            } catch (const std::exception& e) {
                c.detail = e.what();
            }
            c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            cells.push_back(std::move(c));
        };
        const bool cactus = is_cactus(g);
        const SpanningMode mode = cactus ? SpanningMode::Cactus : SpanningMode::General;
        const nlohmann::json by_n = expect.value("by_n", nlohmann::json::object());
        for (auto& [nkey, want] : by_n.items()) {
            const int n = std::stoi(nkey);
            timed("euler n=" + nkey, [&](std::string& d) {
                auto pr = prepare(g, n, mode);
                MorseComplex mc(pr.spanning, n);
                auto census = mc.critical_census(CellBudget{cfg.cell_budget});
                std::int64_t chi = 0;
                for (size_t k = 0; k < census.size(); ++k) chi += (k % 2 ? -1 : 1) * census[k];
                d = "critical chi " + std::to_string(chi) + ", expected " + std::to_string(want.at("euler").get<std::int64_t>());
                return chi == want.at("euler").get<std::int64_t>();
            });
            timed("h1 n=" + nkey, [&](std::string& d) {
                auto pr = prepare(g, n, mode);
                MorseComplex mc(pr.spanning, n);
                // the reduced presentation needs a cactus; otherwise use the raw one
                Abelianization a = abelianization(cactus ? build_scr(mc).scr : mc.raw_presentation());
                Abelianization w;
                w.rank = want.at("h1_rank").get<std::int64_t>();
                for (const auto& t : want.at("h1_torsion")) w.torsion.emplace_back(t.get<std::string>());
                d = "rank " + std::to_string(a.rank) + ", expected " + std::to_string(w.rank);
                return a == w;
            });
        }
        if (expect.contains("route_n4")) {
            timed("route n=4", [&](std::string& d) {
                RunConfig c = cfg;
                c.n = 4;
                c.oracle = false;
                Verdict v = analyze(g, c);
                d = route_name(v.route);
                return d == expect.at("route_n4").get<std::string>();
            });
        }
    }
    return cells;
}

}  // namespace braidlab
