#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "braidlab/config_space.hpp"
#include "braidlab/error.hpp"
#include "braidlab/pipeline.hpp"

using namespace braidlab;

namespace {

enum Exit { kOk = 0, kUsage = 1, kOutOfScope = 2, kBudget = 3, kInvariant = 4 };

// "name", "name*3", "5" or "5*-1", comma separated, summed over duals
Class1 parse_class(const Presentation& p, const std::string& text) {
    Class1 c(p.generator_count(), 0);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        long coef = 1;
        auto star = item.rfind('*');
        if (star != std::string::npos) {
            coef = std::stol(item.substr(star + 1));
            item = item.substr(0, star);
        }
        int idx = -1;
        for (int i = 0; i < p.generator_count(); ++i)
            if (p.generators[i] == item) idx = i;
        if (idx < 0) {
            try {
                size_t pos = 0;
                idx = std::stoi(item, &pos);
                if (pos != item.size()) idx = -1;
            } catch (const std::exception&) {
                idx = -1;
            }
        }
        if (idx < 0 || idx >= p.generator_count()) throw PreconditionError("unknown generator '" + item + "'");
        c[idx] += coef;
    }
    return c;
}

Presentation scr_of(const Graph& g, int n) {
    auto pr = prepare(g, n, SpanningMode::Cactus);
    MorseComplex mc(pr.spanning, n);
    return build_scr(mc).scr;
}

void print_json(const nlohmann::json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // write next to the target, then rename, so readers never see half a file
    std::string tmp = out + ".tmp";
    {
        std::ofstream f(tmp);
        if (!f) throw PreconditionError("cannot write " + out);
        f << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Braid groups of graphs: presentations, RAAG constructions and Massey certificates"};
    app.require_subcommand(1);

    std::string graph_path, out_path, cert_path, alpha, beta, gamma, corpus_dir = BRAIDLAB_DATA_DIR "/corpus";
    int n = 4, k = 1;
    bool no_oracle = false, raw = false, scr = false, raag = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "Run the full route and print the verdict");
    analyze_cmd->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    analyze_cmd->add_option("-n", n, "braid index");
    analyze_cmd->add_option("--json", out_path, "write the verdict here");
    analyze_cmd->add_flag("--no-oracle", no_oracle, "skip the cubical homology comparison");

    auto* present_cmd = app.add_subcommand("present", "Print a presentation of B_n");
    present_cmd->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    present_cmd->add_option("-n", n, "braid index");
    auto* kind = present_cmd->add_option_group("kind");
    kind->add_flag("--raw", raw, "Morse presentation before simplification");
    kind->add_flag("--scr", scr, "commutator-related presentation (default)");
    kind->add_flag("--raag", raag, "right-angled Artin presentation (n = 4, no nuclei)");
    kind->require_option(0, 1);

    auto* homology_cmd = app.add_subcommand("homology", "Integral homology of UD_n in one degree");
    homology_cmd->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    homology_cmd->add_option("-n", n, "braid index");
    homology_cmd->add_option("-k", k, "degree");

    auto* massey_cmd = app.add_subcommand("massey", "Decide a triple Massey product on the reduced presentation");
    massey_cmd->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
    massey_cmd->add_option("-n", n, "braid index");
    massey_cmd->add_option("--alpha", alpha)->required();
    massey_cmd->add_option("--beta", beta)->required();
    massey_cmd->add_option("--gamma", gamma)->required();
    massey_cmd->add_option("--json", out_path, "write the certificate here");

    auto* detect_cmd = app.add_subcommand("detect", "List the nuclei contained in a graph");
    detect_cmd->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);

    auto* verify_cmd = app.add_subcommand("verify", "Re-check a stored certificate or verdict");
    verify_cmd->add_option("certificate", cert_path)->required()->check(CLI::ExistingFile);

    auto* regress_cmd = app.add_subcommand("regress", "Run the bundled corpus and print a pass/fail matrix");
    regress_cmd->add_option("dir", corpus_dir)->check(CLI::ExistingDirectory);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    try {
        RunConfig cfg = RunConfig::from_env();
        cfg.n = n;
        cfg.oracle = !no_oracle;

        if (*analyze_cmd) {
            Verdict v = analyze(load_graph(graph_path), cfg);
            print_json(v.to_json(), out_path);
            if (!out_path.empty()) std::cout << route_name(v.route) << "\n";
            return v.route == Route::OutOfScope ? kOutOfScope : kOk;
        }
        if (*present_cmd) {
            Graph g = load_graph(graph_path);
            if (raag) {
                if (!detect_nuclei(g).empty()) throw OutOfScope("graph contains a nucleus; B_4 is not a RAAG");
                auto pr = prepare(g, n, SpanningMode::LinearCactus);
                MorseComplex mc(pr.spanning, n);
                std::cout << format_presentation(build_raag(mc, build_scr(mc)).group);
            } else if (raw) {
                auto pr = prepare(g, n, is_cactus(g) ? SpanningMode::Cactus : SpanningMode::General);
                MorseComplex mc(pr.spanning, n);
                std::cout << format_presentation(mc.raw_presentation());
            } else {
                std::cout << format_presentation(scr_of(g, n));
            }
            return kOk;
        }
        if (*homology_cmd) {
            Graph g = load_graph(graph_path);
            auto h = homology_in_degree(subdivide_for(g, n).subdivided, n, k, CellBudget{cfg.cell_budget});
            std::cout << "H_" << k << " = Z^" << h.betti;
            for (const auto& t : h.torsion) std::cout << " + Z/" << t;
            std::cout << "\n";
            return kOk;
        }
        if (*massey_cmd) {
            Presentation p = scr_of(load_graph(graph_path), n);
            auto cert = massey_nontrivial(p, parse_class(p, alpha), parse_class(p, beta), parse_class(p, gamma));
            print_json(to_json(cert), out_path);
            if (!out_path.empty()) std::cout << (cert.nontrivial() ? "nontrivial" : "contains zero") << "\n";
            return kOk;
        }
        if (*detect_cmd) {
            Graph g = load_graph(graph_path);
            auto found = detect_nuclei(g, SearchBudget{cfg.search_budget});
            std::cout << "cactus: " << (is_cactus(g) ? "yes" : "no") << "\nnuclei:";
            for (auto x : found) std::cout << " " << nucleus_name(x);
            std::cout << (found.empty() ? " none\n" : "\n");
            return kOk;
        }
        if (*verify_cmd) {
            std::ifstream in(cert_path);
            nlohmann::json j = nlohmann::json::parse(in);
            if (j.contains("certificate")) j = j.at("certificate");
            MasseyCertificate cert = certificate_from_json(j);
            const bool ok = revalidate(cert);
            std::cout << (ok ? "consistent" : "INCONSISTENT") << ": stored claim is that rho "
                      << (cert.member ? "lies in" : "escapes") << " the indeterminacy lattice\n";
            return ok ? kOk : kInvariant;
        }
        if (*regress_cmd) {
            auto cells = corpus_regression(corpus_dir, cfg);
            bool all = true;
            for (const auto& c : cells) {
                all = all && c.pass;
                std::printf("%-14s %-12s %-4s %7.3fs  %s\n", c.graph.c_str(), c.check.c_str(), c.pass ? "ok" : "FAIL",
                            c.seconds, c.detail.c_str());
            }
            return all ? kOk : kInvariant;
        }
    } catch (const OutOfScope& e) {
        std::cerr << "out of scope: " << e.what() << "\n";
        return kOutOfScope;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant failed: " << e.what() << "\n";
        return kInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}
