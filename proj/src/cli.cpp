#include "modcycle/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "modcycle/campaigns.hpp"
#include "modcycle/connectivity.hpp"
#include "modcycle/json_io.hpp"

namespace modcycle {

namespace {

struct Settings {
    std::uint64_t budget = kDefaultNodeBudget;
    int threads = 0;
};

std::uint64_t parse_count(const std::string& text, const std::string& source) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || text[0] == '-')
        throw UsageError(source + ": expected a nonnegative integer, got '" + text + "'");
    return v;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Precedence: built-in default, then config file, then MODCYCLE_BUDGET,
// then command-line flags.
Settings resolve_settings(const std::string& config, std::optional<std::uint64_t> budget_flag,
                          std::optional<int> threads_flag) {
    Settings s;
    if (!config.empty()) {
        std::ifstream f(config);
        if (!f) throw UsageError("cannot open config file " + config);
        std::string line;
        for (int lineno = 1; std::getline(f, line); ++lineno) {
            line = trim(line.substr(0, line.find('#')));
            if (line.empty()) continue;
            auto eq = line.find('=');
            std::string where = config + ":" + std::to_string(lineno);
            if (eq == std::string::npos) throw UsageError(where + ": expected key=value");
            std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
            if (key == "budget")
                s.budget = parse_count(value, where);
            else if (key == "threads")
                s.threads = static_cast<int>(parse_count(value, where));
            else
                throw UsageError(where + ": unknown key '" + key + "'");
        }
    }
    if (const char* env = std::getenv("MODCYCLE_BUDGET")) s.budget = parse_count(env, "MODCYCLE_BUDGET");
    if (budget_flag) s.budget = *budget_flag;
    if (threads_flag) s.threads = *threads_flag;
    return s;
}

struct InputOptions {
    std::string file;
    bool adjacency = false;
};

std::vector<Graph> read_graphs(const InputOptions& opt, std::istream& in) {
    std::ifstream f;
    std::istream* src = &in;
    if (!opt.file.empty() && opt.file != "-") {
        f.open(opt.file, std::ios::binary);
        if (!f) throw UsageError("cannot open " + opt.file);
        src = &f;
    }
    if (opt.adjacency) return {from_adjacency_list(*src)};
    auto graphs = read_graph6_lines(*src);
    if (graphs.empty()) throw UsageError("no graph in input");
    return graphs;
}

// One input graph gives a bare value; several give an array.
Json collect(std::vector<Json> items) {
    if (items.size() == 1) return std::move(items[0]);
    Json arr = Json::array();
    for (auto& j : items) arr.push_back(std::move(j));
    return arr;
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

Json structure_of(const Graph& g, std::uint64_t budget) {
    Json j;
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["edges"] = g.size();
    j["min_degree"] = g.order() ? g.min_degree() : 0;
    j["two_vertices"] = two_vertex_set(g).to_vector();
    j["two_twins"] = two_twins(g);
    j["adjacent_two_vertices"] = adjacent_two_vertices(g);
    bool connected = is_connected(g);
    j["connected"] = connected;
    j["two_connected"] = is_2_connected(g);
    j["essentially_3_connected"] = connected ? Json(is_essentially_3_connected(g)) : Json(nullptr);
    j["planar"] = g.order() <= kPlanarityOrderLimit ? Json(is_planar(g)) : Json(nullptr);
    if (connected) {
        auto bd = block_decomposition(g);
        Json blocks = Json::array();
        for (std::size_t i = 0; i < bd.blocks.size(); ++i)
            blocks.push_back({{"vertices", bd.blocks[i].to_vector()}, {"end", static_cast<bool>(bd.end_block[i])}});
        j["blocks"] = blocks;
        j["cut_vertices"] = bd.cut_vertices.to_vector();
    }
    j["cycle_residues_mod3"] = cycle_length_residues(g, 3, budget).to_vector();
    j["cycle_residues_mod4"] = cycle_length_residues(g, 4, budget).to_vector();
    return j;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Cycles modulo k in graphs with few 2-vertices", "modcycle"};
    app.require_subcommand(1);

    std::string out_path, config;
    std::optional<std::uint64_t> budget_flag;
    std::optional<int> threads_flag;
    InputOptions input;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out,-o", out_path, "Write JSON here instead of stdout");
        sub->add_option("--budget", budget_flag, "Node budget per cycle or path search");
        sub->add_option("--config", config, "key=value file (budget, threads)");
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input.file, "graph6 file, one graph per line (default: stdin)");
        sub->add_flag("--adjacency", input.adjacency, "Input is an adjacency list: n, then 'u v' lines");
    };

    int max_n = 0;
    auto* gen = app.add_subcommand("gen-exceptional", "List exceptional graphs with build traces");
    gen->add_option("--max-n", max_n, "Largest order")->required();
    add_common(gen);

    auto* rec = app.add_subcommand("recognize", "Build trace or refutation for each input graph");
    add_input(rec);
    add_common(rec);

    int k = 3, r = 0;
    std::optional<int> through;
    auto* cyc = app.add_subcommand("cycle", "Find a cycle of length r mod k");
    cyc->add_option("--k", k, "Modulus")->required();
    cyc->add_option("--r", r, "Residue")->required();
    cyc->add_option("--through", through, "Only cycles through this vertex");
    add_input(cyc);
    add_common(cyc);

    std::optional<int> px, py;
    auto* res = app.add_subcommand("residues", "Cycle length residues, or (x, y)-path residues with --x/--y");
    res->add_option("--k", k, "Modulus")->required();
    auto* ox = res->add_option("--x", px, "Path start");
    auto* oy = res->add_option("--y", py, "Path end");
    ox->needs(oy);
    oy->needs(ox);
    add_input(res);
    add_common(res);

    bool with_observations = false;
    auto* der = app.add_subcommand("derive-special", "Derive the five special graphs");
    der->add_flag("--observations", with_observations, "Also check the special-graph properties");
    add_common(der);

    auto* chk = app.add_subcommand("check-structure", "Degree, connectivity, planarity and residue facts");
    add_input(chk);
    add_common(chk);

    std::string campaign;
    bool no_timing = false, inject = false;
    auto* ver = app.add_subcommand("verify", "Run an exhaustive campaign");
    ver->add_option("campaign", campaign, "mod3 | mod4 | corollaries | gauthier | planar | dean")
        ->required()
        ->check(CLI::IsMember({"mod3", "mod4", "corollaries", "gauthier", "planar", "dean"}));
    ver->add_option("--max-n", max_n, "Largest order")->required();
    ver->add_option("--k", k, "Modulus for dean");
    ver->add_option("--threads", threads_flag, "Worker threads (default: hardware)");
    ver->add_flag("--no-timing", no_timing, "Omit elapsed_ms for byte-identical reports");
    ver->add_flag("--inject-fault", inject, "Self-test: corrupt the oracle (mod3, mod4)");
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
    }

    Settings s = resolve_settings(config, budget_flag, threads_flag);

    if (*gen) {
        Json arr = Json::array();
        for (const auto& e : generate_exceptional(max_n))
            arr.push_back({{"graph6", to_graph6(e.graph)},
                           {"n", e.graph.order()},
                           {"key", e.key.hex()},
                           {"trace", to_json(e.trace)}});
        emit(arr, out_path, out);
        return kExitPass;
    }
    if (*rec) {
        std::vector<Json> items;
        bool all_accepted = true;
        for (const Graph& g : read_graphs(input, in)) {
            Recognition result = recognize_exceptional(g, s.budget);
            Json j = {{"graph6", to_graph6(g)}};
            if (auto* t = std::get_if<BuildTrace>(&result)) {
                j["exceptional"] = true;
                j["trace"] = to_json(*t);
            } else {
                all_accepted = false;
                j["exceptional"] = false;
                j["refutation"] = to_json(std::get<Refutation>(result));
            }
            items.push_back(j);
        }
        emit(collect(std::move(items)), out_path, out);
        return all_accepted ? kExitPass : kExitViolation;
    }
    if (*cyc) {
        std::vector<Json> items;
        for (const Graph& g : read_graphs(input, in)) {
            auto c = through ? find_cycle_mod_through(g, *through, k, r, s.budget) : find_cycle_mod(g, k, r, s.budget);
            items.push_back(c ? to_json(*c) : Json(nullptr));
        }
        emit(collect(std::move(items)), out_path, out);
        return kExitPass;
    }
    if (*res) {
        std::vector<Json> items;
        for (const Graph& g : read_graphs(input, in)) {
            if (px) {
                Json j = to_json(path_residues(g, *px, *py, k, s.budget));
                j["x"] = *px;
                j["y"] = *py;
                items.push_back(j);
            } else {
                items.push_back(to_json(cycle_length_residues(g, k, s.budget)));
            }
        }
        emit(collect(std::move(items)), out_path, out);
        return kExitPass;
    }
    if (*der) {
        SpecialCatalog cat = derive_special_catalog(s.budget);
        if (!with_observations) {
            emit(catalog_to_json(cat), out_path, out);
            return kExitPass;
        }
        ObservationReport obs = check_observation_special(cat, s.budget);
        Json viol = Json::array();
        for (const auto& v : obs.violations)
            viol.push_back({{"label", v.label}, {"clause", v.clause}, {"u", v.u}, {"v", v.v}, {"detail", v.detail}});
        emit({{"catalog", catalog_to_json(cat)}, {"observation_checks", obs.checks}, {"observation_violations", viol}},
             out_path, out);
        return obs.ok() ? kExitPass : kExitViolation;
    }
    if (*chk) {
        std::vector<Json> items;
        for (const Graph& g : read_graphs(input, in)) items.push_back(structure_of(g, s.budget));
        emit(collect(std::move(items)), out_path, out);
        return kExitPass;
    }

    CampaignOptions opt;
    opt.threads = s.threads;
    opt.budget = s.budget;
    opt.timing = !no_timing;
    if (campaign == "dean" && ver->get_option("--k")->count() == 0) throw UsageError("dean needs --k");
    if (inject && campaign != "mod3" && campaign != "mod4")
        throw UsageError("--inject-fault is available for mod3 and mod4 only");
    VerificationReport rep;
    if (campaign == "mod3") {
        ExceptionalOracle oracle;
        if (inject) {
            CanonicalForm k23 = canonical_form(reference_k23());
            std::uint64_t budget = s.budget;
            oracle = [k23, budget](const Graph& g) {
                if (canonical_form(g) == k23) return false;
                return std::holds_alternative<BuildTrace>(recognize_exceptional(g, budget, false));
            };
        }
        rep = verify_mod3_characterization(max_n, opt, oracle);
    } else if (campaign == "mod4") {
        std::optional<SpecialCatalog> cat;
        if (inject) {
            cat = derive_special_catalog(s.budget);
            cat->entries.erase(cat->entries.begin());
        }
        rep = verify_mod4_characterization(max_n, opt, cat);
    } else if (campaign == "corollaries") {
        rep = verify_corollaries(max_n, opt);
    } else if (campaign == "gauthier") {
        rep = verify_gauthier(max_n, opt);
    } else if (campaign == "planar") {
        rep = verify_nonplanar_mod4(max_n, opt);
    } else {
        rep = dean_scan(k, max_n, opt);
    }
    emit(to_json(rep), out_path, out);
    return rep.passed() ? kExitPass : kExitViolation;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
    try {
        return run_cli(argc, argv, out, err, in);
    } catch (const FormatError& e) {
        err << "error: malformed input at " << e.what() << "\n";
        return kExitUsage;
    } catch (const CampaignIndeterminate& e) {
        err << "indeterminate: " << e.what() << "\n";
        return kExitIndeterminate;
    } catch (const Indeterminate& e) {
        err << "indeterminate: " << e.what() << "\n";
        return kExitIndeterminate;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DerivationError& e) {
        err << "derivation failed: " << e.what() << "\n";
        return kExitViolation;
    }
}

}  // namespace modcycle
