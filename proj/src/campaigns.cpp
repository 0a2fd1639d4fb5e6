#include "modcycle/campaigns.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "modcycle/connectivity.hpp"
#include "modcycle/enumerate.hpp"

namespace modcycle {

namespace {

struct Outcome {
    bool member = false;
    std::optional<std::string> violation;
};

using Check = std::function<Outcome(const Graph&)>;
using ClassAt = std::function<ClassConstraints(int n)>;

struct Listed {
    CanonicalForm key;
    std::string graph6;
    std::string detail;
};

// Keeps the `cap` smallest entries by key.
void keep_smallest(std::vector<Listed>& list, std::size_t cap) {
    std::sort(list.begin(), list.end(), [](const Listed& a, const Listed& b) { return a.key < b.key; });
    if (list.size() > cap) list.resize(cap);
}

struct Tally {
    std::vector<OrderBreakdown> per_order;
    std::vector<Listed> violations, members;
    std::uint64_t violations_total = 0, members_total = 0;

    void add(std::vector<Listed>& list, Listed item) {
        list.push_back(std::move(item));
        if (list.size() >= 4 * kViolationCap) keep_smallest(list, kViolationCap);
    }
};

struct StopWorker {};

struct CampaignSpec {
    std::string name;
    nlohmann::ordered_json parameters;
    std::string member_definition;
    int max_n;
    ClassAt constraints;
    Check check;
};

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

void check_order(int max_n) {
    if (max_n < 1 || max_n > kCampaignOrderLimit)
        throw UsageError("max_n must be in [1, " + std::to_string(kCampaignOrderLimit) + "]");
}

VerificationReport run(CampaignSpec spec, const CampaignOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    int threads = resolve_threads(opt.threads);
    std::vector<Tally> tallies(static_cast<std::size_t>(threads));
    std::atomic<bool> stop{false};
    std::mutex error_mutex;
    std::optional<CampaignIndeterminate> error;

    auto worker = [&](int part) {
        Tally& t = tallies[static_cast<std::size_t>(part)];
        for (int n = 1; n <= spec.max_n; ++n) t.per_order.push_back({n, 0, 0, 0});
        try {
            for (int n = 1; n <= spec.max_n; ++n) {
                OrderBreakdown& row = t.per_order[static_cast<std::size_t>(n - 1)];
                enumerate_partition(spec.constraints(n), part, threads, [&](const Graph& g, const CanonicalForm& key) {
                    if (stop.load(std::memory_order_relaxed)) throw StopWorker{};
                    ++row.examined;
                    Outcome out;
                    try {
                        out = spec.check(g);
                    } catch (const Indeterminate& e) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error.emplace(e, to_graph6(g));
                        stop = true;
                        throw StopWorker{};
                    }
                    if (out.member) {
                        ++row.members;
                        ++t.members_total;
                        t.add(t.members, {key, to_graph6(g), {}});
                    }
                    if (out.violation) {
                        ++row.violations;
                        ++t.violations_total;
                        t.add(t.violations, {key, to_graph6(g), *out.violation});
                    }
                });
            }
        } catch (const StopWorker&) {
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int p = 0; p < threads; ++p) pool.emplace_back(worker, p);
        for (auto& th : pool) th.join();
    }
    if (error) throw *error;

    VerificationReport rep;
    rep.campaign = spec.name;
    rep.parameters = std::move(spec.parameters);
    rep.parameters["threads"] = threads;
    rep.parameters["budget"] = opt.budget;
    rep.member_definition = spec.member_definition;
    std::vector<Listed> violations, members;
    for (int n = 1; n <= spec.max_n; ++n) rep.per_order.push_back({n, 0, 0, 0});
    for (Tally& t : tallies) {
        for (std::size_t i = 0; i < t.per_order.size(); ++i) {
            rep.per_order[i].examined += t.per_order[i].examined;
            rep.per_order[i].members += t.per_order[i].members;
            rep.per_order[i].violations += t.per_order[i].violations;
        }
        rep.violations_total += t.violations_total;
        rep.members += t.members_total;
        violations.insert(violations.end(), t.violations.begin(), t.violations.end());
        members.insert(members.end(), t.members.begin(), t.members.end());
    }
    for (const auto& row : rep.per_order) rep.graphs_examined += row.examined;
    keep_smallest(violations, kViolationCap);
    keep_smallest(members, kViolationCap);
    rep.violations_truncated = rep.violations_total > violations.size();
    rep.members_truncated = rep.members > members.size();
    for (auto& v : violations) rep.violations.push_back({v.key, v.graph6, v.detail});
    for (auto& m : members) rep.member_graph6.push_back(m.graph6);
    if (opt.timing)
        rep.elapsed_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return rep;
}

nlohmann::ordered_json class_echo(const ClassConstraints& c) {
    nlohmann::ordered_json j;
    j["min_degree"] = c.effective_min_degree();
    j["max_two_vertices"] = c.max_two_vertices;
    j["connected"] = c.connected;
    return j;
}

std::string cycle_text(const CycleCertificate& c) {
    std::string s;
    for (int v : c.vertices) s += (s.empty() ? "" : " ") + std::to_string(v);
    return "cycle of length " + std::to_string(c.length()) + ": " + s;
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["campaign"] = r.campaign;
    j["parameters"] = r.parameters;
    j["verdict"] = r.passed() ? "pass" : "fail";
    j["graphs_examined"] = r.graphs_examined;
    j["member_definition"] = r.member_definition;
    j["members"] = r.members;
    j["member_graph6"] = r.member_graph6;
    j["members_truncated"] = r.members_truncated;
    j["violations_total"] = r.violations_total;
    j["violations_truncated"] = r.violations_truncated;
    auto& vs = j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : r.violations) vs.push_back({{"graph6", v.graph6}, {"key", v.key.hex()}, {"detail", v.detail}});
    auto& po = j["per_order"] = nlohmann::ordered_json::array();
    for (const auto& row : r.per_order)
        po.push_back({{"n", row.n}, {"examined", row.examined}, {"members", row.members}, {"violations", row.violations}});
    if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
    return j;
}

VerificationReport verify_mod3_characterization(int max_n, const CampaignOptions& opt, ExceptionalOracle oracle) {
    check_order(max_n);
    std::uint64_t budget = opt.budget;
    if (!oracle)
        oracle = [budget](const Graph& g) {
            return std::holds_alternative<BuildTrace>(recognize_exceptional(g, budget, false));
        };
    ClassAt at = [](int n) { return ClassConstraints{n, 2, 3, true, std::nullopt}; };
    nlohmann::ordered_json params = {{"max_n", max_n}};
    params.update(class_echo(at(max_n)));
    Check check = [budget, oracle](const Graph& g) {
        Outcome out;
        auto cycle = find_cycle_mod(g, 3, 0, budget);
        bool accepted = oracle(g);
        out.member = !cycle;
        if (cycle && accepted) out.violation = "recognized as exceptional but has a " + cycle_text(*cycle);
        if (!cycle && !accepted) out.violation = "no (0 mod 3)-cycle but not recognized as exceptional";
        return out;
    };
    return run({"mod3", std::move(params), "no (0 mod 3)-cycle", max_n, at, check}, opt);
}

VerificationReport verify_mod4_characterization(int max_n, const CampaignOptions& opt,
                                                std::optional<SpecialCatalog> catalog) {
    check_order(max_n);
    std::uint64_t budget = opt.budget;
    if (!catalog) catalog = derive_special_catalog(budget);
    ClassAt at = [](int n) { return ClassConstraints{n, 2, 3, true, std::nullopt}; };
    nlohmann::ordered_json params = {{"max_n", max_n}};
    params.update(class_echo(at(max_n)));
    params["catalog_size"] = catalog->entries.size();
    auto cat = std::make_shared<SpecialCatalog>(std::move(*catalog));
    Check check = [budget, cat](const Graph& g) {
        Outcome out;
        auto cycle = find_cycle_mod(g, 4, 0, budget);
        bool listed = cat->contains(canonical_form(g));
        out.member = !cycle;
        if (cycle && listed) out.violation = "in the special catalog but has a " + cycle_text(*cycle);
        if (!cycle && !listed) out.violation = "no (0 mod 4)-cycle but not in the special catalog";
        return out;
    };
    return run({"mod4", std::move(params), "no (0 mod 4)-cycle", max_n, at, check}, opt);
}

VerificationReport verify_corollaries(int max_n, const CampaignOptions& opt) {
    check_order(max_n);
    std::uint64_t budget = opt.budget;
    ClassAt at = [](int n) { return ClassConstraints{n, 2, 2, true, std::nullopt}; };
    nlohmann::ordered_json params = {{"max_n", max_n}};
    params.update(class_echo(at(max_n)));
    Check check = [budget](const Graph& g) {
        Outcome out;
        bool c3 = find_cycle_mod(g, 3, 0, budget).has_value();
        bool c4 = find_cycle_mod(g, 4, 0, budget).has_value();
        out.member = !c3 || !c4;
        if (!c3) out.violation = "no (0 mod 3)-cycle";
        if (!c4) out.violation = out.violation ? *out.violation + " and no (0 mod 4)-cycle" : "no (0 mod 4)-cycle";
        return out;
    };
    return run({"corollaries", std::move(params), "lacks a (0 mod 3)- or a (0 mod 4)-cycle", max_n, at, check}, opt);
}

VerificationReport verify_gauthier(int max_n, const CampaignOptions& opt) {
    check_order(max_n);
    std::uint64_t budget = opt.budget;
    ClassAt at = [](int n) { return ClassConstraints{n, 0, -1, true, std::nullopt}; };
    nlohmann::ordered_json params = {{"max_n", max_n}};
    params.update(class_echo(at(max_n)));
    params["filter"] = "2-connected";
    Check check = [budget](const Graph& g) {
        Outcome out;
        if (!is_2_connected(g) || find_cycle_mod(g, 3, 0, budget)) return out;
        out.member = true;
        if (two_twins(g).empty() && adjacent_two_vertices(g).empty())
            out.violation = "no (0 mod 3)-cycle, no 2-twins and no adjacent 2-vertices";
        return out;
    };
    return run({"gauthier", std::move(params), "2-connected without a (0 mod 3)-cycle", max_n, at, check}, opt);
}

VerificationReport verify_nonplanar_mod4(int max_n, const CampaignOptions& opt) {
    check_order(max_n);
    std::uint64_t budget = opt.budget;
    ClassAt at = [](int n) { return ClassConstraints{n, 0, -1, true, std::nullopt}; };
    nlohmann::ordered_json params = {{"max_n", max_n}};
    params.update(class_echo(at(max_n)));
    Check check = [budget](const Graph& g) {
        Outcome out;
        if (find_cycle_mod(g, 4, 0, budget)) return out;
        out.member = true;
        if (!is_planar(g)) out.violation = "no (0 mod 4)-cycle but not planar";
        return out;
    };
    return run({"planar", std::move(params), "no (0 mod 4)-cycle", max_n, at, check}, opt);
}

VerificationReport dean_scan(int k, int max_n, const CampaignOptions& opt) {
    check_order(max_n);
    if (k < 3 || k > 6) throw UsageError("k must be in [3, 6]");
    std::uint64_t budget = opt.budget;
    ClassAt at = [k](int n) { return ClassConstraints{n, 0, -1, true, k}; };
    nlohmann::ordered_json params = {{"k", k}, {"max_n", max_n}};
    params.update(class_echo(at(max_n)));
    Check check = [budget, k](const Graph& g) {
        Outcome out;
        if (find_cycle_mod(g, k, 0, budget)) return out;
        out.member = true;
        out.violation = "min degree >= " + std::to_string(k) + " but no (0 mod " + std::to_string(k) + ")-cycle";
        return out;
    };
    return run({"dean", std::move(params), "no (0 mod k)-cycle", max_n, at, check}, opt);
}

}  // namespace modcycle
