#include <doctest.h>

#include "modcycle/campaigns.hpp"
#include "modcycle/connectivity.hpp"

using namespace modcycle;

namespace {

CampaignOptions quiet(int threads = 1) {
    CampaignOptions o;
    o.threads = threads;
    o.timing = false;
    return o;
}

std::uint64_t class_total(int max_n, int min_degree, int max_two, bool connected, std::optional<int> global = {}) {
    std::uint64_t total = 0;
    for (int n = 1; n <= max_n; ++n) total += count_class({n, min_degree, max_two, connected, global});
    return total;
}

}  // namespace

TEST_SUITE("campaigns") {
    TEST_CASE("mod3 characterization up to 8 vertices") {
        auto rep = verify_mod3_characterization(8, quiet());
        CHECK(rep.passed());
        CHECK(rep.graphs_examined == class_total(8, 2, 3, true));
        CHECK(rep.members == 3);
        CHECK(rep.member_graph6 == std::vector<std::string>{"DFw", "FHQ[o", "G?KueW"});
        CHECK(rep.per_order.size() == 8);
        std::uint64_t sum = 0;
        for (const auto& o : rep.per_order) sum += o.examined;
        CHECK(sum == rep.graphs_examined);
        CHECK_FALSE(rep.elapsed_ms);
    }

    TEST_CASE("mod4 characterization up to 8 vertices") {
        auto rep = verify_mod4_characterization(8, quiet());
        CHECK(rep.passed());
        CHECK(rep.members == 5);
        CHECK(rep.graphs_examined == class_total(8, 2, 3, true));
    }

    TEST_CASE("other campaigns up to 8 vertices") {
        auto cor = verify_corollaries(8, quiet());
        CHECK(cor.passed());
        CHECK(cor.graphs_examined == class_total(8, 2, 2, true));

        auto gau = verify_gauthier(8, quiet());
        CHECK(gau.passed());
        CHECK(gau.members > 0);

        auto pl = verify_nonplanar_mod4(8, quiet());
        CHECK(pl.passed());
        CHECK(pl.graphs_examined == class_total(8, 0, -1, true));

        for (int k = 3; k <= 5; ++k) {
            auto dean = dean_scan(k, 8, quiet());
            CHECK(dean.passed());
            CHECK(dean.graphs_examined == class_total(8, 0, -1, true, k));
        }
        CHECK_THROWS_AS(dean_scan(2, 8, quiet()), UsageError);
        CHECK_THROWS_AS(dean_scan(7, 8, quiet()), UsageError);
        CHECK_THROWS_AS(verify_corollaries(11, quiet()), UsageError);
    }

    TEST_CASE("a wrong exceptional oracle is caught") {
        CanonicalForm k23 = canonical_form(named::complete_bipartite(2, 3));
        auto rep = verify_mod3_characterization(7, quiet(), [&](const Graph& g) {
            return canonical_form(g) != k23 && std::holds_alternative<BuildTrace>(recognize_exceptional(g));
        });
        CHECK_FALSE(rep.passed());
        CHECK(rep.violations_total == 1);
        REQUIRE(rep.violations.size() == 1);
        CHECK(rep.violations[0].graph6 == "DFw");
    }

    TEST_CASE("a missing catalog entry is caught") {
        SpecialCatalog cat = derive_special_catalog();
        cat.entries.erase(cat.entries.begin());
        auto rep = verify_mod4_characterization(8, quiet(), cat);
        CHECK_FALSE(rep.passed());
        CHECK(rep.violations_total == 1);
        CHECK(rep.violations[0].graph6 == "Bw");
    }

    TEST_CASE("reports are identical across runs and thread counts") {
        auto a = to_json(verify_mod3_characterization(8, quiet(1))).dump();
        auto b = to_json(verify_mod3_characterization(8, quiet(1))).dump();
        auto c = to_json(verify_mod3_characterization(8, quiet(3))).dump();
        auto strip = [](std::string s) {
            auto j = nlohmann::ordered_json::parse(s);
            j["parameters"].erase("threads");
            return j.dump();
        };
        CHECK(a == b);
        CHECK(strip(a) == strip(c));
    }

    TEST_CASE("report layout") {
        auto rep = verify_mod3_characterization(6, quiet());
        auto j = to_json(rep);
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
        CHECK(keys == std::vector<std::string>{"campaign", "parameters", "verdict", "graphs_examined",
                                               "member_definition", "members", "member_graph6",
                                               "members_truncated", "violations_total", "violations_truncated",
                                               "violations", "per_order"});
        CHECK(j["verdict"] == "pass");
        CHECK(to_json(verify_mod3_characterization(6, {1, kDefaultNodeBudget, true})).contains("elapsed_ms"));
    }

    TEST_CASE("budget exhaustion stops the campaign") {
        CampaignOptions o = quiet();
        o.budget = 3;
        CHECK_THROWS_AS(verify_corollaries(6, o), CampaignIndeterminate);
    }
}
