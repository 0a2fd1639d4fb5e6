#ifndef MODCYCLE_CAMPAIGNS_HPP
#define MODCYCLE_CAMPAIGNS_HPP

// Exhaustive verification campaigns over enumerated graph classes.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "modcycle/cycles.hpp"
#include "modcycle/errors.hpp"
#include "modcycle/families.hpp"

namespace modcycle {

inline constexpr std::size_t kViolationCap = 100;
inline constexpr int kCampaignOrderLimit = 10;

struct CampaignOptions {
    int threads = 0;  // 0: hardware parallelism
    std::uint64_t budget = kDefaultNodeBudget;
    bool timing = true;  // false drops elapsed_ms so reports compare byte for byte
};

struct Violation {
    CanonicalForm key;
    std::string graph6;
    std::string detail;
};

struct OrderBreakdown {
    int n = 0;
    std::uint64_t examined = 0;
    std::uint64_t members = 0;
    std::uint64_t violations = 0;
};

/// Outcome of one campaign. `members` counts the graphs of interest, whose
/// meaning `member_definition` states (for example the graphs without a
/// (0 mod 3)-cycle); the first 100 by key are listed.
struct VerificationReport {
    std::string campaign;
    nlohmann::ordered_json parameters;
    std::uint64_t graphs_examined = 0;
    std::string member_definition;
    std::uint64_t members = 0;
    std::vector<std::string> member_graph6;
    bool members_truncated = false;
    std::vector<Violation> violations;  // sorted by key, at most 100
    std::uint64_t violations_total = 0;
    bool violations_truncated = false;
    std::vector<OrderBreakdown> per_order;
    std::optional<std::uint64_t> elapsed_ms;

    bool passed() const { return violations_total == 0; }
};

nlohmann::ordered_json to_json(const VerificationReport& r);

/// A cycle search exhausted its budget; the campaign stops. `graph6` names
/// the graph being checked.
class CampaignIndeterminate : public Indeterminate {
public:
    CampaignIndeterminate(const Indeterminate& cause, std::string graph6)
        : Indeterminate(cause.budget(), std::string(cause.what()) + " on " + graph6), graph6_(std::move(graph6)) {}

    const std::string& graph6() const { return graph6_; }

private:
    std::string graph6_;
};

/// Accepts exactly the exceptional graphs. Replaceable to inject faults.
using ExceptionalOracle = std::function<bool(const Graph&)>;

/// Connected graphs, min degree >= 2, |V2| <= 3, n <= max_n: a (0 mod 3)-cycle
/// exists exactly when the recognizer refutes.
VerificationReport verify_mod3_characterization(int max_n, const CampaignOptions& opt = {},
                                                ExceptionalOracle oracle = {});

/// Same class: no (0 mod 4)-cycle exactly for members of the catalog.
/// Without a catalog the derived one is used.
VerificationReport verify_mod4_characterization(int max_n, const CampaignOptions& opt = {},
                                                std::optional<SpecialCatalog> catalog = std::nullopt);

/// Connected, min degree >= 2, |V2| <= 2: cycles of length 0 mod 3 and 0 mod 4.
VerificationReport verify_corollaries(int max_n, const CampaignOptions& opt = {});

/// 2-connected graphs without a (0 mod 3)-cycle have 2-twins or two
/// adjacent 2-vertices.
VerificationReport verify_gauthier(int max_n, const CampaignOptions& opt = {});

/// Connected graphs without a (0 mod 4)-cycle are planar.
VerificationReport verify_nonplanar_mod4(int max_n, const CampaignOptions& opt = {});

/// Connected graphs with min degree >= k have a (0 mod k)-cycle; 3 <= k <= 6.
VerificationReport dean_scan(int k, int max_n, const CampaignOptions& opt = {});

}  // namespace modcycle

#endif
