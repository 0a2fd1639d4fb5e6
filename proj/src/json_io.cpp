#include "modcycle/json_io.hpp"

namespace modcycle {

Json to_json(const CycleCertificate& c) { return {{"k", c.k}, {"r", c.r}, {"vertices", c.vertices}}; }

Json to_json(const BuildTrace& t) {
    Json steps = Json::array();
    for (const BuildStep& s : t.steps) {
        Json step = {{"op", std::string(1, s.op)}, {"u", s.u}};
        if (s.op != 'C') step["v"] = s.v;
        steps.push_back(step);
    }
    Json j = {{"root", t.root}, {"steps", steps}};
    if (t.labeling) j["labeling"] = *t.labeling;
    return j;
}

BuildTrace trace_from_json(const Json& j) {
    try {
        BuildTrace t;
        t.root = j.at("root").get<int>();
        for (const Json& s : j.at("steps")) {
            std::string op = s.at("op").get<std::string>();
            if (op != "P" && op != "C" && op != "F") throw FormatError(0, "unknown trace operation " + op);
            BuildStep step{op[0], s.at("u").get<int>(), -1};
            if (op != "C") step.v = s.at("v").get<int>();
            t.steps.push_back(step);
        }
        if (j.contains("labeling")) t.labeling = j.at("labeling").get<std::vector<int>>();
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(0, std::string("malformed trace: ") + e.what());
    }
}

Json to_json(const Refutation& r) {
    Json j = {{"reason", to_string(r.reason)}, {"detail", r.detail}};
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    return j;
}

Json to_json(const ResidueSet& s) { return {{"k", s.modulus()}, {"residues", s.to_vector()}}; }

Json to_json(const DisjointPaths& p) { return {{"count", p.count}, {"paths", p.paths}}; }

Json catalog_to_json(const SpecialCatalog& cat) {
    Json arr = Json::array();
    for (const CatalogEntry& e : cat.entries)
        arr.push_back({{"label", e.label}, {"graph6", to_graph6(e.graph)}, {"n", e.graph.order()}, {"edges", e.graph.size()}});
    return arr;
}

SpecialCatalog catalog_from_json(const Json& j) {
    SpecialCatalog cat;
    try {
        for (const Json& e : j) {
            CanonicalForm key = canonical_form(from_graph6(e.at("graph6").get<std::string>()));
            cat.entries.push_back({e.at("label").get<std::string>(), key, key.graph()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(0, std::string("malformed catalog: ") + e.what());
    }
    return cat;
}

}  // namespace modcycle
