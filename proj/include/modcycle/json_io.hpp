#ifndef MODCYCLE_JSON_IO_HPP
#define MODCYCLE_JSON_IO_HPP

// JSON encodings of certificates, traces, refutations and the catalog.

#include <json.hpp>

#include "modcycle/connectivity.hpp"
#include "modcycle/cycles.hpp"
#include "modcycle/families.hpp"

namespace modcycle {

using Json = nlohmann::ordered_json;

/// {"k":..,"r":..,"vertices":[..]}
Json to_json(const CycleCertificate& c);

/// {"root":..,"steps":[{"op":"P"|"C"|"F","u":..,"v":..}],"labeling":[..]}
/// with "v" omitted for C and "labeling" omitted when absent.
Json to_json(const BuildTrace& t);

/// Inverse of to_json; throws FormatError on a malformed document.
BuildTrace trace_from_json(const Json& j);

Json to_json(const Refutation& r);
Json to_json(const ResidueSet& s);
Json to_json(const DisjointPaths& p);

/// [{"label":..,"graph6":..,"n":..,"edges":..}, ...]
Json catalog_to_json(const SpecialCatalog& cat);

/// Reads the array form back, recomputing keys from the graphs.
SpecialCatalog catalog_from_json(const Json& j);

}  // namespace modcycle

#endif
