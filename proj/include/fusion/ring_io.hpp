#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fusion/catalog.hpp"
#include "fusion/ring.hpp"

namespace fusion {

// Ring file schema:
//   { "basis": [{"label": s, "dim": n}...], "unit": s, "dual": {s: s...},
//     "fusion": [{"a": s, "b": s, "c": s, "n": n}...] }
// Numbers that do not fit in 64 bits are written as decimal strings. A
// generated ring is written as its explored basis at some depth with an
// extra "truncated_at" field; such files are export-only.

// Canonical form: basis in basis order, dual keys in basis order, fusion
// sorted by (a, b, c) basis index.
nlohmann::ordered_json ring_to_json(FusionRing const& ring, int depth = 6);
std::string canonical_ring_text(FusionRing const& ring, int depth = 6);

// Throws MalformedFile on schema errors (including MalformedRing problems)
// and, when validate is set, AxiomViolation.
FusionRing ring_from_json(nlohmann::json const& doc, std::string name,
                          bool validate = true);
FusionRing load_ring(std::filesystem::path const& path, bool validate = true);
void save_ring(FusionRing const& ring, std::filesystem::path const& path,
               int depth = 6);

// Group file: { "elements": [s...], "identity": s, "table": [[s...]...] }.
GroupPresentationInput group_from_json(nlohmann::json const& doc);
GroupPresentationInput load_group(std::filesystem::path const& path);

nlohmann::json read_json_file(std::filesystem::path const& path);
nlohmann::ordered_json natural_to_json(Natural const& n);
Natural natural_from_json(nlohmann::json const& v, std::string const& what);

}  // namespace fusion
