#pragma once

#include <string>

#include <json.hpp>

#include "fusion/automorph.hpp"
#include "fusion/central.hpp"
#include "fusion/group.hpp"
#include "fusion/subgroups.hpp"
#include "fusion/validate.hpp"

namespace fusion {

// JSON payloads shared by every output format. Objects keep insertion order
// so that dumps are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(Presentation const& p);
// order, abelian, invariants, flag for finite abelian groups; nonabelian
// groups add exponent, center_size and name, and infinite ones carry
// "order": "infinite", name and presentation.
Json to_json(GroupDescriptor const& d);
Json to_json(GroupTable const& g);
Json to_json(ValidationReport const& r);
Json to_json(RestrictionReport const& r);
Json to_json(Truncation const& basis, Subobject const& s);
// List of cosets, each a list of labels.
Json to_json(Truncation const& basis, CosetPartition const& p);
Json to_json(Truncation const& basis, CentralityResult const& r);
// Label to label.
Json to_json(Truncation const& basis, RingAutomorphism const& a);

// Undirected graph on the explored basis: an edge joins the first
// constituent of a x b to each other one, clustered by chain class. The
// payload is embedded as a comment.
std::string merge_graph_dot(Truncation const& basis, CosetPartition const& p,
                            Json const& payload);

}  // namespace fusion
