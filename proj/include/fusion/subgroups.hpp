#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusion/group.hpp"
#include "fusion/ring.hpp"
#include "fusion/subobject.hpp"

namespace fusion {

// Restriction of representations along a quantum subgroup H of G: each
// source label goes to a decomposition over target labels.
using BranchingRule = std::function<Decomposition(std::string const&)>;

struct RestrictionData {
  std::string name;
  FusionRing source;
  FusionRing target;
  BranchingRule map;

  // map(label), normalized in the target ring. Throws UnknownLabel when the
  // rule mentions a label the target does not have.
  Decomposition restrict(std::string const& label) const;
};

// Tabulated branching for an explicit source. Throws MalformedInput when a
// source label is missing or a label is unknown.
RestrictionData table_restriction(std::string name, FusionRing source,
                                  FusionRing target,
                                  std::map<std::string, Decomposition> table);

// SU(2) -> S^1: V_n -> z^-n + z^(-n+2) + ... + z^n.
RestrictionData su2_weight_restriction();
// SU(2) -> Z/2 (its center): V_n -> (n+1) g^(n mod 2).
RestrictionData su2_parity_restriction();
// G -> G.
RestrictionData identity_restriction(FusionRing ring);
// G -> trivial group: tau -> dim(tau) copies of the unit.
RestrictionData trivial_restriction(FusionRing ring);

// Built-in rule names accepted by restriction files: su2_weights,
// su2_parity, identity, trivial.
RestrictionData named_restriction(std::string const& rule, FusionRing source);

// { "source": ref, "target": ref, "map": [{"from": l, "to": [{"label": l,
// "n": k}...]}...] } or { "source": ref, "rule": name }. A ref is a ring file
// (relative to base) or a catalog name. Throws MalformedFile.
RestrictionData restriction_from_json(nlohmann::json const& doc,
                                      std::filesystem::path const& base = {});
RestrictionData load_restriction(std::filesystem::path const& path);

struct RestrictionViolation {
  // unit, dimension, conjugation, multiplicativity, target
  std::string invariant;
  std::vector<std::string> witness;
  std::string detail;
};

struct RestrictionReport {
  std::vector<RestrictionViolation> violations;
  std::optional<int> checked_depth;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

RestrictionReport validate_restriction(RestrictionData const& r, int depth = 6);

struct NormalityResult {
  bool normal = true;
  std::optional<std::string> witness;
  // Unit multiplicity and dimension of the witness.
  Natural unit_multiplicity;
  Natural dim;
  // Set for generated sources: the answer holds up to this depth.
  std::optional<int> depth;
};

// Normal iff the target unit occurs 0 or dim(tau) times in every restriction.
// Throws InvalidRestriction when r does not validate.
NormalityResult is_normal(RestrictionData const& r, int depth = 6);

struct CentralSubgroupResult {
  bool central = true;
  // tau -> lambda_tau over the explored source basis.
  std::vector<std::pair<std::string, std::string>> assignment;
  std::optional<std::string> witness;
  std::string reason;
  std::optional<int> depth;
};

// Central iff every restriction is dim(tau) copies of one grouplike.
CentralSubgroupResult is_central_subgroup(RestrictionData const& r, int depth = 6);

// Sigma_N = {tau : restriction is dim(tau) copies of the unit}, on
// basis = r.source.truncate(depth). Throws InvalidRestriction when this is
// not a subobject.
Subobject trivial_restriction_subobject(RestrictionData const& r,
                                        Truncation const& basis);

// Group of dimension-1 basis elements. Generated rings are scanned up to
// depth; throws DepthExceeded if a product of grouplikes leaves the explored
// basis and InternalInconsistency if one is not a singleton.
GroupTable grouplikes(FusionRing const& ring, int depth = 6);

}  // namespace fusion
