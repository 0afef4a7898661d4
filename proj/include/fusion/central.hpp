#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusion/group.hpp"
#include "fusion/ring.hpp"
#include "fusion/subobject.hpp"

namespace fusion {

class UnionFind;

// Partition of the explored basis. Blocks are sorted and ordered by their
// first member.
struct CosetPartition {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of;
  std::size_t identity_block = 0;

  std::size_t size() const { return blocks.size(); }
  friend bool operator==(CosetPartition const&, CosetPartition const&) = default;
};

// Reads the explored part of a union-find into a partition.
CosetPartition partition_from(UnionFind& sets, Truncation const& basis);

// Fixed point of "all constituents of a x b are merged" over explored pairs
// a, b. Frontier constituents take part in merging under their labels.
CosetPartition merge_closure(Truncation const& basis);

// The literal chain relation: X ~ Y when both occur in some z1 x ... x zn
// with n <= max_len, transitively closed. Explicit rings only; enumerates
// every reachable word support. Throws SearchBudgetExceeded.
CosetPartition chain_oracle(Truncation const& basis, int max_len);

// The chain class of the unit, E_z.
Subobject trivial_class(Truncation const& basis);

// Which frontier labels count as members of sigma, indexed from explored().
// For the unit's chain class a frontier label is graded through the merge
// closure: it belongs when the classes of the factors producing it multiply
// to the unit's class. For any other sigma it belongs when it is a
// constituent of a product of two members. Empty for explicit rings.
std::vector<bool> frontier_members(Truncation const& basis, Subobject const& sigma);

// a ~ b iff supp(a x b̄) meets sigma, transitively closed. On generated
// truncations sigma is extended by frontier_members. Throws NotASubobject.
CosetPartition sigma_cosets(Truncation const& basis, Subobject const& sigma);

struct CentralityWitness {
  std::size_t a;
  std::size_t b;
  // Distinct cosets reached: by the constituents of a x b, or by two
  // representative pairs of the same pair of cosets.
  std::vector<std::size_t> blocks;
  std::string reason;
};

struct CentralityResult {
  bool central = false;
  CosetPartition cosets;
  // products[B1][B2]: the coset containing the product; nullopt when no
  // constituent of any representative product lies in the explored basis.
  std::vector<std::vector<std::optional<std::size_t>>> products;
  // Set when central and every product is resolved.
  std::optional<GroupTable> group;
  std::optional<CentralityWitness> witness;
};

// Sigma is central when every product of coset representatives lands in a
// single coset, the same one for all representatives.
CentralityResult is_central_subobject(Truncation const& basis,
                                      Subobject const& sigma);

// Every subobject, from closures of single elements and pairs joined to a
// fixed point. Explicit rings only; throws SearchBudgetExceeded.
std::vector<Subobject> enumerate_subobjects(Truncation const& basis);
// Central ones, sorted by size then members.
std::vector<Subobject> enumerate_central_subobjects(Truncation const& basis);

// The center subobject. Equal to E_z; on explicit rings this is also checked
// against the intersection of all central subobjects.
Subobject center_subobject(Truncation const& basis);

std::string block_name(Truncation const& basis, CosetPartition const& p,
                       std::size_t block);

// Generator classes of a central quotient with the power and commutation
// relations visible in its (possibly partial) table.
Presentation quotient_presentation(Truncation const& basis,
                                   CentralityResult const& quotient,
                                   bool* abelian = nullptr);

struct ChainGroup {
  Truncation basis;
  Subobject trivial_class;
  CentralityResult quotient;
  std::optional<Presentation> presentation;
  GroupDescriptor descriptor;
};

// Chain group at one truncation. Flag is exact for explicit rings and
// stable_at_depth for generated ones; use chain_group(ring, depth) for the
// depth comparison.
ChainGroup chain_group(Truncation const& basis,
                       std::span<const NamedGroup> candidates = {});

// Chain group of the ring. Generated rings are computed at depth and
// depth + 1 and flagged stable only when the presentations agree.
ChainGroup chain_group(FusionRing const& ring, int depth = 6,
                       std::span<const NamedGroup> candidates = {});

}  // namespace fusion
