#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fusion/central.hpp"
#include "fusion/group.hpp"
#include "fusion/ring.hpp"

namespace fusion {

// A bijection of the explored basis fixing the unit and preserving duals,
// dimensions and every N_ab^c. These are fusion-level symmetries only: an
// upper bound for what a quantum group automorphism can induce.
struct RingAutomorphism {
  std::vector<std::size_t> perm;

  friend bool operator==(RingAutomorphism const&, RingAutomorphism const&) = default;
  friend auto operator<=>(RingAutomorphism const&, RingAutomorphism const&) = default;
};

struct AutomorphismList {
  Truncation basis;
  // Sorted by perm; the identity comes first.
  std::vector<RingAutomorphism> automorphisms;
  // exact for explicit rings; for generated rings stable when depth + 1
  // yields the same generator images.
  StabilityFlag flag;
};

// First broken invariant of perm on basis, or nullopt. On generated
// truncations N_ab^c is compared where a x b stays explored.
std::optional<std::string> automorphism_defect(Truncation const& basis,
                                               std::vector<std::size_t> const& perm);

// Explicit rings: complete list by backtracking. Generated rings: every
// permutation of the generators that extends along the breadth-first
// structure to an automorphism of the depth truncation. Throws
// SearchBudgetExceeded.
AutomorphismList automorphisms(FusionRing const& ring, int depth = 6);
std::vector<RingAutomorphism> automorphisms(Truncation const& basis);

struct ChainAction {
  // block_perm[B] = image block.
  std::vector<std::size_t> block_perm;
  // identity, inversion or other.
  std::string kind;
};

// Induced permutation of chain group blocks. chain.basis must be the
// truncation the automorphism was found on. Throws InternalInconsistency if
// a block is not mapped onto a single block.
ChainAction action_on_chain_group(ChainGroup const& chain,
                                  RingAutomorphism const& automorphism);

}  // namespace fusion
