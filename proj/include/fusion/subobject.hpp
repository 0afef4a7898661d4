#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusion/ring.hpp"

namespace fusion {

// A set of explored basis indices containing the unit, closed under dual and
// under taking constituents of products. Members are sorted.
struct Subobject {
  std::vector<std::size_t> members;

  bool contains(std::size_t i) const;
  std::size_t size() const { return members.size(); }

  friend bool operator==(Subobject const&, Subobject const&) = default;
  friend auto operator<=>(Subobject const&, Subobject const&) = default;
};

// Returns a description of the first broken subobject invariant, or nullopt.
// Generated truncations check closure only against explored constituents.
std::optional<std::string> subobject_defect(Truncation const& basis,
                                            Subobject const& sigma);

// Throws NotASubobject when subobject_defect reports anything.
void require_subobject(Truncation const& basis, Subobject const& sigma);

// Builds a Subobject from labels; throws UnknownLabel or DepthExceeded for
// labels outside the explored basis. Does not check closure.
Subobject subobject_from_labels(Truncation const& basis,
                                std::span<const std::string> labels);

// Smallest subobject containing seed and the unit. Throws DepthExceeded when
// the closure of a generated ring leaves the explored basis.
Subobject generated_subobject(Truncation const& basis,
                              std::span<const std::size_t> seed);

}  // namespace fusion
