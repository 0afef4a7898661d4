#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fusion {

// A finite group given by its multiplication table.
struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> mult;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;

  // Checks closure, associativity, identity and inverses, filling identity
  // and inverse. Throws NotAGroup naming the failing elements.
  static GroupTable from_mult(std::vector<std::string> names,
                              std::vector<std::vector<std::size_t>> mult);

  std::size_t order() const { return names.size(); }
  std::size_t operator()(std::size_t a, std::size_t b) const { return mult[a][b]; }
  std::size_t element_order(std::size_t g) const;
  bool is_abelian() const;
  // Elements reachable from gens by multiplication.
  std::vector<std::size_t> generated_by(std::span<const std::size_t> gens) const;
};

// Discovered structure of a group that is only known through a truncation.
struct Presentation {
  std::vector<std::string> generators;
  // orders[i] = n > 0 when generators[i]^n = e was found, 0 when no power
  // relation exists within the truncation.
  std::vector<std::uint64_t> orders;
  // Pairs of generator indices found to commute.
  std::vector<std::pair<std::size_t, std::size_t>> commuting;
  // Generators of the ring that collapsed onto another class, e.g.
  // "[v] = [u]^-1".
  std::vector<std::string> identifications;

  std::vector<std::string> relations() const;

  friend bool operator==(Presentation const&, Presentation const&) = default;
};

struct StabilityFlag {
  enum class Kind { Exact, StableAtDepth, UnstableAtDepth };
  Kind kind = Kind::Exact;
  int depth = 0;

  static StabilityFlag exact() { return {}; }
  static StabilityFlag stable_at(int k) { return {Kind::StableAtDepth, k}; }
  static StabilityFlag unstable_at(int k) { return {Kind::UnstableAtDepth, k}; }

  std::string str() const;
  friend bool operator==(StabilityFlag const&, StabilityFlag const&) = default;
};

struct GroupDescriptor {
  // nullopt means the group did not close within the truncation (reported
  // as infinite, qualified by flag).
  std::optional<std::uint64_t> order;
  bool is_abelian = true;
  // Invariant factors d1 | d2 | ...; present iff abelian and finite.
  std::optional<std::vector<std::uint64_t>> abelian_invariants;
  std::optional<std::uint64_t> exponent;
  std::optional<std::uint64_t> center_size;
  std::optional<Presentation> presentation;
  StabilityFlag flag;
  // "1", "Z", "Z/nZ", "Z/2Z x Z/2Z", a matched candidate name, or empty.
  std::string name;
  std::vector<std::string> isomorphic_to;
};

struct NamedGroup {
  std::string name;
  GroupTable table;
};

// Order, abelian flag, invariant factors (abelian case), exponent and center
// size, plus isomorphism tests against the candidates. Re-verifies the group
// axioms first.
GroupDescriptor identify_group(GroupTable const& table,
                               std::span<const NamedGroup> candidates = {});

// Names a presentation: no generators is trivial, one free generator is Z,
// one generator of order n is Z/nZ. Anything else is left unnamed.
GroupDescriptor identify_presentation(Presentation const& presentation,
                                      bool abelian, StabilityFlag flag);

// Invariant factors of a finite abelian group by counting element orders.
std::vector<std::uint64_t> abelian_invariants(GroupTable const& table);

// Backtracking search for an isomorphism from a to b; returns the element
// map when one exists.
std::optional<std::vector<std::size_t>> find_isomorphism(GroupTable const& a,
                                                         GroupTable const& b);

}  // namespace fusion
