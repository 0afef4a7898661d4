#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fusion/group.hpp"
#include "fusion/ring.hpp"

namespace fusion {

// A finite group by multiplication table over labels.
struct GroupPresentationInput {
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> table;
  std::string identity;
};

// Checks the group axioms and returns the table in index form. Throws
// NotAGroup with the failing elements.
GroupTable group_table(GroupPresentationInput const& g);

// Group ring C*(G): basis = elements, all dims 1, dual = inverse, and
// g x h = {gh}.
FusionRing group_ring(GroupPresentationInput const& g, std::string name = "group");

// Representation ring given by irreducibles and fusion entries. The first
// irreducible is the unit; duals are read off from N_ab^unit. Throws
// AxiomViolation when the data is not a fusion ring.
FusionRing rep_ring_char_table(std::string name, std::vector<BasisElement> irreps,
                               std::vector<FusionEntry> const& fusion);

// V_n (dim n+1) with the Clebsch-Gordan rule. Also the fusion ring of
// SU_q(2) and B_u(Q).
FusionRing su2_ring();
// W_n (dim 2n+1), the integer-spin part of su2_ring. Also the fusion ring of
// SO_q(3) and A_aut(B, tau).
FusionRing so3_ring();
// Free unitary quantum group A_u(n): words over {u, v} with v = ū and the
// unit written "e". dim(u) = dim(v) = n.
FusionRing au_word_ring(unsigned n = 2);
// Group ring of Z (equivalently Rep(S^1)): labels z^k.
FusionRing integer_group_ring();

// Finite fixtures.
GroupPresentationInput cyclic_group(unsigned n);  // 1, g, g^2, ...
GroupPresentationInput klein_group();             // 1, a, b, ab
GroupPresentationInput s3_group();                // e, r, r^2, s, rs, r^2s
FusionRing rep_s3();                              // 1, sgn, rho
FusionRing rep_z4();                              // chi0 .. chi3
FusionRing trivial_ring();                        // 1

// Basis = pairs "(a,b)", dims and coefficients multiply. Explicit when both
// factors are explicit.
FusionRing direct_product(FusionRing const& r1, FusionRing const& r2);

// Alternating words in nontrivial irreducibles of the factors. Letters are
// written label#1 or label#2 and joined by '*'; labels containing one of
// "*#[]" are bracketed. The unit is "e".
FusionRing free_product(FusionRing const& r1, FusionRing const& r2);

// Resolves a ring name: su2, so3, au, au:N, zring, trivial, zN (cyclic group
// ring), klein, s3, rep_s3, rep_z4, group:FILE, repring:FILE, free:A+B,
// prod:A+B. Relative file paths are taken relative to base.
FusionRing catalog_ring(std::string const& name,
                        std::filesystem::path const& base = {});

// Nonabelian groups recognized by name in chain group reports.
std::vector<NamedGroup> named_groups();

// Names accepted by catalog_ring that need no argument.
std::vector<std::string> catalog_names();

}  // namespace fusion
