#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusion/natural.hpp"

namespace fusion {

struct BasisElement {
  std::string label;
  Natural dim;
};

// One constituent c of a product a x b, carrying N_{ab}^c.
struct Term {
  std::string label;
  Natural mult;

  friend bool operator==(Term const&, Term const&) = default;
};

// Sparse decomposition of a tensor product. Multiplicities are positive and
// labels distinct, ordered by FusionRules::precedes.
using Decomposition = std::vector<Term>;

struct FusionEntry {
  std::string a;
  std::string b;
  std::string c;
  Natural n;
};

struct IndexedTerm {
  std::size_t index;
  Natural mult;

  friend bool operator==(IndexedTerm const&, IndexedTerm const&) = default;
};

// Label-level fusion data. Implementations are immutable and every method
// must be safe to call concurrently. Methods other than contains() may assume
// their arguments are valid canonical labels.
class FusionRules {
 public:
  virtual ~FusionRules() = default;

  virtual std::string name() const = 0;
  virtual std::string unit() const = 0;
  // Closed under dual. Breadth-first products with these define word depth.
  virtual std::vector<std::string> generators() const = 0;
  virtual bool contains(std::string const& label) const = 0;
  virtual std::string dual(std::string const& label) const = 0;
  virtual Natural dim(std::string const& label) const = 0;
  virtual Decomposition product(std::string const& a,
                                std::string const& b) const = 0;
  // Strict weak order used to sort decompositions.
  virtual bool precedes(std::string const& a, std::string const& b) const = 0;
};

class Truncation;

// A fusion ring: either an explicit finite table or a generated ring given
// by an exact product oracle on canonical labels. Cheap to copy; immutable.
class FusionRing {
 public:
  enum class Kind { Explicit, Generated };

  // Builds an explicit ring from table data. Throws MalformedRing on
  // duplicate or dangling labels, a missing dual, zero or duplicate
  // entries, or an uncovered pair (a, b). Axioms are not checked here; see
  // validate_ring.
  static FusionRing make_explicit(std::string name,
                                  std::vector<BasisElement> basis,
                                  std::string const& unit,
                                  std::map<std::string, std::string> const& dual,
                                  std::vector<FusionEntry> const& fusion);

  static FusionRing make_generated(std::shared_ptr<const FusionRules> rules);

  Kind kind() const { return table_ ? Kind::Explicit : Kind::Generated; }
  bool is_explicit() const { return kind() == Kind::Explicit; }

  std::string name() const { return rules_->name(); }
  std::string unit_label() const { return rules_->unit(); }
  std::vector<std::string> generators() const { return rules_->generators(); }
  bool contains(std::string const& label) const;

  // Label-level access; all throw UnknownLabel on non-canonical labels.
  std::string dual_label(std::string const& label) const;
  Natural dim_of(std::string const& label) const;
  Decomposition fuse(std::string const& a, std::string const& b) const;
  // Left-associated iterated product z1 x z2 x ... x zn.
  Decomposition fuse_word(std::span<const std::string> word) const;
  bool precedes(std::string const& a, std::string const& b) const {
    return rules_->precedes(a, b);
  }

  // Index-level access, explicit rings only (std::logic_error otherwise).
  std::size_t size() const;
  BasisElement const& element(std::size_t i) const;
  std::size_t unit() const;
  std::size_t dual(std::size_t i) const;
  std::span<const IndexedTerm> product(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> find(std::string const& label) const;
  // All nonzero N_{ab}^c, sorted by (a, b, c) index.
  std::vector<FusionEntry> entries() const;

  // Same fusion data with every dimension replaced by dims(label). No axiom
  // is re-checked.
  FusionRing with_dims(std::function<Natural(std::string const&)> dims) const;

  // Explicit: the whole ring (depth is ignored). Generated: every basis
  // element of word depth <= depth plus the labels their products reach.
  Truncation truncate(int depth) const;

  FusionRules const& rules() const { return *rules_; }
  std::shared_ptr<const FusionRules> const& rules_ptr() const { return rules_; }

  struct Table;

 private:
  FusionRing(std::shared_ptr<const FusionRules> rules,
             std::shared_ptr<const Table> table)
      : rules_(std::move(rules)), table_(std::move(table)) {}

  Table const& table() const;

  std::shared_ptr<const FusionRules> rules_;
  std::shared_ptr<const Table> table_;
};

// Finite indexed view of a ring. Indices [0, explored()) are the explored
// basis in basis order (input order for explicit rings, breadth-first
// discovery order otherwise); indices [explored(), size()) are frontier
// labels reached by products of explored elements, together with their
// duals. Products are tabulated for explored pairs only.
class Truncation {
 public:
  FusionRing const& ring() const;

  std::size_t explored() const;
  std::size_t size() const;
  // True for explicit rings: nothing lies outside the explored basis.
  bool complete() const;
  // The depth bound for generated rings, nullopt when complete.
  std::optional<int> depth_bound() const;

  std::string const& label(std::size_t i) const;
  Natural const& dim(std::size_t i) const;
  std::size_t dual(std::size_t i) const;
  std::size_t unit() const;
  // Word depth of an explored element; -1 for frontier labels.
  int depth(std::size_t i) const;
  bool is_explored(std::size_t i) const { return i < explored(); }
  std::optional<std::size_t> find(std::string const& label) const;
  // Explored indices of the ring generators.
  std::vector<std::size_t> const& generators() const;

  // Requires a, b explored. Sorted by index.
  std::span<const IndexedTerm> product(std::size_t a, std::size_t b) const;
  Natural multiplicity(std::size_t a, std::size_t b, std::size_t c) const;

  std::vector<std::string> labels(std::span<const std::size_t> indices) const;

  struct Data;
  explicit Truncation(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

 private:
  std::shared_ptr<const Data> data_;
};

// Merges duplicate labels, drops zeros and sorts by the ring's order.
Decomposition normalize(FusionRules const& rules, Decomposition terms);

}  // namespace fusion
