#include "fusion/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "fusion/errors.hpp"

namespace fusion {

Natural parse_natural(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a natural number: " + std::string(text));
  }
  return Natural(std::string(text));
}

struct FusionRing::Table {
  std::string name;
  std::vector<BasisElement> basis;
  std::unordered_map<std::string, std::size_t> index;
  std::size_t unit = 0;
  std::vector<std::size_t> dual;
  // Row-major n x n.
  std::vector<std::vector<IndexedTerm>> products;

  std::size_t at(std::string const& label) const {
    auto it = index.find(label);
    if (it == index.end()) throw UnknownLabel("unknown label '" + label + "'");
    return it->second;
  }
};

namespace {

class ExplicitRules final : public FusionRules {
 public:
  explicit ExplicitRules(std::shared_ptr<const FusionRing::Table> table)
      : table_(std::move(table)) {}

  std::string name() const override { return table_->name; }
  std::string unit() const override { return table_->basis[table_->unit].label; }

  std::vector<std::string> generators() const override {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < table_->basis.size(); ++i)
      if (i != table_->unit) out.push_back(table_->basis[i].label);
    return out;
  }

  bool contains(std::string const& label) const override {
    return table_->index.contains(label);
  }
  std::string dual(std::string const& label) const override {
    return table_->basis[table_->dual[table_->at(label)]].label;
  }
  Natural dim(std::string const& label) const override {
    return table_->basis[table_->at(label)].dim;
  }

  Decomposition product(std::string const& a,
                        std::string const& b) const override {
    std::size_t const n = table_->basis.size();
    auto const& terms = table_->products[table_->at(a) * n + table_->at(b)];
    Decomposition out;
    out.reserve(terms.size());
    for (auto const& t : terms)
      out.push_back({table_->basis[t.index].label, t.mult});
    return out;
  }

  bool precedes(std::string const& a, std::string const& b) const override {
    return table_->at(a) < table_->at(b);
  }

 private:
  std::shared_ptr<const FusionRing::Table> table_;
};

// Wraps another rule set, replacing only dimensions.
class DimOverride final : public FusionRules {
 public:
  DimOverride(std::shared_ptr<const FusionRules> inner,
              std::function<Natural(std::string const&)> dims)
      : inner_(std::move(inner)), dims_(std::move(dims)) {}

  std::string name() const override { return inner_->name(); }
  std::string unit() const override { return inner_->unit(); }
  std::vector<std::string> generators() const override {
    return inner_->generators();
  }
  bool contains(std::string const& l) const override { return inner_->contains(l); }
  std::string dual(std::string const& l) const override { return inner_->dual(l); }
  Natural dim(std::string const& l) const override { return dims_(l); }
  Decomposition product(std::string const& a,
                        std::string const& b) const override {
    return inner_->product(a, b);
  }
  bool precedes(std::string const& a, std::string const& b) const override {
    return inner_->precedes(a, b);
  }

 private:
  std::shared_ptr<const FusionRules> inner_;
  std::function<Natural(std::string const&)> dims_;
};

}  // namespace

FusionRing FusionRing::make_explicit(std::string name,
                                     std::vector<BasisElement> basis,
                                     std::string const& unit,
                                     std::map<std::string, std::string> const& dual,
                                     std::vector<FusionEntry> const& fusion) {
  auto table = std::make_shared<Table>();
  table->name = std::move(name);
  if (basis.empty()) throw MalformedRing("empty basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].dim < 1)
      throw MalformedRing("basis element '" + basis[i].label +
                          "' has dimension < 1");
    if (!table->index.emplace(basis[i].label, i).second)
      throw MalformedRing("duplicate label '" + basis[i].label + "'");
  }
  table->basis = std::move(basis);
  std::size_t const n = table->basis.size();

  auto lookup = [&](std::string const& label, char const* what) {
    auto it = table->index.find(label);
    if (it == table->index.end())
      throw MalformedRing(std::string("dangling label '") + label + "' in " + what);
    return it->second;
  };

  table->unit = lookup(unit, "unit");

  table->dual.assign(n, n);
  for (auto const& [from, to] : dual)
    table->dual[lookup(from, "dual")] = lookup(to, "dual");
  for (std::size_t i = 0; i < n; ++i)
    if (table->dual[i] == n)
      throw MalformedRing("no dual given for '" + table->basis[i].label + "'");

  table->products.assign(n * n, {});
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (auto const& e : fusion) {
    std::size_t const a = lookup(e.a, "fusion");
    std::size_t const b = lookup(e.b, "fusion");
    std::size_t const c = lookup(e.c, "fusion");
    if (e.n < 1)
      throw MalformedRing("zero multiplicity for (" + e.a + ", " + e.b + ", " +
                          e.c + ")");
    if (!seen.emplace(a, b, c).second)
      throw MalformedRing("duplicate fusion entry (" + e.a + ", " + e.b + ", " +
                          e.c + ")");
    table->products[a * n + b].push_back({c, e.n});
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto& terms = table->products[a * n + b];
      if (terms.empty())
        throw MalformedRing("no fusion entry for pair (" + table->basis[a].label +
                            ", " + table->basis[b].label + ")");
      std::sort(terms.begin(), terms.end(),
                [](auto const& x, auto const& y) { return x.index < y.index; });
    }
  }

  std::shared_ptr<const Table> frozen = std::move(table);
  return FusionRing(std::make_shared<ExplicitRules>(frozen), frozen);
}

FusionRing FusionRing::make_generated(std::shared_ptr<const FusionRules> rules) {
  if (!rules) throw std::invalid_argument("null rules");
  auto gens = rules->generators();
  std::set<std::string> pool(gens.begin(), gens.end());
  for (auto const& g : gens)
    if (!pool.contains(rules->dual(g)))
      throw MalformedRing("generator set of '" + rules->name() +
                          "' is not closed under dual (" + g + ")");
  return FusionRing(std::move(rules), nullptr);
}

FusionRing::Table const& FusionRing::table() const {
  if (!table_)
    throw std::logic_error("indexed access requires an explicit ring (" +
                           name() + ")");
  return *table_;
}

bool FusionRing::contains(std::string const& label) const {
  return rules_->contains(label);
}

std::string FusionRing::dual_label(std::string const& label) const {
  if (!contains(label)) throw UnknownLabel("unknown label '" + label + "'");
  return rules_->dual(label);
}

Natural FusionRing::dim_of(std::string const& label) const {
  if (!contains(label)) throw UnknownLabel("unknown label '" + label + "'");
  return rules_->dim(label);
}

Decomposition FusionRing::fuse(std::string const& a, std::string const& b) const {
  if (!contains(a)) throw UnknownLabel("unknown label '" + a + "'");
  if (!contains(b)) throw UnknownLabel("unknown label '" + b + "'");
  return rules_->product(a, b);
}

Decomposition FusionRing::fuse_word(std::span<const std::string> word) const {
  if (word.empty()) throw std::invalid_argument("empty word");
  for (auto const& z : word)
    if (!contains(z)) throw UnknownLabel("unknown label '" + z + "'");
  Decomposition acc{{word.front(), 1}};
  for (auto const& z : word.subspan(1)) {
    Decomposition next;
    for (auto const& t : acc)
      for (auto const& c : rules_->product(t.label, z))
        next.push_back({c.label, t.mult * c.mult});
    acc = normalize(*rules_, std::move(next));
  }
  return acc;
}

std::size_t FusionRing::size() const { return table().basis.size(); }
BasisElement const& FusionRing::element(std::size_t i) const {
  return table().basis.at(i);
}
std::size_t FusionRing::unit() const { return table().unit; }
std::size_t FusionRing::dual(std::size_t i) const { return table().dual.at(i); }

std::span<const IndexedTerm> FusionRing::product(std::size_t a,
                                                 std::size_t b) const {
  auto const& t = table();
  return t.products.at(a * t.basis.size() + b);
}

std::optional<std::size_t> FusionRing::find(std::string const& label) const {
  auto const& t = table();
  auto it = t.index.find(label);
  if (it == t.index.end()) return std::nullopt;
  return it->second;
}

std::vector<FusionEntry> FusionRing::entries() const {
  auto const& t = table();
  std::size_t const n = t.basis.size();
  std::vector<FusionEntry> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (auto const& term : t.products[a * n + b])
        out.push_back({t.basis[a].label, t.basis[b].label,
                       t.basis[term.index].label, term.mult});
  return out;
}

FusionRing FusionRing::with_dims(
    std::function<Natural(std::string const&)> dims) const {
  if (table_) {
    auto copy = std::make_shared<Table>(*table_);
    for (auto& e : copy->basis) e.dim = dims(e.label);
    std::shared_ptr<const Table> frozen = std::move(copy);
    return FusionRing(std::make_shared<ExplicitRules>(frozen), frozen);
  }
  return FusionRing(std::make_shared<DimOverride>(rules_, std::move(dims)),
                    nullptr);
}

Decomposition normalize(FusionRules const& rules, Decomposition terms) {
  std::sort(terms.begin(), terms.end(), [&](Term const& x, Term const& y) {
    return rules.precedes(x.label, y.label);
  });
  Decomposition out;
  for (auto& t : terms) {
    if (t.mult == 0) continue;
    if (!out.empty() && out.back().label == t.label)
      out.back().mult += t.mult;
    else
      out.push_back(std::move(t));
  }
  return out;
}

}  // namespace fusion
