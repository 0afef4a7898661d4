#include "fusion/validate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fusion {

namespace {

// Witnesses beyond this many per axiom are counted but not stored.
constexpr std::size_t kMaxWitnesses = 64;

class Collector {
 public:
  explicit Collector(Truncation const& t) : t_(t) {}

  void add(Axiom axiom, std::vector<std::size_t> const& witness,
           std::string detail) {
    auto& count = counts_[axiom];
    if (++count > kMaxWitnesses) return;
    report_.violations.push_back({axiom, t_.labels(witness), std::move(detail)});
  }

  ValidationReport finish() {
    for (auto const& [axiom, count] : counts_) {
      if (count > kMaxWitnesses) {
        report_.violations.push_back(
            {axiom, {},
             std::to_string(count - kMaxWitnesses) + " further violations omitted"});
      }
    }
    report_.checked_depth = t_.depth_bound();
    return std::move(report_);
  }

 private:
  Truncation const& t_;
  ValidationReport report_;
  std::map<Axiom, std::size_t> counts_;
};

std::string mults(Natural const& x, Natural const& y) {
  return to_string(x) + " != " + to_string(y);
}

using Sparse = std::map<std::size_t, Natural>;

struct Difference {
  std::size_t key;
  Natural left;
  Natural right;
};

std::optional<Difference> first_difference(Sparse const& x, Sparse const& y) {
  auto get = [](Sparse const& m, std::size_t k) {
    auto it = m.find(k);
    return it == m.end() ? Natural(0) : it->second;
  };
  std::optional<Difference> best;
  for (auto const* m : {&x, &y})
    for (auto const& kv : *m) {
      if (best && best->key <= kv.first) break;
      Natural l = get(x, kv.first), r = get(y, kv.first);
      if (l != r) {
        best = Difference{kv.first, l, r};
        break;
      }
    }
  return best;
}

bool all_explored(Truncation const& t, std::span<const IndexedTerm> terms) {
  return std::all_of(terms.begin(), terms.end(),
                     [&](auto const& x) { return t.is_explored(x.index); });
}

}  // namespace

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::DimensionPositive: return "dimension_positive";
    case Axiom::DualInvolution: return "dual_involution";
    case Axiom::UnitLaw: return "unit_law";
    case Axiom::Duality: return "duality";
    case Axiom::Frobenius: return "frobenius";
    case Axiom::Conjugation: return "conjugation";
    case Axiom::Associativity: return "associativity";
    case Axiom::DimensionHomomorphism: return "dimension_homomorphism";
  }
  return "unknown";
}

bool ValidationReport::has(Axiom axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](auto const& v) { return v.axiom == axiom; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "no violations";
  std::ostringstream out;
  bool first = true;
  for (auto const& v : violations) {
    if (!first) out << "; ";
    first = false;
    out << to_string(v.axiom);
    if (!v.witness.empty()) {
      out << " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        out << (i ? ", " : "") << v.witness[i];
      out << ")";
    }
    if (!v.detail.empty()) out << ": " << v.detail;
  }
  return out.str();
}

ValidationReport validate_ring(FusionRing const& ring, int depth) {
  return validate_ring(ring.truncate(depth));
}

ValidationReport validate_ring(Truncation const& t) {
  Collector report(t);
  std::size_t const n = t.explored();
  std::size_t const u = t.unit();

  if (t.dim(u) != 1) report.add(Axiom::DimensionPositive, {u}, "unit has dimension " + to_string(t.dim(u)));
  if (t.dual(u) != u) report.add(Axiom::DualInvolution, {u}, "unit is not self-dual");
  for (std::size_t a = 0; a < n; ++a) {
    if (t.dim(a) < 1) report.add(Axiom::DimensionPositive, {a}, "dimension < 1");
    if (t.dual(t.dual(a)) != a)
      report.add(Axiom::DualInvolution, {a}, "dual(dual(a)) != a");
    if (t.dim(t.dual(a)) != t.dim(a))
      report.add(Axiom::DualInvolution, {a, t.dual(a)}, "dim(dual(a)) != dim(a)");
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (auto [x, y] : {std::pair{u, a}, std::pair{a, u}}) {
      auto p = t.product(x, y);
      if (p.size() != 1 || p[0].index != a || p[0].mult != 1)
        report.add(Axiom::UnitLaw, {x, y}, "product is not {a:1}");
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto p = t.product(a, b);

      Natural const to_unit = t.multiplicity(a, b, u);
      Natural const expected = b == t.dual(a) ? 1 : 0;
      if (to_unit != expected)
        report.add(Axiom::Duality, {a, b},
                   "N_ab^unit = " + to_string(to_unit) + ", expected " +
                       to_string(expected));

      Natural total = 0;
      for (auto const& c : p) total += c.mult * t.dim(c.index);
      if (total != t.dim(a) * t.dim(b))
        report.add(Axiom::DimensionHomomorphism, {a, b},
                   "dim(a)dim(b) = " + to_string(t.dim(a) * t.dim(b)) +
                       " but sum N_ab^c dim(c) = " + to_string(total));

      // N_ab^c = N_{b̄ā}^{c̄} over the whole support, frontier included.
      auto q = t.product(t.dual(b), t.dual(a));
      Sparse lhs, rhs;
      for (auto const& c : p) lhs[t.dual(c.index)] = c.mult;
      for (auto const& c : q) rhs[c.index] = c.mult;
      if (auto diff = first_difference(lhs, rhs))
        report.add(Axiom::Conjugation, {a, b, t.dual(diff->key)},
                   mults(diff->left, diff->right));
    }
  }

  // Frobenius reciprocity on explored triples.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        Natural const x = t.multiplicity(a, b, c);
        Natural const y = t.multiplicity(t.dual(a), c, b);
        Natural const z = t.multiplicity(c, t.dual(b), a);
        if (x != y || x != z)
          report.add(Axiom::Frobenius, {a, b, c},
                     "N_ab^c = " + to_string(x) + ", N_{āc}^b = " + to_string(y) +
                         ", N_{cb̄}^a = " + to_string(z));
      }
    }
  }

  // (a x b) x c == a x (b x c), wherever both sides stay inside the table.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto ab = t.product(a, b);
      if (!all_explored(t, ab)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        auto bc = t.product(b, c);
        if (!all_explored(t, bc)) continue;
        Sparse left, right;
        for (auto const& e : ab)
          for (auto const& d : t.product(e.index, c)) left[d.index] += e.mult * d.mult;
        for (auto const& f : bc)
          for (auto const& d : t.product(a, f.index)) right[d.index] += f.mult * d.mult;
        if (auto diff = first_difference(left, right))
          report.add(Axiom::Associativity, {a, b, c, diff->key},
                     "(ab)c != a(bc): " + mults(diff->left, diff->right));
      }
    }
  }

  return report.finish();
}

}  // namespace fusion
