#include "fusion/automorph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "fusion/errors.hpp"
#include "fusion/parallel.hpp"

namespace fusion {

namespace {

bool stays_explored(Truncation const& t, std::span<const IndexedTerm> terms) {
  return std::all_of(terms.begin(), terms.end(),
                     [&](auto const& x) { return t.is_explored(x.index); });
}

// Image of a x b under perm as a map index -> multiplicity.
std::map<std::size_t, Natural> image_of(std::span<const IndexedTerm> terms,
                                        std::vector<std::size_t> const& perm) {
  std::map<std::size_t, Natural> out;
  for (auto const& c : terms) out[perm[c.index]] = c.mult;
  return out;
}

std::map<std::size_t, Natural> as_map(std::span<const IndexedTerm> terms) {
  std::map<std::size_t, Natural> out;
  for (auto const& c : terms) out[c.index] = c.mult;
  return out;
}

class Budget {
 public:
  Budget() : limit_(search_budget()) {}
  void charge() {
    if (++nodes_ > limit_)
      throw SearchBudgetExceeded("automorphism search exceeded the search budget");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
};

std::vector<RingAutomorphism> explicit_search(Truncation const& t) {
  std::size_t const n = t.explored();
  std::size_t constexpr unset = static_cast<std::size_t>(-1);
  using Key = std::tuple<Natural, bool, Natural>;
  std::vector<Key> key(n);
  for (std::size_t a = 0; a < n; ++a)
    key[a] = {t.dim(a), t.dual(a) == a, t.multiplicity(a, a, a)};

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return key[x] < key[y]; });

  std::vector<std::size_t> perm(n, unset);
  std::vector<bool> used(n, false);
  std::vector<std::size_t> assigned;
  auto assign = [&](std::size_t a, std::size_t b) {
    perm[a] = b;
    used[b] = true;
    assigned.push_back(a);
  };
  auto undo_to = [&](std::size_t mark) {
    while (assigned.size() > mark) {
      used[perm[assigned.back()]] = false;
      perm[assigned.back()] = unset;
      assigned.pop_back();
    }
  };
  // Every coefficient among assigned elements that involves x.
  auto consistent = [&](std::size_t x) {
    for (std::size_t a : assigned)
      for (std::size_t b : assigned)
        for (std::size_t c : assigned) {
          if (a != x && b != x && c != x) continue;
          if (t.multiplicity(a, b, c) != t.multiplicity(perm[a], perm[b], perm[c]))
            return false;
        }
    return true;
  };

  Budget budget;
  std::vector<RingAutomorphism> found;
  assign(t.unit(), t.unit());

  std::function<void(std::size_t)> search = [&](std::size_t k) {
    budget.charge();
    if (k == n) {
      found.push_back({perm});
      return;
    }
    std::size_t const a = order[k];
    if (perm[a] != unset) return search(k + 1);
    for (std::size_t b = 0; b < n; ++b) {
      if (used[b] || key[b] != key[a]) continue;
      std::size_t const mark = assigned.size();
      assign(a, b);
      bool ok = consistent(a);
      if (ok && t.dual(a) != a) {
        if (used[t.dual(b)]) {
          ok = false;
        } else {
          assign(t.dual(a), t.dual(b));
          ok = consistent(t.dual(a));
        }
      }
      if (ok) search(k + 1);
      undo_to(mark);
    }
  };
  search(0);
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<RingAutomorphism> generated_search(Truncation const& t) {
  std::size_t const n = t.explored();
  std::size_t constexpr unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> const& gens = t.generators();

  // A breadth-first parent for each element of depth >= 2: x lies in
  // parent x generator.
  std::vector<std::pair<std::size_t, std::size_t>> parent(n, {unset, unset});
  std::vector<std::size_t> order;
  for (std::size_t x = 0; x < n; ++x)
    if (t.depth(x) >= 2) order.push_back(x);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return t.depth(x) < t.depth(y); });
  for (std::size_t x : order) {
    for (std::size_t p = 0; p < n && parent[x].first == unset; ++p) {
      if (t.depth(p) != t.depth(x) - 1) continue;
      for (std::size_t g : gens)
        if (t.multiplicity(p, g, x) != 0) {
          parent[x] = {p, g};
          break;
        }
    }
    if (parent[x].first == unset)
      throw InternalInconsistency("no breadth-first parent for " + t.label(x));
  }

  Budget budget;
  std::vector<std::size_t> perm(n, unset);
  std::vector<bool> used(n, false);
  std::vector<RingAutomorphism> found;

  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    budget.charge();
    if (k == order.size()) {
      if (!automorphism_defect(t, perm)) found.push_back({perm});
      return;
    }
    std::size_t const x = order[k];
    auto [p, g] = parent[x];
    Natural const m = t.multiplicity(p, g, x);
    for (auto const& y : t.product(perm[p], perm[g])) {
      std::size_t const c = y.index;
      if (!t.is_explored(c) || used[c] || y.mult != m || t.dim(c) != t.dim(x) ||
          t.depth(c) != t.depth(x))
        continue;
      if (perm[t.dual(x)] != unset && t.dual(perm[t.dual(x)]) != c) continue;
      perm[x] = c;
      used[c] = true;
      extend(k + 1);
      used[c] = false;
      perm[x] = unset;
    }
  };

  std::function<void(std::size_t)> choose = [&](std::size_t i) {
    budget.charge();
    if (i == gens.size()) return extend(0);
    std::size_t const g = gens[i];
    for (std::size_t h : gens) {
      if (used[h] || t.dim(h) != t.dim(g)) continue;
      if (perm[t.dual(g)] != unset && t.dual(perm[t.dual(g)]) != h) continue;
      perm[g] = h;
      used[h] = true;
      choose(i + 1);
      used[h] = false;
      perm[g] = unset;
    }
  };

  perm[t.unit()] = t.unit();
  used[t.unit()] = true;
  choose(0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

// Generator images, which determine a generated-ring automorphism.
std::vector<std::vector<std::string>> signature(Truncation const& t,
                                                std::vector<RingAutomorphism> const& list) {
  std::vector<std::vector<std::string>> out;
  for (auto const& a : list) {
    std::vector<std::string> images;
    for (std::size_t g : t.generators()) images.push_back(t.label(a.perm[g]));
    out.push_back(std::move(images));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<std::string> automorphism_defect(Truncation const& t,
                                               std::vector<std::size_t> const& perm) {
  std::size_t const n = t.explored();
  if (perm.size() != n) return "permutation has the wrong size";
  std::vector<bool> hit(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (perm[a] >= n || hit[perm[a]]) return "not a bijection of the explored basis";
    hit[perm[a]] = true;
  }
  if (perm[t.unit()] != t.unit()) return "unit is moved";
  for (std::size_t a = 0; a < n; ++a) {
    if (t.dim(perm[a]) != t.dim(a)) return "dimension of " + t.label(a) + " changes";
    if (perm[t.dual(a)] != t.dual(perm[a]))
      return "dual of " + t.label(a) + " is not preserved";
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto ab = t.product(a, b);
      if (!stays_explored(t, ab)) continue;
      auto image = t.product(perm[a], perm[b]);
      if (image_of(ab, perm) != as_map(image))
        return "fusion of " + t.label(a) + " and " + t.label(b) + " is not preserved";
    }
  return std::nullopt;
}

std::vector<RingAutomorphism> automorphisms(Truncation const& t) {
  return t.complete() ? explicit_search(t) : generated_search(t);
}

AutomorphismList automorphisms(FusionRing const& ring, int depth) {
  Truncation t = ring.truncate(depth);
  auto list = automorphisms(t);
  StabilityFlag flag = StabilityFlag::exact();
  if (!t.complete()) {
    Truncation const deeper = ring.truncate(depth + 1);
    bool const agree = signature(t, list) == signature(deeper, automorphisms(deeper));
    flag = agree ? StabilityFlag::stable_at(depth) : StabilityFlag::unstable_at(depth);
  }
  return {std::move(t), std::move(list), flag};
}

ChainAction action_on_chain_group(ChainGroup const& chain,
                                  RingAutomorphism const& automorphism) {
  Truncation const& t = chain.basis;
  CosetPartition const& p = chain.quotient.cosets;
  if (automorphism.perm.size() != t.explored())
    throw std::invalid_argument("automorphism belongs to a different truncation");

  ChainAction out;
  for (auto const& block : p.blocks) {
    std::size_t const image = p.block_of[automorphism.perm[block.front()]];
    for (std::size_t x : block)
      if (p.block_of[automorphism.perm[x]] != image)
        throw InternalInconsistency("automorphism does not preserve the chain relation");
    out.block_perm.push_back(image);
  }

  bool identity = true, inversion = true;
  for (std::size_t b = 0; b < p.size(); ++b) {
    identity = identity && out.block_perm[b] == b;
    std::size_t const inverse = p.block_of[t.dual(p.blocks[b].front())];
    inversion = inversion && out.block_perm[b] == inverse;
  }
  out.kind = identity ? "identity" : inversion ? "inversion" : "other";
  return out;
}

}  // namespace fusion
