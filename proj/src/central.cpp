#include "fusion/central.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <unordered_map>

#include "fusion/errors.hpp"
#include "fusion/parallel.hpp"
#include "fusion/union_find.hpp"

namespace fusion {

CosetPartition partition_from(UnionFind& sets, Truncation const& t) {
  CosetPartition p;
  std::unordered_map<std::size_t, std::size_t> block_of_root;
  p.block_of.resize(t.explored());
  for (std::size_t i = 0; i < t.explored(); ++i) {
    auto [it, fresh] = block_of_root.emplace(sets.find(i), p.blocks.size());
    if (fresh) p.blocks.emplace_back();
    p.blocks[it->second].push_back(i);
    p.block_of[i] = it->second;
  }
  p.identity_block = p.block_of[t.unit()];
  return p;
}

namespace {

UnionFind merge_sets(Truncation const& t) {
  UnionFind sets(t.size());
  for (std::size_t a = 0; a < t.explored(); ++a)
    for (std::size_t b = 0; b < t.explored(); ++b) {
      auto terms = t.product(a, b);
      for (auto const& c : terms) sets.unite(terms.front().index, c.index);
    }
  return sets;
}

}  // namespace

CosetPartition merge_closure(Truncation const& t) {
  UnionFind sets = merge_sets(t);
  return partition_from(sets, t);
}

CosetPartition chain_oracle(Truncation const& t, int max_len) {
  if (!t.complete())
    throw MalformedInput("chain_oracle needs an explicit (finite) ring");
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  std::size_t const n = t.explored();
  std::uint64_t const budget = search_budget();
  std::uint64_t nodes = 0;

  using Support = std::vector<bool>;
  UnionFind sets(n);
  auto absorb = [&](Support const& s) {
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < n; ++i)
      if (s[i]) {
        if (first)
          sets.unite(*first, i);
        else
          first = i;
      }
  };

  // Supports of all words of the current length; a word's support
  // determines the support of every extension, so distinct supports suffice.
  std::set<Support> level;
  for (std::size_t z = 0; z < n; ++z) {
    Support s(n, false);
    s[z] = true;
    level.insert(std::move(s));
  }
  for (int len = 2; len <= max_len; ++len) {
    std::set<Support> next;
    for (auto const& s : level)
      for (std::size_t z = 0; z < n; ++z) {
        if (++nodes > budget)
          throw SearchBudgetExceeded("chain_oracle exceeded the search budget");
        Support out(n, false);
        for (std::size_t c = 0; c < n; ++c)
          if (s[c])
            for (auto const& d : t.product(c, z)) out[d.index] = true;
        next.insert(std::move(out));
      }
    for (auto const& s : next) absorb(s);
    level = std::move(next);
  }
  return partition_from(sets, t);
}

Subobject trivial_class(Truncation const& t) {
  CosetPartition const p = merge_closure(t);
  Subobject ez{p.blocks[p.identity_block]};
  if (auto defect = subobject_defect(t, ez))
    throw InternalInconsistency("chain class of the unit is not a subobject: " +
                                *defect);
  return ez;
}

std::vector<bool> frontier_members(Truncation const& t, Subobject const& sigma) {
  std::size_t const n = t.explored();
  std::vector<bool> out(t.size() - n, false);
  if (out.empty()) return out;

  UnionFind sets = merge_sets(t);
  CosetPartition const p = partition_from(sets, t);
  if (sigma.members != p.blocks[p.identity_block]) {
    for (std::size_t a : sigma.members)
      for (std::size_t b : sigma.members)
        for (auto const& c : t.product(a, b))
          if (!t.is_explored(c.index)) out[c.index - n] = true;
    return out;
  }

  // Block of every merge set that meets the explored basis.
  std::unordered_map<std::size_t, std::size_t> block_of_root;
  for (std::size_t i = 0; i < n; ++i) block_of_root.emplace(sets.find(i), p.block_of[i]);
  std::size_t const nb = p.size();
  std::vector<std::optional<std::size_t>> table(nb * nb);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = block_of_root.find(sets.find(t.product(a, b).front().index));
      if (it != block_of_root.end())
        table[p.block_of[a] * nb + p.block_of[b]] = it->second;
    }

  std::vector<std::optional<std::size_t>> block(t.size() - n);
  for (std::size_t c = n; c < t.size(); ++c)
    if (auto it = block_of_root.find(sets.find(c)); it != block_of_root.end())
      block[c - n] = it->second;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto const& x = table[p.block_of[a] * nb + p.block_of[b]];
      if (!x) continue;
      for (auto const& c : t.product(a, b))
        if (!t.is_explored(c.index) && !block[c.index - n]) block[c.index - n] = x;
    }
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = block[i] == p.identity_block;
  return out;
}

CosetPartition sigma_cosets(Truncation const& t, Subobject const& sigma) {
  require_subobject(t, sigma);
  std::size_t const n = t.explored();
  std::vector<bool> const beyond = frontier_members(t, sigma);
  auto member = [&](std::size_t c) {
    return t.is_explored(c) ? sigma.contains(c) : bool(beyond[c - n]);
  };
  std::vector<char> rel(n * n, 0);
  parallel_for(n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b)
      for (auto const& c : t.product(a, t.dual(b)))
        if (member(c.index)) {
          rel[a * n + b] = 1;
          break;
        }
  });
  UnionFind sets(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (rel[a * n + b]) sets.unite(a, b);
  CosetPartition p = partition_from(sets, t);

  if (t.complete()) {
    for (auto const& block : p.blocks)
      for (std::size_t a : block)
        for (std::size_t b : block)
          if (!rel[a * n + b]) {
            std::clog << "warning: sigma-coset relation was not transitive ('"
                      << t.label(a) << "', '" << t.label(b)
                      << "' merged by closure)\n";
            goto checked;
          }
  }
checked:
  if (p.blocks[p.identity_block] != sigma.members)
    throw InternalInconsistency("coset of the unit differs from sigma");
  return p;
}

std::string block_name(Truncation const& t, CosetPartition const& p,
                       std::size_t block) {
  return "[" + t.label(p.blocks.at(block).front()) + "]";
}

CentralityResult is_central_subobject(Truncation const& t, Subobject const& sigma) {
  CentralityResult r;
  r.cosets = sigma_cosets(t, sigma);
  auto const& p = r.cosets;
  std::size_t const nb = p.size();
  r.products.assign(nb, std::vector<std::optional<std::size_t>>(nb));

  std::size_t const n = t.explored();
  for (std::size_t a = 0; a < n && !r.witness; ++a) {
    for (std::size_t b = 0; b < n && !r.witness; ++b) {
      std::vector<std::size_t> reached;
      for (auto const& c : t.product(a, b))
        if (t.is_explored(c.index)) reached.push_back(p.block_of[c.index]);
      std::sort(reached.begin(), reached.end());
      reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
      if (reached.empty()) continue;
      if (reached.size() > 1) {
        r.witness = CentralityWitness{a, b, reached, "product spans several cosets"};
        break;
      }
      auto& slot = r.products[p.block_of[a]][p.block_of[b]];
      if (slot && *slot != reached.front()) {
        r.witness = CentralityWitness{
            a, b, {std::min(*slot, reached.front()), std::max(*slot, reached.front())},
            "coset product depends on representatives"};
        break;
      }
      slot = reached.front();
    }
  }
  r.central = !r.witness.has_value();
  if (!r.central) return r;

  bool total = true;
  for (auto const& row : r.products)
    for (auto const& x : row) total = total && x.has_value();
  if (total) {
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> mult(nb);
    for (std::size_t i = 0; i < nb; ++i) {
      names.push_back(block_name(t, p, i));
      for (std::size_t j = 0; j < nb; ++j) mult[i].push_back(*r.products[i][j]);
    }
    try {
      r.group = GroupTable::from_mult(std::move(names), std::move(mult));
    } catch (NotAGroup const& e) {
      throw InternalInconsistency(std::string("coset table is not a group: ") +
                                  e.what());
    }
    if (r.group->identity != p.identity_block)
      throw InternalInconsistency("sigma is not the identity coset");
  }
  return r;
}

std::vector<Subobject> enumerate_subobjects(Truncation const& t) {
  if (!t.complete())
    throw MalformedInput("subobject enumeration needs an explicit (finite) ring");
  std::size_t const n = t.explored();
  std::uint64_t const budget = search_budget();
  std::uint64_t candidates = 0;
  auto charge = [&] {
    if (++candidates > budget)
      throw SearchBudgetExceeded("subobject enumeration exceeded the search budget");
  };

  std::set<Subobject> found;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      charge();
      std::size_t const seed[] = {a, b};
      found.insert(generated_subobject(t, seed));
    }

  std::vector<Subobject> work(found.begin(), found.end());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      charge();
      std::vector<std::size_t> seed = work[i].members;
      seed.insert(seed.end(), work[j].members.begin(), work[j].members.end());
      auto join = generated_subobject(t, seed);
      if (found.insert(join).second) work.push_back(std::move(join));
    }
  }

  std::vector<Subobject> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
    return x.size() < y.size();
  });
  return out;
}

std::vector<Subobject> enumerate_central_subobjects(Truncation const& t) {
  std::vector<Subobject> out;
  for (auto& s : enumerate_subobjects(t))
    if (is_central_subobject(t, s).central) out.push_back(std::move(s));
  return out;
}

Subobject center_subobject(Truncation const& t) {
  Subobject ez = trivial_class(t);
  if (!t.complete()) return ez;

  std::vector<bool> in_all(t.explored(), true);
  for (auto const& s : enumerate_central_subobjects(t))
    for (std::size_t i = 0; i < t.explored(); ++i)
      in_all[i] = in_all[i] && s.contains(i);
  Subobject meet;
  for (std::size_t i = 0; i < t.explored(); ++i)
    if (in_all[i]) meet.members.push_back(i);
  if (meet != ez)
    throw InternalInconsistency(
        "intersection of central subobjects differs from the chain class of "
        "the unit");
  return ez;
}

Presentation quotient_presentation(Truncation const& t, CentralityResult const& q,
                                   bool* abelian) {
  auto const& p = q.cosets;
  auto mul = [&](std::size_t x, std::size_t y) { return q.products[x][y]; };
  auto inverse = [&](std::size_t block) {
    return p.block_of[t.dual(p.blocks[block].front())];
  };

  Presentation out;
  std::vector<std::size_t> blocks;  // per presentation generator
  for (std::size_t g : t.generators()) {
    std::size_t const b = p.block_of[g];
    std::string const name = "[" + t.label(g) + "]";
    if (b == p.identity_block) {
      out.identifications.push_back(name + " = e");
      continue;
    }
    bool matched = false;
    for (std::size_t i = 0; i < blocks.size() && !matched; ++i) {
      if (blocks[i] == b) {
        out.identifications.push_back(name + " = " + out.generators[i]);
        matched = true;
      } else if (inverse(blocks[i]) == b) {
        out.identifications.push_back(name + " = " + out.generators[i] + "^-1");
        matched = true;
      }
    }
    if (matched) continue;
    out.generators.push_back(name);
    blocks.push_back(b);
  }

  for (std::size_t b : blocks) {
    std::uint64_t order = 0;
    std::optional<std::size_t> power = b;
    for (std::uint64_t k = 1; power && k <= p.size(); ++k) {
      if (*power == p.identity_block) {
        order = k;
        break;
      }
      power = mul(*power, b);
    }
    out.orders.push_back(order);
  }

  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      auto x = mul(blocks[i], blocks[j]);
      auto y = mul(blocks[j], blocks[i]);
      if (x && y && *x == *y) out.commuting.emplace_back(i, j);
    }

  if (abelian) {
    *abelian = true;
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y) {
        auto xy = mul(x, y), yx = mul(y, x);
        if (xy && yx && *xy != *yx) *abelian = false;
      }
  }
  return out;
}

ChainGroup chain_group(Truncation const& t, std::span<const NamedGroup> candidates) {
  Subobject ez = trivial_class(t);
  CentralityResult q = is_central_subobject(t, ez);
  if (!q.central)
    throw InternalInconsistency("chain class of the unit is not central");

  ChainGroup out{t, std::move(ez), std::move(q), std::nullopt, {}};
  if (t.complete()) {
    out.descriptor = identify_group(*out.quotient.group, candidates);
    out.descriptor.flag = StabilityFlag::exact();
    return out;
  }

  bool abelian = true;
  out.presentation = quotient_presentation(t, out.quotient, &abelian);
  StabilityFlag const flag = StabilityFlag::stable_at(*t.depth_bound());
  if (out.quotient.group) {
    out.descriptor = identify_group(*out.quotient.group, candidates);
    out.descriptor.presentation = out.presentation;
    out.descriptor.flag = flag;
  } else {
    out.descriptor = identify_presentation(*out.presentation, abelian, flag);
  }
  return out;
}

ChainGroup chain_group(FusionRing const& ring, int depth,
                       std::span<const NamedGroup> candidates) {
  if (ring.is_explicit()) return chain_group(ring.truncate(depth), candidates);
  ChainGroup here = chain_group(ring.truncate(depth), candidates);
  ChainGroup deeper = chain_group(ring.truncate(depth + 1), candidates);
  bool const agree = here.presentation == deeper.presentation &&
                     here.descriptor.order == deeper.descriptor.order;
  here.descriptor.flag =
      agree ? StabilityFlag::stable_at(depth) : StabilityFlag::unstable_at(depth);
  return here;
}

}  // namespace fusion
