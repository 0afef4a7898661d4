#include "fusion/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "fusion/errors.hpp"

namespace fusion {

GroupTable GroupTable::from_mult(std::vector<std::string> names,
                                 std::vector<std::vector<std::size_t>> mult) {
  std::size_t const n = names.size();
  if (n == 0) throw NotAGroup("empty table");
  if (mult.size() != n) throw NotAGroup("table is not square");
  for (std::size_t a = 0; a < n; ++a) {
    if (mult[a].size() != n) throw NotAGroup("table is not square");
    for (std::size_t b = 0; b < n; ++b)
      if (mult[a][b] >= n)
        throw NotAGroup("product of " + names[a] + " and " + names[b] +
                        " is out of range");
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      ok = mult[e][a] == a && mult[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw NotAGroup("no identity element");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw NotAGroup("associativity fails at (" + names[a] + ", " +
                          names[b] + ", " + names[c] + ")");

  std::vector<std::size_t> inverse(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (mult[a][b] == *identity && mult[b][a] == *identity) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] == n) throw NotAGroup("no inverse for " + names[a]);
  }

  GroupTable g;
  g.names = std::move(names);
  g.mult = std::move(mult);
  g.identity = *identity;
  g.inverse = std::move(inverse);
  return g;
}

std::size_t GroupTable::element_order(std::size_t g) const {
  std::size_t k = 1;
  for (std::size_t x = g; x != identity; x = mult[x][g]) ++k;
  return k;
}

bool GroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mult[a][b] != mult[b][a]) return false;
  return true;
}

std::vector<std::size_t> GroupTable::generated_by(
    std::span<const std::size_t> gens) const {
  std::vector<bool> seen(order(), false);
  std::vector<std::size_t> out{identity};
  seen[identity] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t g : gens) {
      std::size_t const x = mult[out[k]][g];
      if (!seen[x]) {
        seen[x] = true;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Presentation::relations() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (orders[i] > 0)
      out.push_back(generators[i] + "^" + std::to_string(orders[i]) + " = e");
  for (auto [i, j] : commuting)
    out.push_back(generators[i] + generators[j] + " = " + generators[j] +
                  generators[i]);
  return out;
}

std::string StabilityFlag::str() const {
  switch (kind) {
    case Kind::Exact: return "exact";
    case Kind::StableAtDepth: return "stable_at_depth(" + std::to_string(depth) + ")";
    case Kind::UnstableAtDepth:
      return "unstable_at_depth(" + std::to_string(depth) + ")";
  }
  return "exact";
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::string invariants_name(std::vector<std::uint64_t> const& inv) {
  if (inv.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < inv.size(); ++i)
    out += (i ? " x " : "") + std::string("Z/") + std::to_string(inv[i]) + "Z";
  return out;
}

}  // namespace

std::vector<std::uint64_t> abelian_invariants(GroupTable const& g) {
  std::uint64_t const n = g.order();
  std::vector<std::uint64_t> orders(n);
  for (std::size_t x = 0; x < n; ++x) orders[x] = g.element_order(x);

  // For each prime p: s_k = #{cyclic factors with p-exponent >= k}, read off
  // from |G[p^k]| = p^(sum_i min(k, e_i)).
  std::vector<std::vector<std::uint64_t>> powers;  // per prime, descending
  for (std::uint64_t p : prime_factors(n)) {
    auto log_count = [&](std::uint64_t pk) {
      std::uint64_t count = 0;
      for (auto o : orders)
        if (pk % o == 0) ++count;
      std::uint64_t l = 0;
      while (count > 1) {
        count /= p;
        ++l;
      }
      return l;
    };
    std::vector<std::uint64_t> s{0};
    std::uint64_t pk = 1, prev = 0;
    for (;;) {
      pk *= p;
      std::uint64_t const l = log_count(pk);
      if (l == prev) break;
      s.push_back(l - prev);
      prev = l;
    }
    std::vector<std::uint64_t> exps;
    for (std::size_t k = 1; k < s.size(); ++k) {
      std::uint64_t const next = k + 1 < s.size() ? s[k + 1] : 0;
      for (std::uint64_t c = 0; c < s[k] - next; ++c) exps.push_back(k);
    }
    std::sort(exps.rbegin(), exps.rend());
    std::vector<std::uint64_t> pw;
    for (auto e : exps) {
      std::uint64_t v = 1;
      for (std::uint64_t i = 0; i < e; ++i) v *= p;
      pw.push_back(v);
    }
    powers.push_back(std::move(pw));
  }

  std::size_t width = 0;
  for (auto const& pw : powers) width = std::max(width, pw.size());
  // Largest invariant collects the largest power of every prime, and so on.
  std::vector<std::uint64_t> inv(width, 1);
  for (auto const& pw : powers)
    for (std::size_t i = 0; i < pw.size(); ++i) inv[i] *= pw[i];
  std::reverse(inv.begin(), inv.end());
  return inv;
}

std::optional<std::vector<std::size_t>> find_isomorphism(GroupTable const& a,
                                                         GroupTable const& b) {
  std::size_t const n = a.order();
  if (n != b.order()) return std::nullopt;

  std::vector<std::size_t> a_orders(n), b_orders(n);
  for (std::size_t x = 0; x < n; ++x) {
    a_orders[x] = a.element_order(x);
    b_orders[x] = b.element_order(x);
  }
  {
    auto sa = a_orders, sb = b_orders;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Greedy generating set of a.
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span{a.identity};
  for (std::size_t x = 0; x < n && span.size() < n; ++x) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = a.generated_by(gens);
  }

  std::vector<std::size_t> images(gens.size());
  // Extends the generator assignment to a map and checks it is an
  // isomorphism.
  auto extend = [&]() -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> map(n, n);
    std::vector<bool> used(n, false);
    map[a.identity] = b.identity;
    used[b.identity] = true;
    std::vector<std::size_t> frontier{a.identity};
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        std::size_t const x = a(frontier[k], gens[i]);
        std::size_t const y = b(map[frontier[k]], images[i]);
        if (map[x] == n) {
          if (used[y]) return std::nullopt;
          map[x] = y;
          used[y] = true;
          frontier.push_back(x);
        } else if (map[x] != y) {
          return std::nullopt;
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (map[a(x, y)] != b(map[x], map[y])) return std::nullopt;
    return map;
  };

  std::function<std::optional<std::vector<std::size_t>>(std::size_t)> search =
      [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
    if (i == gens.size()) return extend();
    for (std::size_t y = 0; y < n; ++y) {
      if (b_orders[y] != a_orders[gens[i]]) continue;
      images[i] = y;
      if (auto m = search(i + 1)) return m;
    }
    return std::nullopt;
  };
  return search(0);
}

GroupDescriptor identify_group(GroupTable const& table,
                               std::span<const NamedGroup> candidates) {
  GroupTable const g = GroupTable::from_mult(table.names, table.mult);
  GroupDescriptor d;
  d.order = g.order();
  d.is_abelian = g.is_abelian();

  std::uint64_t exponent = 1;
  for (std::size_t x = 0; x < g.order(); ++x)
    exponent = std::lcm(exponent, static_cast<std::uint64_t>(g.element_order(x)));
  d.exponent = exponent;

  std::uint64_t center = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::size_t y = 0; y < g.order() && central; ++y)
      central = g(x, y) == g(y, x);
    if (central) ++center;
  }
  d.center_size = center;

  if (d.is_abelian) {
    d.abelian_invariants = abelian_invariants(g);
    d.name = invariants_name(*d.abelian_invariants);
  }
  for (auto const& c : candidates) {
    if (find_isomorphism(g, c.table)) {
      d.isomorphic_to.push_back(c.name);
      if (d.name.empty()) d.name = c.name;
    }
  }
  return d;
}

GroupDescriptor identify_presentation(Presentation const& p, bool abelian,
                                      StabilityFlag flag) {
  GroupDescriptor d;
  d.flag = flag;
  d.presentation = p;
  d.is_abelian = abelian;
  if (p.generators.empty()) {
    d.order = 1;
    d.is_abelian = true;
    d.abelian_invariants = std::vector<std::uint64_t>{};
    d.exponent = 1;
    d.center_size = 1;
    d.name = "1";
  } else if (p.generators.size() == 1) {
    d.is_abelian = true;
    if (p.orders[0] == 0) {
      d.name = "Z";
    } else {
      std::uint64_t const n = p.orders[0];
      d.order = n;
      d.abelian_invariants =
          n == 1 ? std::vector<std::uint64_t>{} : std::vector<std::uint64_t>{n};
      d.exponent = n;
      d.center_size = n;
      d.name = n == 1 ? "1" : "Z/" + std::to_string(n) + "Z";
    }
  }
  return d;
}

}  // namespace fusion
