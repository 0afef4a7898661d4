#include "fusion/subobject.hpp"

#include <algorithm>
#include <deque>

#include "fusion/errors.hpp"

namespace fusion {

bool Subobject::contains(std::size_t i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

std::optional<std::string> subobject_defect(Truncation const& t,
                                            Subobject const& sigma) {
  if (!std::is_sorted(sigma.members.begin(), sigma.members.end()) ||
      std::adjacent_find(sigma.members.begin(), sigma.members.end()) !=
          sigma.members.end())
    return "members are not a sorted set";
  for (std::size_t m : sigma.members)
    if (!t.is_explored(m)) return "member index " + std::to_string(m) + " is not explored";
  if (!sigma.contains(t.unit())) return "unit '" + t.label(t.unit()) + "' missing";
  for (std::size_t a : sigma.members)
    if (!sigma.contains(t.dual(a)))
      return "not closed under dual: '" + t.label(a) + "'";
  for (std::size_t a : sigma.members)
    for (std::size_t b : sigma.members)
      for (auto const& c : t.product(a, b)) {
        if (!t.is_explored(c.index)) {
          if (t.complete()) return "constituent outside basis";
          continue;
        }
        if (!sigma.contains(c.index))
          return "not closed under fusion: '" + t.label(c.index) + "' in '" +
                 t.label(a) + "' x '" + t.label(b) + "'";
      }
  return std::nullopt;
}

void require_subobject(Truncation const& t, Subobject const& sigma) {
  if (auto defect = subobject_defect(t, sigma)) throw NotASubobject(*defect);
}

Subobject subobject_from_labels(Truncation const& t,
                                std::span<const std::string> labels) {
  Subobject out;
  for (auto const& l : labels) {
    auto i = t.find(l);
    if (!i) {
      if (!t.ring().contains(l)) throw UnknownLabel("unknown label '" + l + "'");
      throw DepthExceeded("label '" + l + "' lies outside the explored basis");
    }
    if (!t.is_explored(*i))
      throw DepthExceeded("label '" + l + "' lies outside the explored basis");
    out.members.push_back(*i);
  }
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()),
                    out.members.end());
  return out;
}

Subobject generated_subobject(Truncation const& t,
                              std::span<const std::size_t> seed) {
  std::vector<bool> in(t.explored(), false);
  std::vector<std::size_t> members;
  std::deque<std::size_t> work;
  auto add = [&](std::size_t i) {
    if (!t.is_explored(i))
      throw DepthExceeded("closure reaches '" + t.label(i) +
                          "' outside the explored basis");
    if (in[i]) return;
    in[i] = true;
    members.push_back(i);
    work.push_back(i);
  };
  add(t.unit());
  for (std::size_t s : seed) add(s);
  while (!work.empty()) {
    std::size_t const a = work.front();
    work.pop_front();
    add(t.dual(a));
    // Products with every member found so far, in both orders.
    for (std::size_t k = 0; k < members.size(); ++k) {
      std::size_t const b = members[k];
      for (auto const& c : t.product(a, b)) add(c.index);
      for (auto const& c : t.product(b, a)) add(c.index);
    }
  }
  std::sort(members.begin(), members.end());
  return Subobject{std::move(members)};
}

}  // namespace fusion
