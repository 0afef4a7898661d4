#pragma once

// Reference computations that share no code with the library: characters,
// weight multisets, reduced words and literal word enumeration.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "fusion/ring.hpp"

namespace oracle {

// Rep(S3) from its character table. Classes: e (1), transpositions (3),
// 3-cycles (2).
inline std::map<std::array<std::string, 3>, long> rep_s3_fusion() {
  std::map<std::string, std::array<long, 3>> chi = {
      {"1", {1, 1, 1}}, {"sgn", {1, -1, 1}}, {"rho", {2, 0, -1}}};
  std::array<long, 3> const size = {1, 3, 2};
  std::map<std::array<std::string, 3>, long> out;
  for (auto const& [a, x] : chi)
    for (auto const& [b, y] : chi)
      for (auto const& [c, z] : chi) {
        long s = 0;
        for (int k = 0; k < 3; ++k) s += size[k] * x[k] * y[k] * z[k];
        if (s / 6) out[{a, b, c}] = s / 6;
      }
  return out;
}

// Weights of V_n: -n, -n+2, ..., n.
inline std::multiset<int> su2_weights(int n) {
  std::multiset<int> w;
  for (int k = -n; k <= n; k += 2) w.insert(k);
  return w;
}

// V_a x V_b by peeling highest weights off the product weight multiset.
inline std::map<int, long> su2_product(int a, int b) {
  std::multiset<int> w;
  for (int x : su2_weights(a))
    for (int y : su2_weights(b)) w.insert(x + y);
  std::map<int, long> out;
  while (!w.empty()) {
    int const top = *w.rbegin();
    ++out[top];
    for (int x : su2_weights(top)) w.erase(w.find(x));
  }
  return out;
}

// Reduced words of the infinite dihedral group <a, b | a^2 = b^2 = e>: the
// element is determined by its first letter and length.
inline std::string dihedral_reduce(std::string const& word) {
  std::string out;
  for (char c : word) {
    if (!out.empty() && out.back() == c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

// Chain classes by literal enumeration of every word z1 ... zk (k <= max_len)
// and its full decomposition. Label-level, so it also exercises fuse_word.
inline std::vector<std::set<std::string>> literal_chain_classes(
    fusion::FusionRing const& ring, int max_len) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ring.size(); ++i) labels.push_back(ring.element(i).label);
  std::map<std::string, std::string> parent;
  for (auto const& l : labels) parent[l] = l;
  auto find = [&](std::string x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::vector<std::string> word;
  auto visit = [&](auto&& self, int len) -> void {
    if (len > 0) {
      auto d = ring.fuse_word(word);
      for (auto const& t : d) parent[find(t.label)] = find(d.front().label);
    }
    if (len == max_len) return;
    for (auto const& l : labels) {
      word.push_back(l);
      self(self, len + 1);
      word.pop_back();
    }
  };
  visit(visit, 0);
  std::map<std::string, std::set<std::string>> classes;
  for (auto const& l : labels) classes[find(l)].insert(l);
  std::vector<std::set<std::string>> out;
  for (auto& [_, c] : classes) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
