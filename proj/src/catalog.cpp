#include "fusion/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "fusion/errors.hpp"
#include "fusion/ring_io.hpp"
#include "fusion/validate.hpp"

namespace fusion {

namespace {

std::optional<long long> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.size() > 1 && (s[0] == '0' || (s[0] == '-' && s[1] == '0')))
    return std::nullopt;
  if (s == "-") return std::nullopt;
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

// ---- SU(2) / SO(3) -------------------------------------------------------

// Spin rings: label prefix + n. SU(2): V_n has highest weight n; SO(3): W_n
// has highest weight 2n, so all spins are integral.
class SpinRules final : public FusionRules {
 public:
  SpinRules(char prefix, bool integral) : prefix_(prefix), integral_(integral) {}

  std::string name() const override { return integral_ ? "so3" : "su2"; }
  std::string unit() const override { return label(0); }
  std::vector<std::string> generators() const override { return {label(1)}; }

  bool contains(std::string const& l) const override {
    if (l.size() < 2 || l[0] != prefix_) return false;
    auto n = parse_int(std::string_view(l).substr(1));
    return n && *n >= 0;
  }
  std::string dual(std::string const& l) const override { return l; }
  Natural dim(std::string const& l) const override {
    long long const n = index(l);
    return integral_ ? 2 * n + 1 : n + 1;
  }

  Decomposition product(std::string const& a,
                        std::string const& b) const override {
    long long const x = index(a), y = index(b);
    long long const step = integral_ ? 1 : 2;
    Decomposition out;
    for (long long c = std::llabs(x - y); c <= x + y; c += step)
      out.push_back({label(c), 1});
    return out;
  }

  bool precedes(std::string const& a, std::string const& b) const override {
    return index(a) < index(b);
  }

 private:
  std::string label(long long n) const { return prefix_ + std::to_string(n); }
  static long long index(std::string const& l) {
    return *parse_int(std::string_view(l).substr(1));
  }

  char prefix_;
  bool integral_;
};

// ---- A_u(n) ----------------------------------------------------------------

char swap_letter(char c) { return c == 'u' ? 'v' : 'u'; }

std::string conj_word(std::string const& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = swap_letter(c);
  return out;
}

class FreeUnitaryRules final : public FusionRules {
 public:
  explicit FreeUnitaryRules(unsigned n) : n_(n) {}

  std::string name() const override { return "au:" + std::to_string(n_); }
  std::string unit() const override { return "e"; }
  std::vector<std::string> generators() const override { return {"u", "v"}; }

  bool contains(std::string const& l) const override {
    if (l == "e") return true;
    return !l.empty() && std::all_of(l.begin(), l.end(),
                                     [](char c) { return c == 'u' || c == 'v'; });
  }

  std::string dual(std::string const& l) const override {
    return l == "e" ? l : conj_word(l);
  }

  // x x ℓ = xℓ + x' when x = x'ℓ̄, so dim(xℓ) = n dim(x) - [x ends in ℓ̄] dim(x').
  Natural dim(std::string const& l) const override {
    if (l == "e") return 1;
    Natural before = 1, current = n_;
    for (std::size_t k = 1; k < l.size(); ++k) {
      Natural next = current * n_;
      if (l[k - 1] == swap_letter(l[k])) next -= before;
      before = std::move(current);
      current = std::move(next);
    }
    return current;
  }

  // x x y = sum over x = a.g, y = ḡ.b of a.b.
  Decomposition product(std::string const& a,
                        std::string const& b) const override {
    std::string const x = a == "e" ? "" : a;
    std::string const y = b == "e" ? "" : b;
    Decomposition out;
    for (std::size_t k = 0; k <= std::min(x.size(), y.size()); ++k) {
      std::string const g = x.substr(x.size() - k);
      if (y.compare(0, k, conj_word(g)) != 0) break;
      std::string w = x.substr(0, x.size() - k) + y.substr(k);
      out.push_back({w.empty() ? "e" : w, 1});
    }
    std::sort(out.begin(), out.end(), [&](auto const& s, auto const& t) {
      return precedes(s.label, t.label);
    });
    return out;
  }

  // Shortlex with u < v; "e" first.
  bool precedes(std::string const& a, std::string const& b) const override {
    std::size_t const la = a == "e" ? 0 : a.size();
    std::size_t const lb = b == "e" ? 0 : b.size();
    if (la != lb) return la < lb;
    return la != 0 && a < b;
  }

 private:
  unsigned n_;
};

// ---- Z ---------------------------------------------------------------------

class IntegerGroupRules final : public FusionRules {
 public:
  std::string name() const override { return "zring"; }
  std::string unit() const override { return "z^0"; }
  std::vector<std::string> generators() const override { return {"z^1", "z^-1"}; }
  bool contains(std::string const& l) const override {
    return l.size() > 2 && l.compare(0, 2, "z^") == 0 &&
           parse_int(std::string_view(l).substr(2)).has_value();
  }
  std::string dual(std::string const& l) const override { return label(-power(l)); }
  Natural dim(std::string const&) const override { return 1; }
  Decomposition product(std::string const& a,
                        std::string const& b) const override {
    return {{label(power(a) + power(b)), 1}};
  }
  bool precedes(std::string const& a, std::string const& b) const override {
    return power(a) < power(b);
  }

  static std::string label(long long k) { return "z^" + std::to_string(k); }
  static long long power(std::string const& l) {
    return *parse_int(std::string_view(l).substr(2));
  }
};

// ---- label helpers for products ------------------------------------------

// Splits text at top-level occurrences of sep, ignoring separators nested in
// () or [].
std::vector<std::string> split_top(std::string const& text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(std::move(cur));
  return out;
}

// ---- direct product ------------------------------------------------------

std::optional<std::pair<std::string, std::string>> split_pair(std::string const& l) {
  if (l.size() < 5 || l.front() != '(' || l.back() != ')') return std::nullopt;
  auto parts = split_top(l.substr(1, l.size() - 2), ',');
  if (parts.size() != 2) return std::nullopt;
  return std::pair{parts[0], parts[1]};
}

std::string pair_label(std::string const& a, std::string const& b) {
  return "(" + a + "," + b + ")";
}

class DirectProductRules final : public FusionRules {
 public:
  DirectProductRules(FusionRing r1, FusionRing r2)
      : r1_(std::move(r1)), r2_(std::move(r2)) {}

  std::string name() const override {
    return "prod:" + r1_.name() + "+" + r2_.name();
  }
  std::string unit() const override {
    return pair_label(r1_.unit_label(), r2_.unit_label());
  }
  std::vector<std::string> generators() const override {
    std::vector<std::string> out;
    for (auto const& g : r1_.generators()) out.push_back(pair_label(g, r2_.unit_label()));
    for (auto const& h : r2_.generators()) out.push_back(pair_label(r1_.unit_label(), h));
    return out;
  }
  bool contains(std::string const& l) const override {
    auto p = split_pair(l);
    return p && r1_.contains(p->first) && r2_.contains(p->second);
  }
  std::string dual(std::string const& l) const override {
    auto p = *split_pair(l);
    return pair_label(r1_.rules().dual(p.first), r2_.rules().dual(p.second));
  }
  Natural dim(std::string const& l) const override {
    auto p = *split_pair(l);
    return r1_.rules().dim(p.first) * r2_.rules().dim(p.second);
  }
  Decomposition product(std::string const& a,
                        std::string const& b) const override {
    auto x = *split_pair(a);
    auto y = *split_pair(b);
    Decomposition out;
    for (auto const& s : r1_.rules().product(x.first, y.first))
      for (auto const& t : r2_.rules().product(x.second, y.second))
        out.push_back({pair_label(s.label, t.label), s.mult * t.mult});
    return out;
  }
  bool precedes(std::string const& a, std::string const& b) const override {
    auto x = *split_pair(a);
    auto y = *split_pair(b);
    if (x.first != y.first) return r1_.rules().precedes(x.first, y.first);
    return x.second != y.second && r2_.rules().precedes(x.second, y.second);
  }

 private:
  FusionRing r1_, r2_;
};

// ---- free product --------------------------------------------------------

struct Letter {
  int factor;  // 1 or 2
  std::string label;

  friend bool operator==(Letter const&, Letter const&) = default;
};
using Word = std::vector<Letter>;

bool needs_brackets(std::string const& l) {
  return l.find_first_of("*#[]") != std::string::npos;
}

std::string word_label(Word const& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += needs_brackets(w[i].label) ? "[" + w[i].label + "]" : w[i].label;
    out += '#' + std::to_string(w[i].factor);
  }
  return out;
}

std::optional<Word> parse_word(std::string const& l) {
  if (l == "e") return Word{};
  Word out;
  for (auto const& part : split_top(l, '*')) {
    auto hash = part.rfind('#');
    if (hash == std::string::npos || hash + 2 != part.size()) return std::nullopt;
    char const tag = part[hash + 1];
    if (tag != '1' && tag != '2') return std::nullopt;
    std::string label = part.substr(0, hash);
    if (!label.empty() && label.front() == '[') {
      if (label.back() != ']') return std::nullopt;
      label = label.substr(1, label.size() - 2);
    } else if (needs_brackets(label)) {
      return std::nullopt;
    }
    if (label.empty()) return std::nullopt;
    out.push_back({tag - '0', std::move(label)});
  }
  return out;
}

class FreeProductRules final : public FusionRules {
 public:
  FreeProductRules(FusionRing r1, FusionRing r2)
      : r1_(std::move(r1)), r2_(std::move(r2)) {}

  std::string name() const override {
    return "free:" + r1_.name() + "+" + r2_.name();
  }
  std::string unit() const override { return "e"; }
  std::vector<std::string> generators() const override {
    std::vector<std::string> out;
    for (int f : {1, 2})
      for (auto const& g : factor(f).generators())
        out.push_back(word_label({{f, g}}));
    return out;
  }

  bool contains(std::string const& l) const override {
    auto w = parse_word(l);
    if (!w) return false;
    for (std::size_t i = 0; i < w->size(); ++i) {
      auto const& x = (*w)[i];
      if (i && (*w)[i - 1].factor == x.factor) return false;
      auto const& r = factor(x.factor);
      if (!r.contains(x.label) || x.label == r.unit_label()) return false;
    }
    return word_label(*w) == l;
  }

  std::string dual(std::string const& l) const override {
    Word w = *parse_word(l);
    std::reverse(w.begin(), w.end());
    for (auto& x : w) x.label = factor(x.factor).rules().dual(x.label);
    return word_label(w);
  }

  Natural dim(std::string const& l) const override {
    Natural d = 1;
    Word const w = *parse_word(l);
    for (auto const& x : w) d *= factor(x.factor).rules().dim(x.label);
    return d;
  }

  Decomposition product(std::string const& a,
                        std::string const& b) const override {
    Word const s = *parse_word(a);
    Word const t = *parse_word(b);
    // Recursion strips k letters off the end of s and the start of t.
    std::map<std::size_t, std::map<std::string, Natural>> memo;
    auto const& sums = fuse(s, t, 0, memo);
    Decomposition out;
    for (auto const& [label, m] : sums) out.push_back({label, m});
    return normalize(*this, std::move(out));
  }

  // Shortlex over letters ordered by (factor, factor order).
  bool precedes(std::string const& a, std::string const& b) const override {
    Word const x = *parse_word(a);
    Word const y = *parse_word(b);
    if (x.size() != y.size()) return x.size() < y.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == y[i]) continue;
      if (x[i].factor != y[i].factor) return x[i].factor < y[i].factor;
      return factor(x[i].factor).rules().precedes(x[i].label, y[i].label);
    }
    return false;
  }

 private:
  FusionRing const& factor(int f) const { return f == 1 ? r1_ : r2_; }

  std::map<std::string, Natural> const& fuse(
      Word const& s, Word const& t, std::size_t k,
      std::map<std::size_t, std::map<std::string, Natural>>& memo) const {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    std::map<std::string, Natural> out;
    std::size_t const ls = s.size() - k;  // letters of s still in play
    auto head = [&] { return Word(s.begin(), s.begin() + ls); };
    auto tail = [&] { return Word(t.begin() + k, t.end()); };
    if (ls == 0 || k == t.size() || s[ls - 1].factor != t[k].factor) {
      Word w = head();
      Word const rest = tail();
      w.insert(w.end(), rest.begin(), rest.end());
      out[word_label(w)] = 1;
      return memo[k] = std::move(out);
    }
    int const f = t[k].factor;
    auto const& r = factor(f);
    for (auto const& c : r.rules().product(s[ls - 1].label, t[k].label)) {
      if (c.label == r.unit_label()) {
        for (auto const& [label, m] : fuse(s, t, k + 1, memo))
          out[label] += c.mult * m;
      } else {
        Word w(s.begin(), s.begin() + ls - 1);
        w.push_back({f, c.label});
        w.insert(w.end(), t.begin() + k + 1, t.end());
        out[word_label(w)] += c.mult;
      }
    }
    return memo[k] = std::move(out);
  }

  FusionRing r1_, r2_;
};

// ---- finite fixtures -----------------------------------------------------

GroupPresentationInput table_input(
    std::vector<std::string> elements,
    std::function<std::size_t(std::size_t, std::size_t)> const& mult) {
  GroupPresentationInput g;
  g.elements = std::move(elements);
  g.identity = g.elements.front();
  for (std::size_t a = 0; a < g.elements.size(); ++a) {
    g.table.emplace_back();
    for (std::size_t b = 0; b < g.elements.size(); ++b)
      g.table.back().push_back(g.elements[mult(a, b)]);
  }
  return g;
}

std::string power_label(std::string const& base, unsigned k) {
  if (k == 0) return "1";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

}  // namespace

GroupTable group_table(GroupPresentationInput const& g) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    if (!index.emplace(g.elements[i], i).second)
      throw NotAGroup("duplicate element '" + g.elements[i] + "'");
  if (!index.contains(g.identity))
    throw NotAGroup("identity '" + g.identity + "' is not an element");
  std::size_t const n = g.elements.size();
  if (g.table.size() != n) throw NotAGroup("table has wrong number of rows");
  std::vector<std::vector<std::size_t>> mult(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (g.table[a].size() != n)
      throw NotAGroup("row '" + g.elements[a] + "' has wrong length");
    for (auto const& x : g.table[a]) {
      auto it = index.find(x);
      if (it == index.end()) throw NotAGroup("table entry '" + x + "' is not an element");
      mult[a].push_back(it->second);
    }
  }
  auto table = GroupTable::from_mult(g.elements, std::move(mult));
  if (table.names[table.identity] != g.identity)
    throw NotAGroup("'" + g.identity + "' is not the identity of the table");
  return table;
}

FusionRing group_ring(GroupPresentationInput const& g, std::string name) {
  GroupTable const t = group_table(g);
  std::vector<BasisElement> basis;
  std::map<std::string, std::string> dual;
  std::vector<FusionEntry> fusion;
  for (std::size_t a = 0; a < t.order(); ++a) {
    basis.push_back({t.names[a], 1});
    dual[t.names[a]] = t.names[t.inverse[a]];
    for (std::size_t b = 0; b < t.order(); ++b)
      fusion.push_back({t.names[a], t.names[b], t.names[t(a, b)], 1});
  }
  return FusionRing::make_explicit(std::move(name), std::move(basis), g.identity,
                                   dual, fusion);
}

FusionRing rep_ring_char_table(std::string name, std::vector<BasisElement> irreps,
                               std::vector<FusionEntry> const& fusion) {
  if (irreps.empty()) throw MalformedRing("no irreducibles");
  std::string const unit = irreps.front().label;
  std::map<std::string, std::vector<std::string>> to_unit;
  for (auto const& e : fusion)
    if (e.c == unit && e.n == 1) to_unit[e.a].push_back(e.b);

  ValidationReport bad;
  std::map<std::string, std::string> dual;
  for (auto const& irr : irreps) {
    auto const& cands = to_unit[irr.label];
    if (cands.size() == 1)
      dual[irr.label] = cands.front();
    else
      bad.violations.push_back(
          {Axiom::Duality, {irr.label},
           std::to_string(cands.size()) + " candidates b with N_ab^unit = 1"});
  }
  if (!bad.ok()) throw AxiomViolation(bad);

  auto ring = FusionRing::make_explicit(std::move(name), std::move(irreps), unit,
                                        dual, fusion);
  auto report = validate_ring(ring);
  if (!report.ok()) throw AxiomViolation(std::move(report));
  return ring;
}

FusionRing su2_ring() {
  return FusionRing::make_generated(std::make_shared<SpinRules>('V', false));
}

FusionRing so3_ring() {
  return FusionRing::make_generated(std::make_shared<SpinRules>('W', true));
}

FusionRing au_word_ring(unsigned n) {
  if (n < 2) throw std::invalid_argument("A_u(n) needs n >= 2");
  return FusionRing::make_generated(std::make_shared<FreeUnitaryRules>(n));
}

FusionRing integer_group_ring() {
  return FusionRing::make_generated(std::make_shared<IntegerGroupRules>());
}

GroupPresentationInput cyclic_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  std::vector<std::string> names;
  for (unsigned k = 0; k < n; ++k) names.push_back(power_label("g", k));
  return table_input(names, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

GroupPresentationInput klein_group() {
  return table_input({"1", "a", "b", "ab"},
                     [](std::size_t x, std::size_t y) { return x ^ y; });
}

GroupPresentationInput s3_group() {
  // r^i s^j at index i + 3j; (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b+d).
  return table_input({"e", "r", "r^2", "s", "rs", "r^2s"},
                     [](std::size_t x, std::size_t y) {
                       std::size_t const a = x % 3, b = x / 3, c = y % 3, d = y / 3;
                       std::size_t const i = (b ? a + 3 - c : a + c) % 3;
                       return i + 3 * ((b + d) % 2);
                     });
}

FusionRing rep_s3() {
  return rep_ring_char_table(
      "rep_s3", {{"1", 1}, {"sgn", 1}, {"rho", 2}},
      {{"1", "1", "1", 1},       {"1", "sgn", "sgn", 1},   {"1", "rho", "rho", 1},
       {"sgn", "1", "sgn", 1},   {"sgn", "sgn", "1", 1},   {"sgn", "rho", "rho", 1},
       {"rho", "1", "rho", 1},   {"rho", "sgn", "rho", 1}, {"rho", "rho", "1", 1},
       {"rho", "rho", "sgn", 1}, {"rho", "rho", "rho", 1}});
}

FusionRing rep_z4() {
  std::vector<BasisElement> irreps;
  std::vector<FusionEntry> fusion;
  for (int a = 0; a < 4; ++a) {
    irreps.push_back({"chi" + std::to_string(a), 1});
    for (int b = 0; b < 4; ++b)
      fusion.push_back({"chi" + std::to_string(a), "chi" + std::to_string(b),
                        "chi" + std::to_string((a + b) % 4), 1});
  }
  return rep_ring_char_table("rep_z4", std::move(irreps), fusion);
}

FusionRing trivial_ring() {
  return FusionRing::make_explicit("trivial", {{"1", 1}}, "1", {{"1", "1"}},
                                   {{"1", "1", "1", 1}});
}

FusionRing direct_product(FusionRing const& r1, FusionRing const& r2) {
  auto rules = std::make_shared<DirectProductRules>(r1, r2);
  if (!r1.is_explicit() || !r2.is_explicit())
    return FusionRing::make_generated(std::move(rules));

  std::vector<BasisElement> basis;
  std::map<std::string, std::string> dual;
  std::vector<FusionEntry> fusion;
  for (std::size_t i = 0; i < r1.size(); ++i)
    for (std::size_t j = 0; j < r2.size(); ++j) {
      auto const& x = r1.element(i);
      auto const& y = r2.element(j);
      std::string const l = pair_label(x.label, y.label);
      basis.push_back({l, x.dim * y.dim});
      dual[l] = pair_label(r1.element(r1.dual(i)).label, r2.element(r2.dual(j)).label);
    }
  for (auto const& a : basis)
    for (auto const& b : basis)
      for (auto const& c : rules->product(a.label, b.label))
        fusion.push_back({a.label, b.label, c.label, c.mult});
  return FusionRing::make_explicit(rules->name(), std::move(basis), rules->unit(),
                                   dual, fusion);
}

FusionRing free_product(FusionRing const& r1, FusionRing const& r2) {
  return FusionRing::make_generated(std::make_shared<FreeProductRules>(r1, r2));
}

std::vector<std::string> catalog_names() {
  return {"su2",   "so3", "au", "zring", "trivial", "z2",     "z3",
          "z4",    "klein", "s3", "rep_s3", "rep_z4"};
}

std::vector<NamedGroup> named_groups() {
  return {{"S3", group_table(s3_group())}};
}

FusionRing catalog_ring(std::string const& name, std::filesystem::path const& base) {
  auto resolve = [&](std::string const& file) {
    std::filesystem::path p(file);
    return p.is_relative() && !base.empty() ? base / p : p;
  };
  auto binary = [&](std::string const& rest, bool free) {
    auto plus = rest.find('+');
    if (plus == std::string::npos)
      throw MalformedInput("expected NAME+NAME in '" + name + "'");
    auto a = catalog_ring(rest.substr(0, plus), base);
    auto b = catalog_ring(rest.substr(plus + 1), base);
    return free ? free_product(a, b) : direct_product(a, b);
  };

  if (name == "su2") return su2_ring();
  if (name == "so3") return so3_ring();
  if (name == "au") return au_word_ring();
  if (name.rfind("au:", 0) == 0) {
    auto n = parse_int(std::string_view(name).substr(3));
    if (!n || *n < 2) throw MalformedInput("bad A_u parameter in '" + name + "'");
    return au_word_ring(static_cast<unsigned>(*n));
  }
  if (name == "zring") return integer_group_ring();
  if (name == "trivial") return trivial_ring();
  if (name == "klein") return group_ring(klein_group(), "klein");
  if (name == "s3") return group_ring(s3_group(), "s3");
  if (name == "rep_s3") return rep_s3();
  if (name == "rep_z4") return rep_z4();
  if (name.size() > 1 && name[0] == 'z') {
    auto n = parse_int(std::string_view(name).substr(1));
    if (n && *n >= 1 && *n <= 1000)
      return group_ring(cyclic_group(static_cast<unsigned>(*n)), name);
  }
  if (name.rfind("group:", 0) == 0) {
    auto path = resolve(name.substr(6));
    return group_ring(load_group(path), path.stem().string());
  }
  if (name.rfind("repring:", 0) == 0) return load_ring(resolve(name.substr(8)));
  if (name.rfind("free:", 0) == 0) return binary(name.substr(5), true);
  if (name.rfind("prod:", 0) == 0) return binary(name.substr(5), false);
  throw MalformedInput("unknown catalog ring '" + name + "'");
}

}  // namespace fusion
