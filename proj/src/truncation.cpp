#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "fusion/errors.hpp"
#include "fusion/parallel.hpp"
#include "fusion/ring.hpp"

namespace fusion {

struct Truncation::Data {
  FusionRing ring;
  std::size_t explored = 0;
  std::optional<int> depth_bound;
  std::vector<std::string> labels;
  std::vector<Natural> dims;
  std::vector<std::size_t> duals;
  std::vector<int> depths;
  std::unordered_map<std::string, std::size_t> index;
  std::size_t unit = 0;
  std::vector<std::size_t> generators;
  std::vector<std::vector<IndexedTerm>> products;  // explored x explored
};

namespace {

std::shared_ptr<Truncation::Data> explicit_truncation(FusionRing const& ring) {
  auto d = std::make_shared<Truncation::Data>(Truncation::Data{ring});
  std::size_t const n = ring.size();
  d->explored = n;
  d->unit = ring.unit();
  for (std::size_t i = 0; i < n; ++i) {
    d->labels.push_back(ring.element(i).label);
    d->dims.push_back(ring.element(i).dim);
    d->duals.push_back(ring.dual(i));
    d->depths.push_back(i == ring.unit() ? 0 : 1);
    d->index.emplace(d->labels.back(), i);
    if (i != ring.unit()) d->generators.push_back(i);
  }
  d->products.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto span = ring.product(a, b);
      d->products[a * n + b].assign(span.begin(), span.end());
    }
  return d;
}

class Interner {
 public:
  explicit Interner(Truncation::Data& d) : d_(d) {}

  std::size_t intern(std::string const& label, int depth) {
    auto it = d_.index.find(label);
    if (it != d_.index.end()) return it->second;
    std::size_t const i = d_.labels.size();
    d_.labels.push_back(label);
    d_.dims.push_back(d_.ring.rules().dim(label));
    d_.depths.push_back(depth);
    d_.duals.push_back(i);
    d_.index.emplace(label, i);
    return i;
  }

  // Frontier labels come with their duals so that dual() is total.
  std::size_t intern_with_dual(std::string const& label, int depth) {
    bool const fresh = !d_.index.contains(label);
    std::size_t const i = intern(label, depth);
    if (fresh) {
      std::string const bar = d_.ring.rules().dual(label);
      std::size_t const j = intern(bar, depth);
      d_.duals[i] = j;
      d_.duals[j] = i;
    }
    return i;
  }

 private:
  Truncation::Data& d_;
};

std::shared_ptr<Truncation::Data> generated_truncation(FusionRing const& ring,
                                                       int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  auto d = std::make_shared<Truncation::Data>(Truncation::Data{ring});
  d->depth_bound = depth;
  auto const& rules = ring.rules();
  Interner interner(*d);

  d->unit = interner.intern(rules.unit(), 0);
  auto const gens = rules.generators();
  std::vector<std::size_t> level{d->unit};
  for (int k = 1; k <= depth; ++k) {
    std::vector<std::size_t> next;
    for (std::size_t x : level) {
      for (auto const& g : gens) {
        for (auto const& t : rules.product(d->labels[x], g)) {
          if (d->index.contains(t.label)) continue;
          next.push_back(interner.intern(t.label, k));
        }
      }
    }
    level = std::move(next);
  }
  d->explored = d->labels.size();
  for (std::size_t i = 0; i < d->explored; ++i) {
    auto it = d->index.find(rules.dual(d->labels[i]));
    if (it == d->index.end() || it->second >= d->explored)
      throw InternalInconsistency("explored basis of '" + rules.name() +
                                  "' is not closed under dual at '" +
                                  d->labels[i] + "'");
    d->duals[i] = it->second;
  }
  for (auto const& g : gens) d->generators.push_back(d->index.at(g));

  std::size_t const n = d->explored;
  std::vector<Decomposition> raw(n * n);
  parallel_for(n * n, [&](std::size_t ij) {
    raw[ij] = rules.product(d->labels[ij / n], d->labels[ij % n]);
  });
  d->products.resize(n * n);
  for (std::size_t ij = 0; ij < n * n; ++ij) {
    auto& terms = d->products[ij];
    for (auto& t : raw[ij])
      terms.push_back({interner.intern_with_dual(t.label, -1), std::move(t.mult)});
    std::sort(terms.begin(), terms.end(),
              [](auto const& x, auto const& y) { return x.index < y.index; });
  }
  return d;
}

}  // namespace

Truncation FusionRing::truncate(int depth) const {
  if (is_explicit()) return Truncation(explicit_truncation(*this));
  return Truncation(generated_truncation(*this, depth));
}

FusionRing const& Truncation::ring() const { return data_->ring; }
std::size_t Truncation::explored() const { return data_->explored; }
std::size_t Truncation::size() const { return data_->labels.size(); }
bool Truncation::complete() const { return !data_->depth_bound.has_value(); }
std::optional<int> Truncation::depth_bound() const { return data_->depth_bound; }
std::string const& Truncation::label(std::size_t i) const {
  return data_->labels.at(i);
}
Natural const& Truncation::dim(std::size_t i) const { return data_->dims.at(i); }
std::size_t Truncation::dual(std::size_t i) const { return data_->duals.at(i); }
std::size_t Truncation::unit() const { return data_->unit; }
int Truncation::depth(std::size_t i) const { return data_->depths.at(i); }

std::optional<std::size_t> Truncation::find(std::string const& label) const {
  auto it = data_->index.find(label);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> const& Truncation::generators() const {
  return data_->generators;
}

std::span<const IndexedTerm> Truncation::product(std::size_t a,
                                                 std::size_t b) const {
  std::size_t const n = data_->explored;
  if (a >= n || b >= n)
    throw DepthExceeded("product of '" + label(a) + "' and '" + label(b) +
                        "' lies outside the explored basis");
  return data_->products[a * n + b];
}

Natural Truncation::multiplicity(std::size_t a, std::size_t b,
                                 std::size_t c) const {
  auto terms = product(a, b);
  auto it = std::lower_bound(
      terms.begin(), terms.end(), c,
      [](IndexedTerm const& t, std::size_t i) { return t.index < i; });
  if (it == terms.end() || it->index != c) return 0;
  return it->mult;
}

std::vector<std::string> Truncation::labels(
    std::span<const std::size_t> indices) const {
  std::vector<std::string> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(label(i));
  return out;
}

}  // namespace fusion
