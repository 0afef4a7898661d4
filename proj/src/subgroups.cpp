#include "fusion/subgroups.hpp"

#include <sstream>

#include "fusion/catalog.hpp"
#include "fusion/errors.hpp"
#include "fusion/ring_io.hpp"

namespace fusion {

namespace {

using Multiset = std::map<std::string, Natural>;

std::string text(Decomposition const& d) {
  if (d.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += " + ";
    if (d[i].mult != 1) out += to_string(d[i].mult) + " ";
    out += d[i].label;
  }
  return out;
}

std::string text(Multiset const& m) {
  Decomposition d;
  for (auto const& [l, n] : m) d.push_back({l, n});
  return text(d);
}

long long spin_index(std::string const& label) {
  return std::stoll(label.substr(1));
}

}  // namespace

Decomposition RestrictionData::restrict(std::string const& label) const {
  Decomposition d = map(label);
  for (auto const& t : d)
    if (!target.contains(t.label))
      throw UnknownLabel("restriction of '" + label + "' mentions '" + t.label +
                         "', which is not in " + target.name());
  return normalize(target.rules(), std::move(d));
}

RestrictionData table_restriction(std::string name, FusionRing source,
                                  FusionRing target,
                                  std::map<std::string, Decomposition> table) {
  if (!source.is_explicit())
    throw MalformedInput("tabulated restrictions need an explicit source ring");
  for (auto const& [from, to] : table) {
    if (!source.find(from))
      throw MalformedInput("restriction maps unknown source label '" + from + "'");
    for (auto const& t : to)
      if (!target.contains(t.label))
        throw MalformedInput("restriction maps to unknown target label '" +
                             t.label + "'");
  }
  for (std::size_t i = 0; i < source.size(); ++i)
    if (!table.count(source.element(i).label))
      throw MalformedInput("restriction does not map '" + source.element(i).label +
                           "'");
  auto shared = std::make_shared<const std::map<std::string, Decomposition>>(
      std::move(table));
  return {std::move(name), std::move(source), std::move(target),
          [shared](std::string const& l) { return shared->at(l); }};
}

RestrictionData su2_weight_restriction() {
  return {"su2_weights", su2_ring(), integer_group_ring(),
          [](std::string const& l) {
            long long const n = spin_index(l);
            Decomposition out;
            for (long long k = -n; k <= n; k += 2)
              out.push_back({"z^" + std::to_string(k), 1});
            return out;
          }};
}

RestrictionData su2_parity_restriction() {
  return {"su2_parity", su2_ring(), group_ring(cyclic_group(2), "z2"),
          [](std::string const& l) {
            long long const n = spin_index(l);
            return Decomposition{{n % 2 ? "g" : "1", Natural(n + 1)}};
          }};
}

RestrictionData identity_restriction(FusionRing ring) {
  return {"identity", ring, ring,
          [](std::string const& l) { return Decomposition{{l, 1}}; }};
}

RestrictionData trivial_restriction(FusionRing ring) {
  FusionRing const target = trivial_ring();
  return {"trivial", ring, target, [ring](std::string const& l) {
            return Decomposition{{"1", ring.dim_of(l)}};
          }};
}

RestrictionData named_restriction(std::string const& rule, FusionRing source) {
  if (rule == "identity") return identity_restriction(std::move(source));
  if (rule == "trivial") return trivial_restriction(std::move(source));
  if (rule == "su2_weights" || rule == "su2_parity") {
    if (source.is_explicit() || source.name() != "su2")
      throw MalformedInput("rule '" + rule + "' needs source su2");
    return rule == "su2_weights" ? su2_weight_restriction() : su2_parity_restriction();
  }
  throw MalformedInput("unknown restriction rule '" + rule + "'");
}

namespace {

FusionRing resolve_ring(std::string const& ref, std::filesystem::path const& base) {
  std::filesystem::path p = ref;
  if (p.is_relative() && !base.empty()) p = base / p;
  if (std::filesystem::is_regular_file(p)) return load_ring(p);
  return catalog_ring(ref, base);
}

}  // namespace

RestrictionData restriction_from_json(nlohmann::json const& doc,
                                      std::filesystem::path const& base) {
  try {
    if (!doc.is_object()) throw MalformedFile("restriction file must be an object");
    FusionRing source = resolve_ring(doc.at("source").get<std::string>(), base);
    if (doc.contains("rule")) {
      RestrictionData r = named_restriction(doc.at("rule").get<std::string>(), source);
      if (doc.contains("target") &&
          doc.at("target").get<std::string>() != r.target.name())
        throw MalformedFile("rule '" + r.name + "' restricts to " + r.target.name());
      return r;
    }
    FusionRing target = resolve_ring(doc.at("target").get<std::string>(), base);
    std::map<std::string, Decomposition> table;
    for (auto const& entry : doc.at("map")) {
      std::string from = entry.at("from").get<std::string>();
      Decomposition to;
      for (auto const& t : entry.at("to"))
        to.push_back({t.at("label").get<std::string>(),
                      natural_from_json(t.at("n"), "restriction multiplicity")});
      if (!table.emplace(from, std::move(to)).second)
        throw MalformedFile("restriction maps '" + from + "' twice");
    }
    return table_restriction("table", std::move(source), std::move(target),
                             std::move(table));
  } catch (nlohmann::json::exception const& e) {
    throw MalformedFile(std::string("restriction file: ") + e.what());
  } catch (MalformedInput const& e) {
    throw MalformedFile(e.what());
  }
}

RestrictionData load_restriction(std::filesystem::path const& path) {
  return restriction_from_json(read_json_file(path), path.parent_path());
}

std::string RestrictionReport::summary() const {
  if (ok()) return "no violations";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    auto const& v = violations[i];
    out << (i ? "; " : "") << v.invariant;
    if (!v.witness.empty()) {
      out << " at (";
      for (std::size_t j = 0; j < v.witness.size(); ++j)
        out << (j ? ", " : "") << v.witness[j];
      out << ")";
    }
    if (!v.detail.empty()) out << ": " << v.detail;
  }
  return out.str();
}

RestrictionReport validate_restriction(RestrictionData const& r, int depth) {
  if (depth < 1) throw MalformedInput("depth must be >= 1");
  Truncation const t = r.source.truncate(depth);
  FusionRing const& h = r.target;
  RestrictionReport report;
  if (!t.complete()) report.checked_depth = depth;

  std::vector<std::optional<Decomposition>> image(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    try {
      image[i] = r.restrict(t.label(i));
    } catch (Error const& e) {
      report.violations.push_back({"target", {t.label(i)}, e.what()});
    }
  }
  if (!report.ok()) return report;

  auto const& unit_image = *image[t.unit()];
  if (unit_image != Decomposition{{h.unit_label(), 1}})
    report.violations.push_back({"unit", {t.label(t.unit())}, text(unit_image)});

  for (std::size_t a = 0; a < t.explored(); ++a) {
    Natural total = 0;
    for (auto const& x : *image[a]) total += x.mult * h.dim_of(x.label);
    if (total != t.dim(a))
      report.violations.push_back({"dimension", {t.label(a)},
                                   "dimensions sum to " + to_string(total) +
                                       ", expected " + to_string(t.dim(a))});

    Decomposition conj;
    for (auto const& x : *image[a]) conj.push_back({h.dual_label(x.label), x.mult});
    conj = normalize(h.rules(), std::move(conj));
    if (conj != *image[t.dual(a)])
      report.violations.push_back({"conjugation", {t.label(a)},
                                   text(*image[t.dual(a)]) + " != " + text(conj)});
  }

  for (std::size_t a = 0; a < t.explored(); ++a)
    for (std::size_t b = 0; b < t.explored(); ++b) {
      Multiset lhs, rhs;
      for (auto const& x : *image[a])
        for (auto const& y : *image[b])
          for (auto const& z : h.fuse(x.label, y.label))
            lhs[z.label] += x.mult * y.mult * z.mult;
      for (auto const& c : t.product(a, b))
        for (auto const& z : *image[c.index]) rhs[z.label] += c.mult * z.mult;
      if (lhs != rhs)
        report.violations.push_back({"multiplicativity", {t.label(a), t.label(b)},
                                     text(lhs) + " != " + text(rhs)});
    }
  return report;
}

namespace {

void require_valid(RestrictionData const& r, int depth) {
  auto report = validate_restriction(r, depth);
  if (!report.ok()) throw InvalidRestriction(report.summary());
}

}  // namespace

NormalityResult is_normal(RestrictionData const& r, int depth) {
  require_valid(r, depth);
  Truncation const t = r.source.truncate(depth);
  NormalityResult out;
  if (!t.complete()) out.depth = depth;
  std::string const unit = r.target.unit_label();
  for (std::size_t a = 0; a < t.explored(); ++a) {
    Natural m = 0;
    for (auto const& x : r.restrict(t.label(a)))
      if (x.label == unit) m = x.mult;
    if (m != 0 && m != t.dim(a)) {
      out.normal = false;
      out.witness = t.label(a);
      out.unit_multiplicity = m;
      out.dim = t.dim(a);
      break;
    }
  }
  return out;
}

CentralSubgroupResult is_central_subgroup(RestrictionData const& r, int depth) {
  require_valid(r, depth);
  Truncation const t = r.source.truncate(depth);
  CentralSubgroupResult out;
  if (!t.complete()) out.depth = depth;
  for (std::size_t a = 0; a < t.explored(); ++a) {
    Decomposition const d = r.restrict(t.label(a));
    if (d.size() != 1) {
      out.central = false;
      out.witness = t.label(a);
      out.reason = "restricts to " + std::to_string(d.size()) +
                   " distinct irreducibles: " + text(d);
      break;
    }
    if (r.target.dim_of(d[0].label) != 1) {
      out.central = false;
      out.witness = t.label(a);
      out.reason = "restricts to " + text(d) + ", which is not grouplike";
      break;
    }
    out.assignment.emplace_back(t.label(a), d[0].label);
  }
  if (!out.central) out.assignment.clear();
  return out;
}

Subobject trivial_restriction_subobject(RestrictionData const& r,
                                        Truncation const& basis) {
  require_valid(r, basis.depth_bound().value_or(1));
  Subobject sigma;
  for (std::size_t a = 0; a < basis.explored(); ++a)
    if (r.restrict(basis.label(a)) ==
        Decomposition{{r.target.unit_label(), basis.dim(a)}})
      sigma.members.push_back(a);
  if (auto defect = subobject_defect(basis, sigma))
    throw InvalidRestriction("trivially restricting part is not a subobject: " +
                             *defect);
  return sigma;
}

GroupTable grouplikes(FusionRing const& ring, int depth) {
  Truncation const t = ring.truncate(depth);
  std::vector<std::size_t> g;
  std::vector<std::size_t> position(t.size(), t.size());
  for (std::size_t a = 0; a < t.explored(); ++a)
    if (t.dim(a) == 1) {
      position[a] = g.size();
      g.push_back(a);
    }

  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> mult(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    names.push_back(t.label(g[i]));
    for (std::size_t j = 0; j < g.size(); ++j) {
      auto p = t.product(g[i], g[j]);
      if (p.size() != 1 || p[0].mult != 1 || t.dim(p[0].index) != 1)
        throw InternalInconsistency("product of grouplikes " + t.label(g[i]) +
                                    " and " + t.label(g[j]) +
                                    " is not a grouplike");
      if (!t.is_explored(p[0].index))
        throw DepthExceeded("grouplike " + t.label(p[0].index) +
                            " lies beyond depth " + std::to_string(depth));
      mult[i].push_back(position[p[0].index]);
    }
  }
  try {
    return GroupTable::from_mult(std::move(names), std::move(mult));
  } catch (NotAGroup const& e) {
    throw InternalInconsistency(std::string("grouplikes: ") + e.what());
  }
}

}  // namespace fusion
