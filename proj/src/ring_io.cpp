#include "fusion/ring_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "fusion/errors.hpp"
#include "fusion/validate.hpp"

namespace fusion {

nlohmann::ordered_json natural_to_json(Natural const& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(n);
  return to_string(n);
}

Natural natural_from_json(nlohmann::json const& v, std::string const& what) {
  if (v.is_number_unsigned()) return Natural(v.get<std::uint64_t>());
  if (v.is_number_integer()) {
    auto const x = v.get<std::int64_t>();
    if (x < 0) throw MalformedFile(what + " is negative");
    return Natural(x);
  }
  if (v.is_string()) {
    try {
      return parse_natural(v.get<std::string>());
    } catch (std::invalid_argument const&) {
    }
  }
  throw MalformedFile(what + " is not a natural number");
}

nlohmann::ordered_json ring_to_json(FusionRing const& ring, int depth) {
  Truncation const t = ring.truncate(depth);
  nlohmann::ordered_json doc;
  doc["basis"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < t.explored(); ++i)
    doc["basis"].push_back({{"label", t.label(i)}, {"dim", natural_to_json(t.dim(i))}});
  doc["unit"] = t.label(t.unit());
  doc["dual"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < t.explored(); ++i) doc["dual"][t.label(i)] = t.label(t.dual(i));
  doc["fusion"] = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < t.explored(); ++a)
    for (std::size_t b = 0; b < t.explored(); ++b)
      for (auto const& c : t.product(a, b)) {
        if (!t.is_explored(c.index)) continue;
        doc["fusion"].push_back({{"a", t.label(a)},
                                 {"b", t.label(b)},
                                 {"c", t.label(c.index)},
                                 {"n", natural_to_json(c.mult)}});
      }
  if (auto k = t.depth_bound()) doc["truncated_at"] = *k;
  return doc;
}

std::string canonical_ring_text(FusionRing const& ring, int depth) {
  return ring_to_json(ring, depth).dump(2) + "\n";
}

namespace {

nlohmann::json const& field(nlohmann::json const& doc, char const* key) {
  if (!doc.is_object()) throw MalformedFile("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw MalformedFile(std::string("missing \"") + key + "\"");
  return *it;
}

std::string string_field(nlohmann::json const& doc, char const* key) {
  auto const& v = field(doc, key);
  if (!v.is_string()) throw MalformedFile(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

FusionRing ring_from_json(nlohmann::json const& doc, std::string name,
                          bool validate) {
  if (doc.is_object() && doc.contains("truncated_at"))
    throw MalformedFile("truncated ring dumps cannot be loaded as rings");
  std::vector<BasisElement> basis;
  auto const& b = field(doc, "basis");
  if (!b.is_array()) throw MalformedFile("\"basis\" must be an array");
  for (auto const& e : b)
    basis.push_back({string_field(e, "label"), natural_from_json(field(e, "dim"), "dim")});

  std::string const unit = string_field(doc, "unit");

  std::map<std::string, std::string> dual;
  auto const& d = field(doc, "dual");
  if (!d.is_object()) throw MalformedFile("\"dual\" must be an object");
  for (auto const& [k, v] : d.items()) {
    if (!v.is_string()) throw MalformedFile("dual entries must be strings");
    dual[k] = v.get<std::string>();
  }

  std::vector<FusionEntry> fusion;
  auto const& f = field(doc, "fusion");
  if (!f.is_array()) throw MalformedFile("\"fusion\" must be an array");
  for (auto const& e : f)
    fusion.push_back({string_field(e, "a"), string_field(e, "b"), string_field(e, "c"),
                      natural_from_json(field(e, "n"), "n")});

  FusionRing ring = [&] {
    try {
      return FusionRing::make_explicit(std::move(name), std::move(basis), unit, dual,
                                       fusion);
    } catch (MalformedRing const& e) {
      throw MalformedFile(e.what());
    }
  }();
  if (validate) {
    auto report = validate_ring(ring);
    if (!report.ok()) throw AxiomViolation(std::move(report));
  }
  return ring;
}

nlohmann::json read_json_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw MalformedFile("cannot open '" + path.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (nlohmann::json::exception const& e) {
    throw MalformedFile("'" + path.string() + "': " + e.what());
  }
}

FusionRing load_ring(std::filesystem::path const& path, bool validate) {
  return ring_from_json(read_json_file(path), path.stem().string(), validate);
}

void save_ring(FusionRing const& ring, std::filesystem::path const& path, int depth) {
  std::ofstream out(path);
  if (!out) throw MalformedFile("cannot write '" + path.string() + "'");
  out << canonical_ring_text(ring, depth);
}

GroupPresentationInput group_from_json(nlohmann::json const& doc) {
  GroupPresentationInput g;
  auto const& els = field(doc, "elements");
  if (!els.is_array()) throw MalformedFile("\"elements\" must be an array");
  for (auto const& e : els) {
    if (!e.is_string()) throw MalformedFile("elements must be strings");
    g.elements.push_back(e.get<std::string>());
  }
  g.identity = string_field(doc, "identity");
  auto const& rows = field(doc, "table");
  if (!rows.is_array()) throw MalformedFile("\"table\" must be an array");
  for (auto const& row : rows) {
    if (!row.is_array()) throw MalformedFile("table rows must be arrays");
    g.table.emplace_back();
    for (auto const& x : row) {
      if (!x.is_string()) throw MalformedFile("table entries must be strings");
      g.table.back().push_back(x.get<std::string>());
    }
  }
  return g;
}

GroupPresentationInput load_group(std::filesystem::path const& path) {
  return group_from_json(read_json_file(path));
}

}  // namespace fusion
