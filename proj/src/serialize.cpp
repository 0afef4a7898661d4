#include "fusion/serialize.hpp"

#include <set>
#include <sstream>

namespace fusion {

namespace {

Json labels_of(Truncation const& t, std::vector<std::size_t> const& indices) {
  Json out = Json::array();
  for (std::size_t i : indices) out.push_back(t.label(i));
  return out;
}

std::string quoted(std::string const& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(Presentation const& p) {
  Json out;
  out["generators"] = p.generators;
  out["relations"] = p.relations();
  out["identifications"] = p.identifications;
  return out;
}

Json to_json(GroupDescriptor const& d) {
  Json out;
  if (d.order)
    out["order"] = *d.order;
  else
    out["order"] = "infinite";
  out["abelian"] = d.is_abelian;
  if (d.abelian_invariants) {
    out["invariants"] = *d.abelian_invariants;
  } else {
    if (d.exponent) out["exponent"] = *d.exponent;
    if (d.center_size) out["center_size"] = *d.center_size;
    if (!d.name.empty()) out["name"] = d.name;
    if (d.presentation) out["presentation"] = to_json(*d.presentation);
  }
  if (!d.isomorphic_to.empty()) out["isomorphic_to"] = d.isomorphic_to;
  out["flag"] = d.flag.str();
  return out;
}

Json to_json(GroupTable const& g) {
  Json out;
  out["elements"] = g.names;
  out["identity"] = g.names[g.identity];
  Json table = Json::array();
  for (auto const& row : g.mult) {
    Json r = Json::array();
    for (std::size_t x : row) r.push_back(g.names[x]);
    table.push_back(std::move(r));
  }
  out["table"] = std::move(table);
  return out;
}

Json to_json(ValidationReport const& r) {
  Json out;
  out["ok"] = r.ok();
  if (r.checked_depth)
    out["checked_depth"] = *r.checked_depth;
  Json vs = Json::array();
  for (auto const& v : r.violations) {
    Json j;
    j["axiom"] = to_string(v.axiom);
    j["witness"] = v.witness;
    j["detail"] = v.detail;
    vs.push_back(std::move(j));
  }
  out["violations"] = std::move(vs);
  return out;
}

Json to_json(RestrictionReport const& r) {
  Json out;
  out["ok"] = r.ok();
  if (r.checked_depth) out["checked_depth"] = *r.checked_depth;
  Json vs = Json::array();
  for (auto const& v : r.violations) {
    Json j;
    j["invariant"] = v.invariant;
    j["witness"] = v.witness;
    j["detail"] = v.detail;
    vs.push_back(std::move(j));
  }
  out["violations"] = std::move(vs);
  return out;
}

Json to_json(Truncation const& t, Subobject const& s) {
  return labels_of(t, s.members);
}

Json to_json(Truncation const& t, CosetPartition const& p) {
  Json out = Json::array();
  for (auto const& block : p.blocks) out.push_back(labels_of(t, block));
  return out;
}

Json to_json(Truncation const& t, CentralityResult const& r) {
  Json out;
  out["central"] = r.central;
  out["cosets"] = to_json(t, r.cosets);
  if (r.witness) {
    Json w;
    w["a"] = t.label(r.witness->a);
    w["b"] = t.label(r.witness->b);
    Json blocks = Json::array();
    for (std::size_t b : r.witness->blocks) blocks.push_back(block_name(t, r.cosets, b));
    w["cosets"] = std::move(blocks);
    w["reason"] = r.witness->reason;
    out["witness"] = std::move(w);
  }
  if (r.group) out["group"] = to_json(*r.group);
  return out;
}

Json to_json(Truncation const& t, RingAutomorphism const& a) {
  Json out = Json::object();
  for (std::size_t i = 0; i < a.perm.size(); ++i) out[t.label(i)] = t.label(a.perm[i]);
  return out;
}

std::string merge_graph_dot(Truncation const& t, CosetPartition const& p,
                            Json const& payload) {
  std::ostringstream out;
  out << "// payload: " << payload.dump() << "\n";
  out << "graph merge {\n";
  for (std::size_t b = 0; b < p.size(); ++b) {
    out << "  subgraph cluster_" << b << " {\n";
    out << "    label=" << quoted(block_name(t, p, b)) << ";\n";
    for (std::size_t x : p.blocks[b]) out << "    " << quoted(t.label(x)) << ";\n";
    out << "  }\n";
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < t.explored(); ++a)
    for (std::size_t b = 0; b < t.explored(); ++b) {
      auto terms = t.product(a, b);
      for (auto const& c : terms) {
        std::size_t const x = terms.front().index, y = c.index;
        if (x != y && t.is_explored(x) && t.is_explored(y))
          edges.emplace(std::min(x, y), std::max(x, y));
      }
    }
  for (auto [x, y] : edges)
    out << "  " << quoted(t.label(x)) << " -- " << quoted(t.label(y)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace fusion
