#include "cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fusion/automorph.hpp"
#include "fusion/catalog.hpp"
#include "fusion/central.hpp"
#include "fusion/errors.hpp"
#include "fusion/parallel.hpp"
#include "fusion/ring_io.hpp"
#include "fusion/serialize.hpp"
#include "fusion/subgroups.hpp"
#include "fusion/validate.hpp"

namespace fusion::cli {

namespace {

struct Options {
  std::string ring_file;
  std::string catalog;
  int depth = 6;
  std::string sigma;
  std::string sigma_file;
  std::string restriction;
  std::string format = "json";
  bool oracle_check = false;
  unsigned threads = 0;
  std::vector<std::string> word;
};

// Thrown for a failed --oracle-check.
struct CheckFailure : Error {
  using Error::Error;
};

class Command {
 public:
  Command(Options const& o, std::ostream& out, std::ostream& err)
      : o_(o), out_(out), err_(err) {}

  FusionRing ring(bool validate = true) const {
    if (!o_.ring_file.empty() == !o_.catalog.empty())
      throw MalformedInput("give exactly one of --ring and --catalog");
    if (!o_.catalog.empty()) return catalog_ring(o_.catalog);
    std::filesystem::path const p = o_.ring_file;
    if (std::filesystem::exists(p)) return load_ring(p, validate);
    // A bare catalog name is accepted in place of a file.
    return catalog_ring(o_.ring_file);
  }

  RestrictionData restriction() const {
    if (o_.restriction.empty()) throw MalformedInput("--restriction is required");
    RestrictionData r = load_restriction(o_.restriction);
    if (!o_.ring_file.empty() || !o_.catalog.empty()) {
      FusionRing const g = ring();
      bool const same =
          g.name() == r.source.name() ||
          (g.is_explicit() && r.source.is_explicit() &&
           ring_to_json(g) == ring_to_json(r.source));
      if (!same)
        throw MalformedInput("restriction source " + r.source.name() +
                             " does not match ring " + g.name());
    }
    return r;
  }

  Subobject sigma(Truncation const& t) const {
    std::vector<std::string> labels;
    if (!o_.sigma.empty() && !o_.sigma_file.empty())
      throw MalformedInput("give at most one of --sigma and --sigma-file");
    if (!o_.sigma_file.empty()) {
      auto doc = read_json_file(o_.sigma_file);
      if (!doc.is_array()) throw MalformedFile("sigma file must be a list of labels");
      for (auto const& l : doc) {
        if (!l.is_string()) throw MalformedFile("sigma file must be a list of labels");
        labels.push_back(l.get<std::string>());
      }
    } else if (!o_.sigma.empty()) {
      std::stringstream in(o_.sigma);
      for (std::string l; std::getline(in, l, ',');)
        if (!l.empty()) labels.push_back(l);
    } else {
      throw MalformedInput("--sigma or --sigma-file is required");
    }
    return subobject_from_labels(t, labels);
  }

  void emit(Json const& payload) const {
    out_ << payload.dump() << "\n";
  }

  bool json() const { return o_.format == "json"; }
  bool dot() const { return o_.format == "dot"; }

  void no_dot(std::string const& cmd) const {
    if (dot()) throw MalformedInput("--format dot is not available for " + cmd);
  }

  // Chain classes against the literal word enumeration.
  void oracle_check(Truncation const& t) const {
    if (!o_.oracle_check) return;
    if (!t.complete()) {
      err_ << "oracle check skipped: ring is not finite\n";
      return;
    }
    CosetPartition const fast = merge_closure(t);
    CosetPartition const slow = chain_oracle(t, 6);
    if (fast == slow) return;
    for (std::size_t a = 0; a < t.explored(); ++a)
      for (std::size_t b = a + 1; b < t.explored(); ++b) {
        bool const x = fast.block_of[a] == fast.block_of[b];
        bool const y = slow.block_of[a] == slow.block_of[b];
        if (x != y)
          throw CheckFailure("oracle check failed: " + t.label(a) + " and " +
                             t.label(b) + (x ? " are" : " are not") +
                             " merged, word enumeration says" +
                             (y ? " they are" : " they are not"));
      }
    throw CheckFailure("oracle check failed: partitions differ");
  }

  int validate() const {
    no_dot("validate");
    FusionRing const g = ring(false);
    ValidationReport const report = validate_ring(g, o_.depth);
    Json payload = to_json(report);
    if (json()) {
      emit(payload);
    } else {
      out_ << "ring: " << g.name() << "\n";
      if (report.checked_depth) out_ << "checked to depth " << *report.checked_depth << "\n";
      out_ << (report.ok() ? "valid" : "violations: " + report.summary()) << "\n";
    }
    return report.ok() ? kOk : kNegative;
  }

  int info() const {
    no_dot("info");
    FusionRing const g = ring();
    Truncation const t = g.truncate(o_.depth);
    Json payload;
    payload["name"] = g.name();
    payload["kind"] = g.is_explicit() ? "explicit" : "generated";
    if (!t.complete()) payload["depth"] = o_.depth;
    payload["explored"] = t.explored();
    payload["frontier"] = t.size() - t.explored();
    payload["unit"] = t.label(t.unit());
    payload["generators"] = t.labels(t.generators());
    Json basis = Json::array();
    for (std::size_t i = 0; i < t.explored(); ++i) {
      Json e;
      e["label"] = t.label(i);
      e["dim"] = natural_to_json(t.dim(i));
      e["dual"] = t.label(t.dual(i));
      if (!t.complete()) e["depth"] = t.depth(i);
      basis.push_back(std::move(e));
    }
    payload["basis"] = std::move(basis);
    if (json()) {
      emit(payload);
      return kOk;
    }
    out_ << "ring: " << g.name() << " ("
         << (g.is_explicit() ? "explicit" : "generated, depth " + std::to_string(o_.depth))
         << ")\n";
    out_ << "explored: " << t.explored() << ", frontier: " << t.size() - t.explored()
         << "\n";
    for (std::size_t i = 0; i < t.explored(); ++i)
      out_ << "  " << t.label(i) << "  dim " << to_string(t.dim(i)) << "  dual "
           << t.label(t.dual(i)) << "\n";
    return kOk;
  }

  int product() const {
    no_dot("product");
    if (o_.word.empty()) throw MalformedInput("product needs at least one label");
    FusionRing const g = ring();
    Decomposition const d = g.fuse_word(o_.word);
    Json terms = Json::array();
    for (auto const& t : d) {
      Json e;
      e["label"] = t.label;
      e["n"] = natural_to_json(t.mult);
      terms.push_back(std::move(e));
    }
    if (json()) {
      Json payload;
      payload["product"] = std::move(terms);
      emit(payload);
      return kOk;
    }
    for (std::size_t i = 0; i < d.size(); ++i)
      out_ << (i ? " + " : "") << (d[i].mult == 1 ? "" : to_string(d[i].mult) + " ")
           << d[i].label;
    out_ << "\n";
    return kOk;
  }

  void describe(GroupDescriptor const& d) const {
    out_ << "order: " << (d.order ? std::to_string(*d.order) : "infinite") << "\n";
    out_ << "abelian: " << (d.is_abelian ? "yes" : "no") << "\n";
    if (d.abelian_invariants) {
      out_ << "invariants: [";
      for (std::size_t i = 0; i < d.abelian_invariants->size(); ++i)
        out_ << (i ? ", " : "") << (*d.abelian_invariants)[i];
      out_ << "]\n";
    }
    if (!d.name.empty()) out_ << "name: " << d.name << "\n";
    if (d.presentation && !d.abelian_invariants) {
      out_ << "generators:";
      for (auto const& x : d.presentation->generators) out_ << " " << x;
      out_ << "\nrelations:";
      for (auto const& x : d.presentation->relations()) out_ << " " << x << ";";
      out_ << "\nidentifications:";
      for (auto const& x : d.presentation->identifications) out_ << " " << x << ";";
      out_ << "\n";
    }
    out_ << "flag: " << d.flag.str() << "\n";
  }

  int chain() const {
    FusionRing const g = ring();
    ChainGroup const c = chain_group(g, o_.depth, named_groups());
    oracle_check(c.basis);
    Json const payload = to_json(c.descriptor);
    if (json())
      emit(payload);
    else if (dot())
      out_ << merge_graph_dot(c.basis, c.quotient.cosets, payload);
    else
      describe(c.descriptor);
    return kOk;
  }

  int center() const {
    FusionRing const g = ring();
    ChainGroup const c = chain_group(g, o_.depth, named_groups());
    Subobject const z = center_subobject(c.basis);
    oracle_check(c.basis);
    bool const everything = z.size() == c.basis.explored();
    auto const& d = c.descriptor;
    Json payload;
    payload["center_subobject"] = to_json(c.basis, z);
    payload["entire_basis"] = everything;
    payload["chain_group"] = to_json(d);
    payload["flag"] = d.flag.str();
    if (json()) {
      emit(payload);
    } else if (dot()) {
      out_ << merge_graph_dot(c.basis, c.quotient.cosets, payload);
    } else {
      out_ << "center subobject = ";
      if (everything) {
        out_ << (c.basis.complete() ? "entire basis" : "entire explored basis");
      } else {
        out_ << "{";
        for (std::size_t i = 0; i < z.members.size(); ++i)
          out_ << (i ? ", " : "") << c.basis.label(z.members[i]);
        out_ << "}";
      }
      out_ << "; center group: ";
      if (d.order == 1u)
        out_ << "trivial";
      else if (!d.is_abelian)
        out_ << "dual of " << (d.name.empty() ? "a nonabelian group" : d.name);
      else
        out_ << (d.name.empty() ? "unnamed" : d.name);
      out_ << "\nflag: " << d.flag.str() << "\n";
    }
    return kOk;
  }

  int cosets() const {
    FusionRing const g = ring();
    Truncation const t = g.truncate(o_.depth);
    Subobject const s = sigma(t);
    CentralityResult const r = is_central_subobject(t, s);
    oracle_check(t);
    Json payload;
    payload["sigma"] = to_json(t, s);
    Json const result = to_json(t, r);
    for (auto const& [k, v] : result.items()) payload[k] = v;
    if (!t.complete()) payload["depth"] = o_.depth;
    if (json()) {
      emit(payload);
    } else if (dot()) {
      out_ << merge_graph_dot(t, r.cosets, payload);
    } else {
      for (std::size_t b = 0; b < r.cosets.size(); ++b) {
        out_ << block_name(t, r.cosets, b) << ":";
        for (std::size_t x : r.cosets.blocks[b]) out_ << " " << t.label(x);
        out_ << "\n";
      }
      out_ << (r.central ? "central" : "not central") << "\n";
    }
    return kOk;
  }

  int central_subobjects() const {
    no_dot("central-subobjects");
    FusionRing const g = ring();
    Truncation const t = g.truncate(o_.depth);
    oracle_check(t);
    Json list = Json::array();
    for (auto const& s : enumerate_central_subobjects(t)) {
      CentralityResult const r = is_central_subobject(t, s);
      Json e;
      e["members"] = to_json(t, s);
      e["cosets"] = r.cosets.size();
      if (r.group) e["quotient"] = to_json(identify_group(*r.group, named_groups()));
      list.push_back(std::move(e));
    }
    Subobject const z = center_subobject(t);
    if (json()) {
      Json payload;
      payload["central_subobjects"] = list;
      payload["center_subobject"] = to_json(t, z);
      emit(payload);
      return kOk;
    }
    for (auto const& e : list) out_ << e["members"].dump() << "  cosets " << e["cosets"] << "\n";
    out_ << "center subobject = " << to_json(t, z).dump() << "\n";
    return kOk;
  }

  int is_normal() const {
    no_dot("is-normal");
    RestrictionData const r = restriction();
    NormalityResult const n = fusion::is_normal(r, o_.depth);
    Json payload;
    payload["normal"] = n.normal;
    if (n.witness) {
      payload["witness"] = *n.witness;
      payload["unit_multiplicity"] = natural_to_json(n.unit_multiplicity);
      payload["dim"] = natural_to_json(n.dim);
    }
    if (n.depth) payload["depth"] = *n.depth;
    if (json()) {
      emit(payload);
    } else {
      out_ << (n.normal ? "normal" : "not normal");
      if (n.depth) out_ << " to depth " << *n.depth;
      if (n.witness)
        out_ << "; witness " << *n.witness << ": unit occurs "
             << to_string(n.unit_multiplicity) << " times, dimension "
             << to_string(n.dim);
      out_ << "\n";
    }
    return n.normal ? kOk : kNegative;
  }

  int is_central() const {
    no_dot("is-central");
    if (!o_.restriction.empty()) {
      if (!o_.sigma.empty() || !o_.sigma_file.empty())
        throw MalformedInput("give either --restriction or --sigma, not both");
      RestrictionData const r = restriction();
      CentralSubgroupResult const c = is_central_subgroup(r, o_.depth);
      Json payload;
      payload["central"] = c.central;
      if (c.central) {
        Json a = Json::object();
        for (auto const& [from, to] : c.assignment) a[from] = to;
        payload["assignment"] = std::move(a);
      } else {
        payload["witness"] = *c.witness;
        payload["reason"] = c.reason;
      }
      if (c.depth) payload["depth"] = *c.depth;
      if (json()) {
        emit(payload);
      } else {
        out_ << (c.central ? "central" : "not central");
        if (c.depth) out_ << " to depth " << *c.depth;
        if (c.witness) out_ << "; witness " << *c.witness << ": " << c.reason;
        out_ << "\n";
        for (auto const& [from, to] : c.assignment) out_ << "  " << from << " -> " << to << "\n";
      }
      return c.central ? kOk : kNegative;
    }
    FusionRing const g = ring();
    Truncation const t = g.truncate(o_.depth);
    Subobject const s = sigma(t);
    CentralityResult const r = is_central_subobject(t, s);
    Json payload = to_json(t, r);
    if (!t.complete()) payload["depth"] = o_.depth;
    if (json()) {
      emit(payload);
    } else {
      out_ << (r.central ? "central" : "not central");
      if (!t.complete()) out_ << " to depth " << o_.depth;
      if (r.witness)
        out_ << "; witness " << t.label(r.witness->a) << " x "
             << t.label(r.witness->b) << ": " << r.witness->reason;
      out_ << "\n";
    }
    return r.central ? kOk : kNegative;
  }

  int grouplikes() const {
    no_dot("grouplikes");
    FusionRing const g = ring();
    GroupTable const table = fusion::grouplikes(g, o_.depth);
    GroupDescriptor d = identify_group(table, named_groups());
    if (!g.is_explicit()) {
      GroupTable const deeper = fusion::grouplikes(g, o_.depth + 1);
      d.flag = deeper.names == table.names ? StabilityFlag::stable_at(o_.depth)
                                           : StabilityFlag::unstable_at(o_.depth);
    }
    Json payload;
    payload["group"] = to_json(table);
    payload["descriptor"] = to_json(d);
    if (!g.is_explicit()) payload["depth"] = o_.depth;
    if (json()) {
      emit(payload);
      return kOk;
    }
    out_ << "grouplikes:";
    for (auto const& n : table.names) out_ << " " << n;
    out_ << "\n";
    describe(d);
    return kOk;
  }

  int automorphisms() const {
    no_dot("automorphisms");
    FusionRing const g = ring();
    AutomorphismList const list = fusion::automorphisms(g, o_.depth);
    ChainGroup const chain = chain_group(list.basis);
    Json entries = Json::array();
    for (auto const& a : list.automorphisms) {
      Json e;
      e["map"] = to_json(list.basis, a);
      e["chain_action"] = action_on_chain_group(chain, a).kind;
      entries.push_back(std::move(e));
    }
    if (json()) {
      Json payload;
      payload["count"] = list.automorphisms.size();
      payload["automorphisms"] = std::move(entries);
      payload["flag"] = list.flag.str();
      emit(payload);
      return kOk;
    }
    out_ << list.automorphisms.size() << " fusion-level automorphisms (" << list.flag.str()
         << ")\n";
    for (auto const& e : entries) {
      out_ << " ";
      for (auto const& [k, v] : e["map"].items())
        if (k != v.get<std::string>()) out_ << " " << k << "->" << v.get<std::string>();
      out_ << "  [chain group: " << e["chain_action"].get<std::string>() << "]\n";
    }
    return kOk;
  }

  int catalog() const {
    no_dot("catalog");
    Json payload;
    payload["names"] = catalog_names();
    payload["forms"] = {"au:N", "zN", "group:FILE", "repring:FILE", "free:A+B",
                        "prod:A+B"};
    if (json()) {
      emit(payload);
      return kOk;
    }
    for (auto const& n : catalog_names()) out_ << n << "\n";
    for (auto const& f : payload["forms"]) out_ << f.get<std::string>() << "\n";
    return kOk;
  }

 private:
  Options const& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Centers, chain groups and quantum subgroups from fusion rules",
               "fusionring"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--ring", o.ring_file, "Ring file (JSON) or catalog name");
  app.add_option("--catalog", o.catalog, "Catalog ring name");
  app.add_option("--depth", o.depth, "Truncation depth for generated rings")
      ->check(CLI::PositiveNumber);
  app.add_option("--sigma", o.sigma, "Comma separated labels of a subobject");
  app.add_option("--sigma-file", o.sigma_file, "JSON list of subobject labels");
  app.add_option("--restriction", o.restriction, "Restriction file");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "table", "dot"}));
  app.add_flag("--oracle-check", o.oracle_check,
               "Cross-check chain classes by word enumeration (finite rings)");
  app.add_option("--threads", o.threads, "Worker threads");

  Command cmd(o, out, err);
  using Handler = int (Command::*)() const;
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto sub = [&](char const* name, char const* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    handlers.emplace_back(s, h);
    return s;
  };
  sub("validate", "Check the fusion ring axioms", &Command::validate);
  sub("info", "Basis, dimensions and duals", &Command::info);
  sub("product", "Decompose a product of labels", &Command::product)
      ->add_option("labels", o.word, "Labels to multiply")
      ->required();
  sub("chain-group", "Chain group (dual of the center)", &Command::chain);
  sub("center", "Center subobject and center group", &Command::center);
  sub("cosets", "Cosets of a subobject", &Command::cosets);
  sub("central-subobjects", "All central subobjects (finite rings)",
      &Command::central_subobjects);
  sub("is-normal", "Normality of a quantum subgroup", &Command::is_normal);
  sub("is-central", "Centrality of a subobject or quantum subgroup",
      &Command::is_central);
  sub("grouplikes", "Group of dimension-one elements", &Command::grouplikes);
  sub("automorphisms", "Fusion ring automorphisms", &Command::automorphisms);
  sub("catalog", "List catalog rings", &Command::catalog);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (o.threads > 0) set_thread_count(o.threads);
  try {
    for (auto const& [s, h] : handlers)
      if (s->parsed()) return (cmd.*h)();
  } catch (CheckFailure const& e) {
    err << e.what() << "\n";
    return kCheckFailed;
  } catch (InternalInconsistency const& e) {
    err << "consistency check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace fusion::cli
