#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fusion/catalog.hpp"
#include "fusion/errors.hpp"
#include "fusion/ring_io.hpp"
#include "fusion/validate.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fusion;

namespace {

FusionRing z2_with(std::vector<FusionEntry> fusion) {
  return FusionRing::make_explicit("z2", {{"1", 1}, {"g", 1}}, "1",
                                   {{"1", "1"}, {"g", "g"}}, fusion);
}

std::vector<FusionEntry> z2_entries() {
  return {{"1", "1", "1", 1}, {"1", "g", "g", 1}, {"g", "1", "g", 1}, {"g", "g", "1", 1}};
}

}  // namespace

TEST_CASE("explicit construction rejects malformed tables") {
  CHECK_NOTHROW(z2_with(z2_entries()));

  auto missing = z2_entries();
  missing.pop_back();
  CHECK_THROWS_AS(z2_with(missing), MalformedRing);

  auto dangling = z2_entries();
  dangling.push_back({"g", "g", "h", 1});
  CHECK_THROWS_AS(z2_with(dangling), MalformedRing);

  auto zero = z2_entries();
  zero.push_back({"g", "g", "g", 0});
  CHECK_THROWS_AS(z2_with(zero), MalformedRing);

  auto twice = z2_entries();
  twice.push_back({"g", "g", "1", 1});
  CHECK_THROWS_AS(z2_with(twice), MalformedRing);

  CHECK_THROWS_AS(FusionRing::make_explicit("x", {{"1", 1}, {"1", 1}}, "1", {{"1", "1"}},
                                            {{"1", "1", "1", 1}}),
                  MalformedRing);
  CHECK_THROWS_AS(FusionRing::make_explicit("x", {{"1", 1}, {"g", 1}}, "1", {{"1", "1"}},
                                            z2_entries()),
                  MalformedRing);
}

TEST_CASE("validation on well-formed rings") {
  for (auto const& f : testing::explicit_fixtures()) {
    CAPTURE(f.name);
    CHECK(validate_ring(f.ring).ok());
  }
  for (auto const& f : testing::generated_fixtures()) {
    CAPTURE(f.name);
    auto report = validate_ring(f.ring, 4);
    CHECK(report.ok());
    CHECK(report.checked_depth == 4);
  }
}

TEST_CASE("injected coefficient breaks the dimension homomorphism at (g, g)") {
  auto entries = z2_entries();
  entries.push_back({"g", "g", "g", 1});
  auto report = validate_ring(z2_with(entries));
  REQUIRE(report.has(Axiom::DimensionHomomorphism));
  bool found = false;
  for (auto const& v : report.violations)
    if (v.axiom == Axiom::DimensionHomomorphism)
      found = found || v.witness == std::vector<std::string>{"g", "g"};
  CHECK(found);
}

TEST_CASE("validation reports each axiom it checks") {
  SUBCASE("duality") {
    // g x g = {h}, h x h = {1}: g has no partner producing the unit.
    auto ring = FusionRing::make_explicit(
        "bad", {{"1", 1}, {"g", 1}, {"h", 1}}, "1", {{"1", "1"}, {"g", "g"}, {"h", "h"}},
        {{"1", "1", "1", 1}, {"1", "g", "g", 1}, {"g", "1", "g", 1}, {"1", "h", "h", 1},
         {"h", "1", "h", 1}, {"g", "g", "h", 1}, {"h", "h", "1", 1}, {"g", "h", "1", 1},
         {"h", "g", "1", 1}});
    auto report = validate_ring(ring);
    CHECK(report.has(Axiom::Duality));
    CHECK(report.has(Axiom::Frobenius));
  }
  SUBCASE("unit law") {
    auto entries = z2_entries();
    entries[1] = {"1", "g", "1", 1};
    auto report = validate_ring(z2_with(entries));
    CHECK(report.has(Axiom::UnitLaw));
  }
  SUBCASE("dimension") {
    auto ring = rep_s3().with_dims([](std::string const& l) {
      return l == "rho" ? Natural(3) : Natural(1);
    });
    auto report = validate_ring(ring);
    CHECK(report.has(Axiom::DimensionHomomorphism));
    CHECK_FALSE(report.has(Axiom::Associativity));
  }
}

TEST_CASE("witness lists are capped") {
  // Every dimension doubled: one violation per pair of a 30-element ring.
  auto ring = group_ring(cyclic_group(30), "z30").with_dims([](std::string const& l) {
    return l == "1" ? Natural(1) : Natural(2);
  });
  auto report = validate_ring(ring);
  std::size_t dimension = 0;
  bool omitted = false;
  for (auto const& v : report.violations)
    if (v.axiom == Axiom::DimensionHomomorphism) {
      ++dimension;
      omitted = omitted || v.detail.find("omitted") != std::string::npos;
    }
  CHECK(dimension == 65);
  CHECK(omitted);
}

TEST_CASE("label-level products") {
  FusionRing const g = su2_ring();
  CHECK(g.fuse("V1", "V1") == Decomposition{{"V0", 1}, {"V2", 1}});
  std::vector<std::string> word = {"V1", "V1", "V1"};
  CHECK(g.fuse_word(word) == Decomposition{{"V1", 2}, {"V3", 1}});
  CHECK_THROWS_AS(g.fuse("V1", "W1"), UnknownLabel);
  CHECK_THROWS_AS(g.fuse("V1", "V01"), UnknownLabel);
  CHECK(g.dim_of("V10") == 11);
  CHECK_THROWS_AS(g.dual_label("x"), UnknownLabel);
}

TEST_CASE("normalize merges, drops zeros and sorts") {
  FusionRing const g = su2_ring();
  Decomposition d = {{"V2", 1}, {"V0", 0}, {"V1", 2}, {"V2", 3}};
  CHECK(normalize(g.rules(), d) == Decomposition{{"V1", 2}, {"V2", 4}});
}

TEST_CASE("truncations of generated rings") {
  Truncation const t = su2_ring().truncate(2);
  CHECK_FALSE(t.complete());
  CHECK(t.depth_bound() == 2);
  CHECK(t.explored() == 3);
  CHECK(t.size() == 5);
  CHECK(t.label(0) == "V0");
  CHECK(t.depth(2) == 2);
  CHECK(t.depth(4) == -1);
  CHECK_THROWS_AS(t.product(3, 0), DepthExceeded);

  Truncation const a = au_word_ring().truncate(3);
  CHECK(a.explored() == 15);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.find(a.label(i)) == i);

  Truncation const r = rep_s3().truncate(1);
  CHECK(r.complete());
  CHECK(r.explored() == 3);
}

TEST_CASE("rings survive a round trip through JSON") {
  for (auto const& f : testing::explicit_fixtures()) {
    CAPTURE(f.name);
    std::string const text = canonical_ring_text(f.ring);
    FusionRing const back = ring_from_json(nlohmann::json::parse(text), f.name);
    CHECK(canonical_ring_text(back) == text);
    CHECK(back.entries().size() == f.ring.entries().size());
  }
}

TEST_CASE("ring files") {
  FusionRing const r = load_ring(testing::fixture("rep_s3.json"));
  CHECK(r.size() == 3);
  CHECK(canonical_ring_text(r) == canonical_ring_text(rep_s3()));

  CHECK_THROWS_AS(load_ring(testing::fixture("dangling.json")), MalformedFile);
  CHECK_THROWS_AS(load_ring(testing::fixture("z2_injected.json")), AxiomViolation);
  CHECK_NOTHROW(load_ring(testing::fixture("z2_injected.json"), false));
  CHECK_THROWS_AS(load_ring(testing::fixture("missing.json")), MalformedFile);

  auto doc = ring_to_json(su2_ring(), 3);
  CHECK(doc.at("truncated_at") == 3);
  CHECK_THROWS_AS(ring_from_json(nlohmann::json::parse(doc.dump()), "su2"), MalformedFile);
}

TEST_CASE("large multiplicities are written as strings") {
  Natural big = 1;
  for (int i = 0; i < 30; ++i) big *= 10;
  CHECK(natural_to_json(big).is_string());
  CHECK(natural_from_json(natural_to_json(big), "n") == big);
  CHECK(natural_to_json(Natural(7)) == 7);
  CHECK_THROWS_AS(natural_from_json(nlohmann::json(-1), "n"), MalformedFile);
}
