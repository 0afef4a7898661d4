#include <doctest.h>

#include <random>

#include "fusion/catalog.hpp"
#include "fusion/central.hpp"
#include "fusion/errors.hpp"
#include "fusion/parallel.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fusion;
using testing::labelled;

using Classes = std::set<std::set<std::string>>;

TEST_CASE("merge closure agrees with both word oracles") {
  for (auto const& f : testing::explicit_fixtures()) {
    CAPTURE(f.name);
    Truncation const t = f.ring.truncate(1);
    CosetPartition const fast = merge_closure(t);
    CHECK(fast == chain_oracle(t, 6));
    CHECK(chain_oracle(t, 5) == chain_oracle(t, 6));
    auto literal = oracle::literal_chain_classes(f.ring, f.ring.size() > 4 ? 3 : 4);
    CHECK(labelled(t, fast) == Classes(literal.begin(), literal.end()));
  }
}

TEST_CASE("chain classes of small rings") {
  Truncation const r = rep_s3().truncate(1);
  CHECK(labelled(r, merge_closure(r)) == Classes{{"1", "sgn", "rho"}});
  Truncation const z = rep_z4().truncate(1);
  CHECK(merge_closure(z).size() == 4);
  Truncation const s = su2_ring().truncate(6);
  CHECK(labelled(s, merge_closure(s)) ==
        Classes{{"V0", "V2", "V4", "V6"}, {"V1", "V3", "V5"}});
}

TEST_CASE("sigma cosets") {
  Truncation const r = rep_s3().truncate(1);
  Subobject const even = subobject_from_labels(r, std::vector<std::string>{"1", "sgn"});
  CHECK(labelled(r, sigma_cosets(r, even)) == Classes{{"1", "sgn"}, {"rho"}});

  Subobject const not_closed = subobject_from_labels(r, std::vector<std::string>{"1", "rho"});
  CHECK_THROWS_AS(sigma_cosets(r, not_closed), NotASubobject);
  CHECK_THROWS_AS(subobject_from_labels(r, std::vector<std::string>{"1", "tau"}),
                  UnknownLabel);
  CHECK_THROWS_AS(subobject_from_labels(su2_ring().truncate(2),
                                        std::vector<std::string>{"V0", "V4"}),
                  DepthExceeded);

  Truncation const s = su2_ring().truncate(6);
  Subobject const ez = trivial_class(s);
  CHECK(labelled(s, ez) == std::set<std::string>{"V0", "V2", "V4", "V6"});
  CHECK(sigma_cosets(s, ez).size() == 2);
}

TEST_CASE("centrality") {
  Truncation const r = rep_s3().truncate(1);
  auto sub = [&](std::vector<std::string> l) { return subobject_from_labels(r, l); };

  auto unit_only = is_central_subobject(r, sub({"1"}));
  CHECK_FALSE(unit_only.central);
  REQUIRE(unit_only.witness);
  CHECK(r.label(unit_only.witness->a) == "rho");

  auto half = is_central_subobject(r, sub({"1", "sgn"}));
  CHECK_FALSE(half.central);

  auto all = is_central_subobject(r, sub({"1", "sgn", "rho"}));
  CHECK(all.central);
  REQUIRE(all.group);
  CHECK(all.group->order() == 1);

  Truncation const z = rep_z4().truncate(1);
  auto central = enumerate_central_subobjects(z);
  CHECK(central.size() == 3);
  CHECK(enumerate_subobjects(r).size() == 3);
  CHECK(enumerate_central_subobjects(r).size() == 1);
  CHECK_THROWS_AS(enumerate_subobjects(su2_ring().truncate(3)), MalformedInput);
}

TEST_CASE("the unit's chain class is central everywhere") {
  for (auto const& f : testing::explicit_fixtures()) {
    CAPTURE(f.name);
    Truncation const t = f.ring.truncate(1);
    CHECK(is_central_subobject(t, trivial_class(t)).central);
  }
  for (auto const& f : testing::generated_fixtures()) {
    CAPTURE(f.name);
    Truncation const t = f.ring.truncate(6);
    CHECK(is_central_subobject(t, trivial_class(t)).central);
  }
}

TEST_CASE("center subobject equals the intersection of central subobjects") {
  for (auto const& f : testing::explicit_fixtures()) {
    CAPTURE(f.name);
    Truncation const t = f.ring.truncate(1);
    Subobject meet;
    auto central = enumerate_central_subobjects(t);
    for (std::size_t i = 0; i < t.explored(); ++i) {
      bool in_all = true;
      for (auto const& s : central) in_all = in_all && s.contains(i);
      if (in_all) meet.members.push_back(i);
    }
    CHECK(meet == trivial_class(t));
    CHECK(center_subobject(t) == meet);
  }
}

TEST_CASE("chain groups") {
  auto su2 = chain_group(su2_ring(), 6);
  CHECK(su2.descriptor.order == 2u);
  CHECK(su2.descriptor.abelian_invariants == std::vector<std::uint64_t>{2});
  CHECK(su2.descriptor.flag == StabilityFlag::stable_at(6));

  auto so3 = chain_group(so3_ring(), 6);
  CHECK(so3.descriptor.order == 1u);
  REQUIRE(so3.presentation);
  CHECK(so3.presentation->generators.empty());
  CHECK(so3.presentation->identifications == std::vector<std::string>{"[W1] = e"});

  auto s3 = chain_group(group_ring(s3_group(), "s3"), 6, named_groups());
  CHECK(s3.descriptor.order == 6u);
  CHECK_FALSE(s3.descriptor.is_abelian);
  CHECK(s3.descriptor.isomorphic_to == std::vector<std::string>{"S3"});
  CHECK(s3.descriptor.flag == StabilityFlag::exact());

  auto klein = chain_group(group_ring(klein_group(), "klein"));
  CHECK(klein.descriptor.name == "Z/2Z x Z/2Z");

  auto rep = chain_group(rep_s3());
  CHECK(rep.descriptor.order == 1u);

  auto prod = chain_group(catalog_ring("prod:su2+z2"), 5);
  CHECK(prod.descriptor.abelian_invariants == std::vector<std::uint64_t>{2, 2});
}

TEST_CASE("A_u has chain group Z") {
  auto four = chain_group(au_word_ring(), 4);
  auto five = chain_group(au_word_ring(), 5);
  REQUIRE(four.presentation);
  CHECK(four.presentation == five.presentation);
  CHECK(four.presentation->generators == std::vector<std::string>{"[u]"});
  CHECK(four.presentation->orders == std::vector<std::uint64_t>{0});
  CHECK(four.presentation->identifications == std::vector<std::string>{"[v] = [u]^-1"});
  CHECK(four.descriptor.name == "Z");
  CHECK_FALSE(four.descriptor.order);
  CHECK(four.descriptor.flag == StabilityFlag::stable_at(4));
}

TEST_CASE("free products of groups are not abelian") {
  auto d = chain_group(catalog_ring("free:z2+z2"), 5);
  CHECK_FALSE(d.descriptor.order);
  CHECK_FALSE(d.descriptor.is_abelian);
  REQUIRE(d.presentation);
  CHECK(d.presentation->orders == std::vector<std::uint64_t>{2, 2});
  CHECK(d.presentation->commuting.empty());
}

TEST_CASE("chain groups ignore dimensions") {
  std::mt19937 rng(7);
  for (auto const& f : testing::explicit_fixtures()) {
    CAPTURE(f.name);
    auto const base = chain_group(f.ring);
    for (int seed = 0; seed < 5; ++seed) {
      std::uniform_int_distribution<int> pick(1, 9);
      std::map<std::string, Natural> dims;
      auto ring = f.ring.with_dims([&](std::string const& l) {
        auto [it, fresh] = dims.emplace(l, pick(rng));
        return it->second;
      });
      auto other = chain_group(ring);
      CHECK(labelled(other.basis, other.quotient.cosets) ==
            labelled(base.basis, base.quotient.cosets));
      CHECK(other.descriptor.order == base.descriptor.order);
    }
  }
}

TEST_CASE("results do not depend on the thread count") {
  auto run = [] {
    Truncation const t = au_word_ring().truncate(5);
    return std::pair{sigma_cosets(t, trivial_class(t)), t.size()};
  };
  set_thread_count(1);
  auto one = run();
  set_thread_count(4);
  auto four = run();
  set_thread_count(1);
  CHECK(one == four);
}

TEST_CASE("search budget") {
  set_search_budget(10);
  CHECK_THROWS_AS(chain_oracle(group_ring(s3_group(), "s3").truncate(1), 6),
                  SearchBudgetExceeded);
  set_search_budget(1'000'000);
}
