#include <doctest.h>

#include "fusion/catalog.hpp"
#include "fusion/errors.hpp"
#include "fusion/group.hpp"

using namespace fusion;

namespace {

// Z/a x Z/b by coordinates.
GroupTable product_of_cyclic(std::size_t a, std::size_t b) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> mult(a * b);
  for (std::size_t x = 0; x < a * b; ++x) {
    names.push_back(std::to_string(x / b) + "," + std::to_string(x % b));
    for (std::size_t y = 0; y < a * b; ++y)
      mult[x].push_back(((x / b + y / b) % a) * b + (x % b + y % b) % b);
  }
  return GroupTable::from_mult(names, mult);
}

}  // namespace

TEST_CASE("group tables are checked") {
  CHECK_THROWS_AS(GroupTable::from_mult({}, {}), NotAGroup);
  CHECK_THROWS_AS(GroupTable::from_mult({"e", "a"}, {{0, 1}, {1, 1}}), NotAGroup);
  CHECK_THROWS_AS(GroupTable::from_mult({"e", "a"}, {{0, 1}, {1, 2}}), NotAGroup);
  // Latin square without associativity.
  CHECK_THROWS_AS(GroupTable::from_mult({"e", "a", "b", "c", "d"},
                                        {{0, 1, 2, 3, 4},
                                         {1, 0, 3, 4, 2},
                                         {2, 4, 0, 1, 3},
                                         {3, 2, 4, 0, 1},
                                         {4, 3, 1, 2, 0}}),
                  NotAGroup);
  GroupTable const g = group_table(s3_group());
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_abelian());
  CHECK(g.inverse[1] == 2);
}

TEST_CASE("invariant factors") {
  CHECK(abelian_invariants(group_table(cyclic_group(1))).empty());
  CHECK(abelian_invariants(group_table(cyclic_group(12))) == std::vector<std::uint64_t>{12});
  CHECK(abelian_invariants(group_table(klein_group())) == std::vector<std::uint64_t>{2, 2});
  CHECK(abelian_invariants(product_of_cyclic(2, 4)) == std::vector<std::uint64_t>{2, 4});
  CHECK(abelian_invariants(product_of_cyclic(4, 6)) == std::vector<std::uint64_t>{2, 12});
  CHECK(abelian_invariants(product_of_cyclic(3, 5)) == std::vector<std::uint64_t>{15});
  CHECK(abelian_invariants(product_of_cyclic(4, 4)) == std::vector<std::uint64_t>{4, 4});
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(product_of_cyclic(3, 5), group_table(cyclic_group(15))));
  CHECK_FALSE(find_isomorphism(product_of_cyclic(2, 2), group_table(cyclic_group(4))));
  GroupTable const s3 = group_table(s3_group());
  CHECK_FALSE(find_isomorphism(s3, group_table(cyclic_group(6))));
  auto map = find_isomorphism(s3, s3);
  REQUIRE(map);
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) CHECK((*map)[s3(x, y)] == s3((*map)[x], (*map)[y]));
}

TEST_CASE("descriptors") {
  auto d = identify_group(product_of_cyclic(2, 2));
  CHECK(d.order == 4u);
  CHECK(d.name == "Z/2Z x Z/2Z");
  CHECK(d.exponent == 2u);

  std::vector<NamedGroup> candidates = {{"S3", group_table(s3_group())}};
  auto s = identify_group(group_table(s3_group()), candidates);
  CHECK_FALSE(s.is_abelian);
  CHECK_FALSE(s.abelian_invariants);
  CHECK(s.center_size == 1u);
  CHECK(s.exponent == 6u);
  CHECK(s.name == "S3");
  CHECK(identify_group(group_table(cyclic_group(1))).name == "1");
}

TEST_CASE("presentations") {
  Presentation free_one{{"[u]"}, {0}, {}, {"[v] = [u]^-1"}};
  auto z = identify_presentation(free_one, true, StabilityFlag::stable_at(6));
  CHECK_FALSE(z.order);
  CHECK(z.name == "Z");
  CHECK(z.flag.str() == "stable_at_depth(6)");

  Presentation cyclic{{"[g]"}, {3}, {}, {}};
  auto c = identify_presentation(cyclic, true, StabilityFlag::exact());
  CHECK(c.order == 3u);
  CHECK(c.abelian_invariants == std::vector<std::uint64_t>{3});

  Presentation two{{"[a]", "[b]"}, {2, 2}, {}, {}};
  CHECK(two.relations() == std::vector<std::string>{"[a]^2 = e", "[b]^2 = e"});
  CHECK(identify_presentation(two, false, StabilityFlag::unstable_at(4)).name.empty());
  CHECK(StabilityFlag::unstable_at(4).str() == "unstable_at_depth(4)");
}
