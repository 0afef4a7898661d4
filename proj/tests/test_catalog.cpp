#include <doctest.h>

#include "fusion/catalog.hpp"
#include "fusion/errors.hpp"
#include "fusion/ring_io.hpp"
#include "fusion/validate.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fusion;

TEST_CASE("Rep(S3) matches its character table") {
  FusionRing const r = rep_s3();
  auto const expected = oracle::rep_s3_fusion();
  std::map<std::array<std::string, 3>, long> got;
  for (auto const& e : r.entries())
    got[{e.a, e.b, e.c}] = static_cast<long>(e.n);
  CHECK(got == expected);
}

TEST_CASE("SU(2) products match weight multisets") {
  FusionRing const g = su2_ring();
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      Decomposition expected;
      for (auto [c, m] : oracle::su2_product(a, b))
        expected.push_back({"V" + std::to_string(c), m});
      CAPTURE(a);
      CAPTURE(b);
      CHECK(g.fuse("V" + std::to_string(a), "V" + std::to_string(b)) == expected);
    }
}

TEST_CASE("SO(3) is the integral part of SU(2)") {
  FusionRing const s = so3_ring(), g = su2_ring();
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      Decomposition mapped;
      for (auto const& t : s.fuse("W" + std::to_string(a), "W" + std::to_string(b)))
        mapped.push_back({"V" + std::to_string(2 * std::stoi(t.label.substr(1))), t.mult});
      CHECK(mapped == g.fuse("V" + std::to_string(2 * a), "V" + std::to_string(2 * b)));
    }
}

TEST_CASE("A_u words") {
  FusionRing const a = au_word_ring();
  CHECK(a.unit_label() == "e");
  CHECK(a.dual_label("uuv") == "uvv");
  CHECK(a.dim_of("u") == 2);
  CHECK(a.dim_of("uu") == 4);
  CHECK(a.dim_of("uv") == 3);
  CHECK(a.fuse("u", "v") == Decomposition{{"e", 1}, {"uv", 1}});
  CHECK(a.fuse("uv", "uv") == Decomposition{{"e", 1}, {"uv", 1}, {"uvuv", 1}});
  CHECK(a.dim_of("uvuv") == 5);
  CHECK(a.fuse("uu", "vv") == Decomposition{{"e", 1}, {"uv", 1}, {"uuvv", 1}});
  CHECK_FALSE(a.contains("uxv"));
  CHECK(au_word_ring(3).dim_of("uv") == 8);
}

TEST_CASE("integer group ring") {
  FusionRing const z = integer_group_ring();
  CHECK(z.fuse("z^3", "z^-5") == Decomposition{{"z^-2", 1}});
  CHECK(z.dual_label("z^4") == "z^-4");
  CHECK_FALSE(z.contains("z^+1"));
}

TEST_CASE("Z2 * Z2 is the infinite dihedral group") {
  FusionRing const f = catalog_ring("free:z2+z2");
  auto letters = [](std::string const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == '#') out += w[i + 1] == '1' ? 'a' : 'b';
    return out;
  };
  Truncation const t = f.truncate(4);
  for (std::size_t x = 0; x < t.explored(); ++x)
    for (std::size_t y = 0; y < t.explored(); ++y) {
      auto d = f.fuse(t.label(x), t.label(y));
      REQUIRE(d.size() == 1);
      CHECK(d[0].mult == 1);
      CHECK(letters(d[0].label) ==
            oracle::dihedral_reduce(letters(t.label(x)) + letters(t.label(y))));
    }
  CHECK(f.fuse("g#1*g#2", "g#2*g#1") == Decomposition{{"e", 1}});
}

TEST_CASE("free product with SU(2)") {
  FusionRing const f = free_product(su2_ring(), group_ring(cyclic_group(2), "z2"));
  CHECK(f.fuse("V1#1", "V1#1") == Decomposition{{"e", 1}, {"V2#1", 1}});
  CHECK(f.fuse("V1#1*g#2", "g#2*V1#1") == Decomposition{{"e", 1}, {"V2#1", 1}});
  CHECK(f.fuse("g#2*V1#1", "V1#1*g#2") ==
        Decomposition{{"e", 1}, {"g#2*V2#1*g#2", 1}});
  CHECK(f.dim_of("V2#1*g#2*V1#1") == 6);
  CHECK(validate_ring(f, 4).ok());
}

TEST_CASE("direct products") {
  FusionRing const p = direct_product(rep_s3(), group_ring(cyclic_group(2), "z2"));
  CHECK(p.is_explicit());
  CHECK(p.size() == 6);
  CHECK(p.fuse("(rho,g)", "(sgn,g)") == Decomposition{{"(rho,1)", 1}});
  FusionRing const q = catalog_ring("prod:su2+z2");
  CHECK_FALSE(q.is_explicit());
  CHECK(q.fuse("(V1,g)", "(V1,g)") == Decomposition{{"(V0,1)", 1}, {"(V2,1)", 1}});
}

TEST_CASE("group rings and group files") {
  CHECK_THROWS_AS(group_table(load_group(testing::fixture("not_a_group.json"))), NotAGroup);
  FusionRing const s = catalog_ring("group:s3_group.json", FUSION_FIXTURE_DIR);
  CHECK(s.size() == 6);
  CHECK(s.fuse("r", "s") == Decomposition{{"rs", 1}});

  GroupPresentationInput g = cyclic_group(3);
  g.table[1][1] = "g";
  CHECK_THROWS_AS(group_table(g), NotAGroup);
}

TEST_CASE("representation ring from a character table") {
  auto fusion = rep_s3().entries();
  FusionRing const r = rep_ring_char_table("rep_s3", {{"1", 1}, {"sgn", 1}, {"rho", 2}}, fusion);
  CHECK(r.dual(2) == 2);
  CHECK_THROWS_AS(rep_ring_char_table("bad", {{"1", 1}, {"sgn", 1}, {"rho", 3}}, fusion),
                  AxiomViolation);
}

TEST_CASE("catalog names resolve") {
  for (auto const& n : catalog_names()) CHECK_NOTHROW(catalog_ring(n));
  CHECK(catalog_ring("au:3").name() == "au:3");
  CHECK(catalog_ring("z7").size() == 7);
  CHECK_THROWS_AS(catalog_ring("au:1"), MalformedInput);
  CHECK_THROWS_AS(catalog_ring("nonsense"), MalformedInput);
  CHECK_THROWS_AS(catalog_ring("free:su2"), MalformedInput);
}
