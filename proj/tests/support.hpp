#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fusion/catalog.hpp"
#include "fusion/central.hpp"

namespace testing {

inline std::filesystem::path fixture(std::string const& name) {
  return std::filesystem::path(FUSION_FIXTURE_DIR) / name;
}

struct Fixture {
  std::string name;
  fusion::FusionRing ring;
};

// Every explicit ring the property suites run over.
inline std::vector<Fixture> explicit_fixtures() {
  using namespace fusion;
  return {
      {"z2", group_ring(cyclic_group(2), "z2")},
      {"z3", group_ring(cyclic_group(3), "z3")},
      {"z4", group_ring(cyclic_group(4), "z4")},
      {"s3", group_ring(s3_group(), "s3")},
      {"klein", group_ring(klein_group(), "klein")},
      {"rep_s3", rep_s3()},
      {"rep_z4", rep_z4()},
      {"rep_s3 x z2", direct_product(rep_s3(), group_ring(cyclic_group(2), "z2"))},
      {"trivial", trivial_ring()},
  };
}

// Generated catalog rings.
inline std::vector<Fixture> generated_fixtures() {
  using namespace fusion;
  return {
      {"su2", su2_ring()},
      {"so3", so3_ring()},
      {"au", au_word_ring()},
      {"au:3", au_word_ring(3)},
      {"zring", integer_group_ring()},
      {"free:su2+z2", catalog_ring("free:su2+z2")},
      {"prod:su2+z2", catalog_ring("prod:su2+z2")},
  };
}

inline std::set<std::set<std::string>> labelled(fusion::Truncation const& t,
                                                fusion::CosetPartition const& p) {
  std::set<std::set<std::string>> out;
  for (auto const& block : p.blocks) {
    std::set<std::string> s;
    for (std::size_t x : block) s.insert(t.label(x));
    out.insert(std::move(s));
  }
  return out;
}

inline std::set<std::string> labelled(fusion::Truncation const& t,
                                      fusion::Subobject const& s) {
  std::set<std::string> out;
  for (std::size_t x : s.members) out.insert(t.label(x));
  return out;
}

}  // namespace testing
