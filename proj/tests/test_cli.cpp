#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "fusion/parallel.hpp"
#include "support.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "fusionring");
  std::vector<char const*> argv;
  for (auto const& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = fusion::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fx(char const* name) { return testing::fixture(name).string(); }

}  // namespace

TEST_CASE("cli chain groups") {
  auto su2 = invoke({"--catalog", "su2", "chain-group"});
  CHECK(su2.code == 0);
  CHECK(su2.out ==
        "{\"order\":2,\"abelian\":true,\"invariants\":[2],\"flag\":\"stable_at_depth(6)\"}\n");

  auto so3 = invoke({"--catalog", "so3", "center", "--format", "table"});
  CHECK(so3.code == 0);
  CHECK(so3.out.find("center subobject = entire explored basis; center group: trivial") == 0);

  auto au = invoke({"--catalog", "au", "--depth", "4", "chain-group"});
  CHECK(au.code == 0);
  CHECK(au.out.find("\"Z\"") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(invoke({"--catalog", "su2", "--restriction", fx("s1_branching.json"), "is-normal"}).code ==
        fusion::cli::kNegative);
  CHECK(invoke({"--catalog", "su2", "--restriction", fx("z2_parity.json"), "is-central"}).code ==
        fusion::cli::kOk);
  CHECK(invoke({"--ring", fx("z2_injected.json"), "validate"}).code == fusion::cli::kNegative);
  CHECK(invoke({"--ring", fx("dangling.json"), "info"}).code == fusion::cli::kInputError);
  CHECK(invoke({"--ring", "missing.json", "info"}).code == fusion::cli::kInputError);
  CHECK(invoke({"--catalog", "su2", "--depth", "0", "info"}).code == fusion::cli::kInputError);
  CHECK(invoke({"--catalog", "su2", "--format", "dot", "product", "V1", "V1"}).code ==
        fusion::cli::kInputError);
  CHECK(invoke({"--catalog", "su2", "--restriction", fx("z2_parity.json"), "--ring",
                fx("rep_s3.json"), "is-normal"})
            .code == fusion::cli::kInputError);
  CHECK(invoke({"--help"}).code == fusion::cli::kOk);

  auto w = invoke({"--ring", fx("rep_s3.json"), "--sigma", "1,rho", "cosets"});
  CHECK(w.code == fusion::cli::kInputError);
  CHECK_FALSE(w.err.empty());
}

TEST_CASE("cli oracle check") {
  auto r = invoke({"--catalog", "rep_s3", "--oracle-check", "center"});
  CHECK(r.code == 0);
  auto g = invoke({"--catalog", "su2", "--oracle-check", "chain-group"});
  CHECK(g.code == 0);
  CHECK(g.err.find("skipped") != std::string::npos);
}

TEST_CASE("cli dot output carries the json payload") {
  auto json = invoke({"--catalog", "su2", "chain-group"});
  auto dot = invoke({"--catalog", "su2", "--format", "dot", "chain-group"});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.rfind("// payload: " + json.out.substr(0, json.out.size() - 1) + "\n", 0) == 0);
  CHECK(dot.out.find("graph merge {") != std::string::npos);
}

TEST_CASE("cli products and sigma files") {
  auto p = invoke({"--catalog", "su2", "product", "V1", "V2"});
  CHECK(p.out == "{\"product\":[{\"label\":\"V1\",\"n\":1},{\"label\":\"V3\",\"n\":1}]}\n");
  auto a = invoke({"--ring", fx("rep_s3.json"), "--sigma-file", fx("sigma_rep_s3.json"), "cosets"});
  auto b = invoke({"--ring", fx("rep_s3.json"), "--sigma", "1,sgn", "cosets"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("[[\"1\",\"sgn\"],[\"rho\"]]") != std::string::npos);
}

TEST_CASE("cli output is deterministic") {
  std::vector<std::vector<std::string>> commands = {
      {"--catalog", "au", "--depth", "4", "chain-group"},
      {"--catalog", "rep_z4", "central-subobjects"},
      {"--catalog", "s3", "automorphisms"},
      {"--catalog", "free:su2+z2", "grouplikes"},
  };
  for (auto const& c : commands) {
    CAPTURE(c[1]);
    auto first = invoke(c);
    for (char const* threads : {"1", "3"}) {
      auto args = c;
      args.insert(args.begin(), {"--threads", threads});
      CHECK(invoke(args).out == first.out);
    }
  }
  fusion::set_thread_count(1);
}
