#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "entmono/cli.hpp"
#include "entmono/errors.hpp"

using namespace entmono;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<const char*> args) {
  args.insert(args.begin(), "entmono");
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(static_cast<int>(args.size()), args.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("parse_partition") {
    const auto p = cli::parse_partition("A|BC", 3);
    CHECK(p.left == std::vector<std::size_t>{0});
    CHECK(p.right == std::vector<std::size_t>{1, 2});
    CHECK(cli::parse_partition("c|a", 3).left == std::vector<std::size_t>{2});
    for (const char* bad : {"ABC", "A|B|C", "A|", "|B", "A|D", "A|A", "A|B1"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(cli::parse_partition(bad, 3), ParameterError);
    }
  }

  TEST_CASE("parse_theorem") {
    const auto names = cli::theorem_names();
    REQUIRE(names.size() == 16);
    CHECK(names.front() == "thm1-concurrence");
    CHECK(names.back() == "thm16-reoa");
    const auto t3 = cli::parse_theorem("thm3-eof", {}, {});
    CHECK(t3.number == 3);
    CHECK(t3.split_form);
    CHECK(t3.family.measure.family == MeasureFamily::Eof);
    CHECK_FALSE(cli::parse_theorem("thm10-tsallis", 2.5, {}).split_form);
    CHECK(cli::parse_theorem("thm6-eoa", {}, {}).family.direction == Direction::Polygamy);
    CHECK(cli::parse_theorem("thm15-reoa", {}, 1.2).family.measure.assisted);
    CHECK_THROWS_AS(cli::parse_theorem("thm15-reoa", {}, {}), ParameterError);
    CHECK_THROWS_AS(cli::parse_theorem("thm17-foo", {}, {}), ParameterError);
    CHECK_THROWS_AS(cli::parse_theorem("thm9-tsallis", 3.5, {}), ParameterError);
  }

  TEST_CASE("parse_real_list") {
    CHECK(cli::parse_real_list("2", 3, "--mu") == std::vector<double>{2.0, 2.0, 2.0});
    CHECK(cli::parse_real_list("1,2.5", 2, "--mu") == std::vector<double>{1.0, 2.5});
    CHECK_THROWS_AS(cli::parse_real_list("1,2", 3, "--mu"), ParameterError);
    CHECK_THROWS_AS(cli::parse_real_list("1,x", 2, "--mu"), ParameterError);
    CHECK_THROWS_AS(cli::parse_real_list("", 2, "--mu"), ParameterError);
    CHECK_THROWS_AS(cli::parse_real_list("inf", 1, "--mu"), ParameterError);
  }

  TEST_CASE("measure output") {
    const Result r = run({"measure", "--preset", "example1", "--partition", "A|BC"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(j["certification"] == "exact");
    CHECK(j["partition"] == "A|BC");
  }

  TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "--preset", "example1", "--theorem", "thm1-concurrence", "--auto"}).code == 0);
    CHECK(run({"verify", "--preset", "example1", "--theorem", "thm1-concurrence", "--mu", "2.1", "--ell", "2"})
              .code == cli::kExitNotApplicable);
    CHECK(run({"verify", "--preset", "ghz:4", "--theorem", "thm1-concurrence", "--ell", "1"}).code ==
          cli::kExitUndecidable);
    CHECK(run({"verify", "--preset", "example1", "--theorem", "thm5-eoa", "--budget", "100"}).code ==
          cli::kExitUndecidable);
    const Result cap = run({"verify", "--preset", "w:4", "--theorem", "thm3-eof"});
    CHECK(cap.code == cli::kExitError);
    CHECK(cap.err.find("entmono: error:") == 0);
    CHECK(run({"verify", "--preset", "w:4", "--theorem", "thm3-eof", "--comparator-only"}).code ==
          cli::kExitUndecidable);
  }

  TEST_CASE("verify report fields") {
    const Result r = run({"verify", "--preset", "example1", "--theorem", "thm1-concurrence", "--auto"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "pass");
    CHECK(j["lhs"].get<double>() == doctest::Approx(0.64));
    CHECK(j["rhs"].get<double>() == doctest::Approx(0.64));
    CHECK(j["priors"]["ckw"].get<double>() == doctest::Approx(0.48));
    CHECK(j["conditions"]["overall"] == "holds");
    CHECK(j["mu"][0].get<double>() == doctest::Approx(2.0));
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == cli::kExitError);
    CHECK(run({"bogus"}).code == cli::kExitError);
    CHECK(run({"measure", "--preset", "example1"}).code == cli::kExitError);
    CHECK(run({"measure", "--preset", "example1", "--partition", "A|Z"}).code == cli::kExitError);
    CHECK(run({"verify", "--preset", "example1", "--theorem", "thm2-concurrence", "--m-split", "1"}).code ==
          cli::kExitError);
    CHECK(run({"verify", "--preset", "example1", "--theorem", "thm1-concurrence", "--auto", "--mu", "2"}).code ==
          cli::kExitError);
    CHECK(run({"verify", "--preset", "bell", "--theorem", "thm1-concurrence"}).code == cli::kExitError);
    CHECK(run({"sweep", "--preset", "example1", "--family", "eoa"}).code == cli::kExitError);
    CHECK(run({"sweep", "--preset", "example1", "--steps", "1"}).code == cli::kExitError);
    CHECK(run({"corpus", "--suite", "nope"}).code == cli::kExitError);
    CHECK(run({"corpus", "--samples", "0"}).code == cli::kExitError);
    CHECK(run({"measure", "--preset", "example1", "--state", "x.json", "--partition", "A|BC"}).code ==
          cli::kExitError);
    CHECK(run({"--help"}).code == cli::kExitOk);
  }

  TEST_CASE("sweep and corpus output") {
    const Result s = run({"sweep", "--preset", "example1", "--steps", "3", "--bounds", "ours,ckw"});
    REQUIRE(s.code == 0);
    CHECK(s.out.rfind("alpha,lhs,ours,ckw\n", 0) == 0);
    const Result c = run({"corpus", "--suite", "ckw", "--samples", "20"});
    REQUIRE(c.code == 0);
    const auto j = nlohmann::json::parse(c.out);
    CHECK(j["seed"] == 42);
  }
}
