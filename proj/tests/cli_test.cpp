#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <swcalc/cli.hpp>
#include <swcalc/json_io.hpp>

using namespace swcalc;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult result;
  result.code = cli::run(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream file(path);
  file << content;
  return path;
}

}  // namespace

TEST_CASE("cli: cfrac emits the exact chain document") {
  const CliResult res = run_cli({"cfrac", "7", "2", "--json"});
  REQUIRE(res.code == 0);
  CHECK(res.err.empty());
  const std::string golden = R"({
  "p": 7,
  "q": 2,
  "coefficients": [
    4,
    5,
    2,
    2
  ],
  "lens_space": {
    "order": 49,
    "twist": -13
  },
  "checks": {
    "recomposition_exact": true,
    "coefficients_ge_2": true,
    "negative_definite": true,
    "abs_det_equals_p_squared": true,
    "determinant": "49"
  }
})"
                             "\n";
  CHECK(res.out == golden);
}

TEST_CASE("cli: every JSON document re-serializes to its own bytes") {
  const std::vector<std::vector<std::string>> commands = {
      {"cfrac", "12", "5", "--json"},
      {"sw", "en", "4", "--json"},
      {"fibration", "2", "--json"},
      {"verify-word", "(ab)^6", "--json"},
      {"optimize", "4", "--json"},
      {"geography", "3", "--floor", "14", "--json"},
  };
  for (const std::vector<std::string>& cmd : commands) {
    CAPTURE(cmd.front());
    const CliResult res = run_cli(cmd);
    REQUIRE(res.code == 0);
    REQUIRE(Json::parse(res.out).dump(2) + "\n" == res.out);
  }
}

TEST_CASE("cli: text outputs for the small commands") {
  CHECK(run_cli({"sw", "en", "4"}).out == "sw(E(4)) = T^2 - 2 + T^-2\n");
  CHECK(run_cli({"sw", "en", "2"}).out == "sw(E(2)) = 1\n");

  const CliResult fib = run_cli({"fibration", "1"});
  REQUIRE(fib.code == 0);
  CHECK(fib.out ==
        "word: a^8 b a^2 b^2 a^-2 a^4 b a^-4\n"
        "census: {I_8, 1 I_2, 2 fishtails}\n"
        "right-handed twists: 12\n"
        "evaluates to identity: yes\n");

  const CliResult verify = run_cli({"verify-word", "(ab)^6"});
  REQUIRE(verify.code == 0);
  CHECK(verify.out.find("identity: yes") != std::string::npos);
  const CliResult not_id = run_cli({"verify-word", "a^3"});
  CHECK(not_id.out.find("[ 1 3 ]") != std::string::npos);
  CHECK(not_id.out.find("identity: no") != std::string::npos);

  const CliResult opt = run_cli({"optimize", "5"});
  CHECK(opt.out.find("max c1^2 = 30") != std::string::npos);
  CHECK(opt.out.find("fishtail = yes") != std::string::npos);
}

TEST_CASE("cli: fibration JSON carries word, census and the identity check") {
  const CliResult res = run_cli({"fibration", "2", "--json"});
  REQUIRE(res.code == 0);
  const Json j = Json::parse(res.out);
  CHECK(j.at("n") == 2);
  CHECK(j.at("word") == "a^16 b a^2 b^2 a^-2 a^4 b^2 a^-4 a^6 b^2 a^-6 a^8 b a^-8");
  CHECK(j.at("census").at("necklace_k") == 16);
  CHECK(j.at("census").at("i2_count") == 3);
  CHECK(j.at("census").at("fishtail_count") == 2);
  CHECK(j.at("census").at("right_handed_twists") == 24);
  CHECK(j.at("evaluates_to_identity") == true);

  const Json identity = Json::parse(run_cli({"verify-word", "(ab)^6", "--json"}).out);
  CHECK(identity.at("is_identity") == true);
  CHECK(identity.at("matrix") == Json::parse(R"([["1","0"],["0","1"]])"));
}

TEST_CASE("cli: build runs a recipe file end to end") {
  const auto path = write_temp("swcalc_cli_recipe.json",
                               R"({"n": 3, "s": 5, "r": 2, "fishtail": true})");

  const CliResult text = run_cli({"build", "-f", path.string()});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("e = 20  sigma = -8  b2+ = 5  c1^2 = 16  chi_h = 3") != std::string::npos);
  CHECK(text.out.find("simply connected: yes") != std::string::npos);
  CHECK(text.out.find("verdict: nonsymplectic") != std::string::npos);
  CHECK(text.out.find("top classes: 1  |sw| there = 32") != std::string::npos);

  const CliResult json = run_cli({"build", "-f", path.string(), "--json"});
  REQUIRE(json.code == 0);
  const Json j = Json::parse(json.out);
  CHECK(j.at("e") == 20);
  CHECK(j.at("sigma") == -8);
  CHECK(j.at("top_value") == "32");
  CHECK(j.at("recipe").at("r") == Json::parse("[2,2,2,2,2]"));  // broadcast single r
  REQUIRE(j.at("certificate").at("top_classes").size() == 1);
  CHECK(j.at("certificate").at("top_classes")[0].at("T") == 11);
  CHECK(j.at("certificate").at("top_classes")[0].at("E") == Json::parse("[1,1,1,1,1,1]"));
  CHECK(j.at("certificate").at("verdict") == "nonsymplectic");
  CHECK(j.at("history").size() == 14);
  CHECK(Json::parse(json.out).dump(2) + "\n" == json.out);
}

TEST_CASE("cli: certify builds one manifold per twist parameter") {
  const auto path = write_temp("swcalc_cli_frame.json",
                               R"({"n": 3, "s": 5, "fishtail": true})");
  const CliResult res = run_cli({"certify", "-f", path.string(), "--r", "2,3,4", "--json"});
  REQUIRE(res.code == 0);
  const Json j = Json::parse(res.out);
  CHECK(j.at("pass") == true);
  REQUIRE(j.at("entries").size() == 3);
  CHECK(j.at("entries")[0].at("top_value") == "32");
  CHECK(j.at("entries")[1].at("top_value") == "243");
  CHECK(j.at("entries")[2].at("top_value") == "1024");
  CHECK(j.at("entries")[0].at("verdict") == "nonsymplectic");
  CHECK(j.at("fingerprints_match") == true);
  CHECK(j.at("pairwise_distinct") == true);

  const CliResult text = run_cli({"certify", "-f", path.string(), "--r", "2,3"});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("PASS\n") != std::string::npos);
  CHECK(text.out.find("r = 3: |sw top| = 243") != std::string::npos);
}

TEST_CASE("cli: geography JSON lists one verified witness per value") {
  const CliResult res = run_cli({"geography", "3", "--floor", "14", "--json"});
  REQUIRE(res.code == 0);
  const Json j = Json::parse(res.out);
  CHECK(j.at("n") == 3);
  CHECK(j.at("floor") == 14);
  CHECK(j.at("max_c1sq") == 16);
  REQUIRE(j.at("points").size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(j.at("points")[i].at("c1sq") == 14 + static_cast<std::int64_t>(i));
    CHECK(j.at("points")[i].at("verified") == true);
  }
}

TEST_CASE("cli: domain errors exit 1, on stderr as text and stdout as JSON") {
  const CliResult text = run_cli({"cfrac", "10", "4"});
  CHECK(text.code == 1);
  CHECK(text.out.empty());
  CHECK(text.err.find("error: ") == 0);

  const CliResult json = run_cli({"cfrac", "10", "4", "--json"});
  CHECK(json.code == 1);
  CHECK(json.err.empty());
  const Json j = Json::parse(json.out);
  REQUIRE(j.contains("error"));
  CHECK_FALSE(j.at("error").get<std::string>().empty());

  const CliResult bad_word = run_cli({"verify-word", "abc"});
  CHECK(bad_word.code == 1);
  CHECK(bad_word.err.find("at position 2") != std::string::npos);

  const CliResult missing = run_cli({"build", "-f", "/nonexistent/recipe.json"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("cannot open file") != std::string::npos);

  const auto garbled = write_temp("swcalc_cli_garbled.json", "{not json");
  const CliResult malformed = run_cli({"build", "-f", garbled.string()});
  CHECK(malformed.code == 1);
  CHECK(malformed.err.find("not valid JSON") != std::string::npos);

  const CliResult bad_r = run_cli({"certify", "-f", garbled.string(), "--r", "2"});
  CHECK(bad_r.code == 1);
}

TEST_CASE("cli: usage errors exit 2, help exits 0") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"cfrac", "7"}).code == 2);       // missing q
  CHECK(run_cli({"build"}).code == 2);            // missing -f
  CHECK(run_cli({"sw"}).code == 2);               // missing sub-subcommand
  CHECK(run_cli({"optimize", "four"}).code == 2); // non-numeric

  const CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("swcalc") != std::string::npos);
  CHECK(help.err.empty());
}
