#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using horadam::cli::run_cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("validate") {
  const Run ok = run({"validate", "--preset", "fibonacci"});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["ok"] == true);

  const Run bad = run({"validate", "-p", "1", "-q", "2"});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["failed_first"] == "beta_modulus_lt_1");
}

TEST_CASE("usage errors") {
  const Run both = run({"validate", "--preset", "lucas", "-p", "2"});
  CHECK(both.code == 2);
  const json e = json::parse(both.out);
  CHECK(e["error"]["code"] == "invalid_argument");
  CHECK(both.out.find('\n') == both.out.size() - 1);

  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"estimate", "--preset", "fibonacci", "--variant", "sideways_C"}).code == 2);
  CHECK(run({"terms", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const Run unknown_preset = run({"validate", "--preset", "tribonacci"});
  CHECK(unknown_preset.code == 2);
  CHECK(unknown_preset.err.rfind("error: ", 0) == 0);
}

TEST_CASE("terms and tail") {
  const Run terms = run({"terms", "--preset", "pell", "--start", "0", "--count", "5", "--format", "csv"});
  CHECK(terms.code == 0);
  CHECK(terms.out == "index,value\n0,0\n1,1\n2,2\n3,5\n4,12\n");

  const Run tail = run({"tail", "--preset", "fibonacci", "--d", "2", "--n", "10"});
  CHECK(tail.code == 0);
  const json j = json::parse(tail.out);
  CHECK(j["inverse"].get<std::string>().rfind("1.8696666815", 0) == 0);
  CHECK(j["precision_bits"] == 256);
  CHECK(tail.out == run({"tail", "--preset", "fibonacci", "--d", "2", "--n", "10"}).out);

  CHECK(run({"tail", "-a", "1", "-b", "-1", "--n", "1"}).code == 1);
}

TEST_CASE("precision from the environment") {
  ::setenv("HORADAM_PRECISION_BITS", "512", 1);
  const Run wide = run({"tail", "--preset", "fibonacci", "--n", "5"});
  ::setenv("HORADAM_PRECISION_BITS", "lots", 1);
  const Run junk = run({"tail", "--preset", "fibonacci", "--n", "5"});
  ::unsetenv("HORADAM_PRECISION_BITS");
  CHECK(json::parse(wide.out)["precision_bits"] == 512);
  CHECK(junk.code == 2);
  const Run flag = run({"tail", "--preset", "fibonacci", "--n", "5", "--precision", "128"});
  CHECK(json::parse(flag.out)["precision_bits"] == 128);
}

TEST_CASE("estimate") {
  const Run r = run({"estimate", "--preset", "fibonacci", "--estimator", "theorem", "--n", "12"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["total"].get<std::string>().rfind("5.500363612324741", 0) == 0);

  const Run v = run({"estimate", "--preset", "fibonacci", "--d", "3", "--n", "9", "--variant", "proof_C"});
  CHECK(json::parse(v.out)["variant"] == "proof_C+corrected_D");
}

TEST_CASE("converge, crosscheck and resolve exit codes") {
  CHECK(run({"converge", "--preset", "fibonacci", "--d", "2"}).code == 0);
  // d = 1 decays too slowly for three orders of magnitude over 6..16.
  CHECK(run({"converge", "--preset", "fibonacci", "--d", "1"}).code == 3);

  const Run csv = run({"converge", "--preset", "fibonacci", "--d", "2", "--format", "csv"});
  CHECK(csv.out.rfind("n,inverse_tail,", 0) == 0);

  CHECK(run({"crosscheck", "--case", "lee_d2_m1", "--n-from", "8", "--n-to", "18"}).code == 0);
  CHECK(run({"crosscheck", "--case", "marques_d2_even", "--n-from", "4", "--n-to", "14"}).code == 3);
  CHECK(run({"crosscheck", "--remark", "--preset", "fibonacci", "--d", "3"}).code == 0);

  const Run chosen = run({"resolve", "--preset", "fibonacci", "--d", "3", "--variant", "statement_C",
                          "--variant", "proof_C"});
  CHECK(chosen.code == 0);
  CHECK(json::parse(chosen.out)["chosen"] == "statement_C");

  const Run none = run({"resolve", "--preset", "fibonacci", "--d", "3", "--n-to", "9", "--variant",
                        "statement_C", "--variant", "proof_C"});
  CHECK(none.code == 3);
  CHECK(json::parse(none.out)["chosen"].is_null());

  CHECK(run({"resolve", "--preset", "fibonacci", "--d", "3", "--variant", "statement_C"}).code == 2);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "horadam_cli_test.json";
  const Run written = run({"validate", "--preset", "lucas", "--output", path.string()});
  CHECK(written.code == 0);
  CHECK(written.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == run({"validate", "--preset", "lucas"}).out);
  std::filesystem::remove(path);
}
