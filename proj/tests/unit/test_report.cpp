#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "horadam/report.hpp"
#include "support.hpp"

using namespace horadam;
using nlohmann::json;

namespace {

const SequenceParams kFib{0, 1, 1, 1};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("validation report") {
  const json ok = json::parse(validation_json(kFib, validate(kFib)));
  CHECK(ok["ok"] == true);
  CHECK(ok["failed_first"].is_null());
  CHECK(ok["checks"].size() == 5);
  CHECK(ok["checks"][0]["name"] == "p_ge_1");

  const SequenceParams bad{0, 1, 1, 2};
  const json failed = json::parse(validation_json(bad, validate(bad)));
  CHECK(failed["ok"] == false);
  CHECK(failed["failed_first"] == "beta_modulus_lt_1");
}

TEST_CASE("estimate breakdown keeps the sum") {
  const BinetContext ctx = build_context(kFib, 256);
  const SubseqQuery q{1, 0, 4, 8, true};
  const EstimateBreakdown b = corollary_alt_estimate(ctx, q, 8);
  const json j = json::parse(breakdown_json(kFib, q, b, 256));
  CHECK(j["variant"] == "without_c1sq_N");
  CHECK(j["corrections"].size() == 3);
  CHECK(j["corrections"][0]["name"] == "L");
  const Real printed = Real::parse(j["total"].get<std::string>(), 256);
  CHECK(abs(printed - b.total) <= abs(b.total) * Real::parse("1e-70", 256));
}

TEST_CASE("experiment output is stable") {
  const ExperimentResult r = convergence_experiment(kFib, {2, 1, 2, 1, false});
  const std::string csv = experiment_csv(r, 128);
  CHECK(csv == experiment_csv(convergence_experiment(kFib, {2, 1, 2, 1, false}), 128));
  const auto rows = lines(csv);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == "n,inverse_tail,inverse_error_bound,estimate_total,error,ratio,flags");
  CHECK(rows[1].rfind("6,", 0) == 0);

  const std::string text = experiment_json(r, decay_rate(r), 128);
  CHECK(text == experiment_json(r, decay_rate(r), 128));
  CHECK(text.back() == '\n');
  const json j = json::parse(text);
  CHECK(j["rows"].size() == 11);
  CHECK(j["verdict"]["strict"] == true);
  CHECK(j.contains("decay"));
}

TEST_CASE("sweep and error output") {
  SweepGrid grid;
  grid.p_min = grid.p_max = 2;
  grid.q_min = grid.q_max = 1;
  grid.ab_bound = 0;
  grid.m_values = {1};
  grid.l_values = {0};
  grid.d_values = {2};
  grid.alternating_values = {false};
  const auto cells = sweep(grid);
  // a = b = 0 fails c1_nonzero, so the grid is empty.
  CHECK(cells.empty());
  grid.ab_bound = 1;
  const auto some = sweep(grid);
  REQUIRE_FALSE(some.empty());
  CHECK(lines(sweep_csv(some)).size() == some.size() + 1);
  const json j = json::parse(sweep_json(some, {}));
  CHECK(j["cells"] == some.size());
  CHECK(j["results"].size() == some.size());

  const std::string err = error_json("zero_term", "W_3 is \"zero\"");
  CHECK(err.find('\n') == err.size() - 1);
  const json e = json::parse(err);
  CHECK(e["error"]["code"] == "zero_term");
  CHECK(e["error"]["message"] == "W_3 is \"zero\"");
}
