#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "symdyn/error.hpp"
#include "symdyn/verify.hpp"

using namespace symdyn;

namespace {

Word b(const std::string& s) { return binary_word(s); }

Json small_config() {
  return parse_json(R"({
    "seed": 7,
    "specs": [
      {"name": "golden", "spec": {"type":"sft","alphabet":["0","1"],"forbidden":["11"]}},
      {"name": "s01", "spec": {"type":"sgap","finite":[0,1]}},
      {"name": "s1", "spec": {"type":"sgap","finite":[1]}},
      {"name": "twofix", "spec": {"type":"sft","alphabet":["0","1"],"forbidden":["01","10"]}}
    ],
    "budgets": {"pair_maxlen": 4, "value_maxlen": 6, "limit_n": 80, "exact_count_n": 30,
                "synch_maxgap": 30, "synch_maxlen": 2, "hereditary_nmax": 4, "hereditary_sweep": 6,
                "extender_maxlen": 4, "random_sfts": 1, "replacement_max_vw": 2, "replacement_max_u": 7,
                "agreement_max_vw": 2}
  })");
}

const CheckRecord& find(const VerificationReport& r, const std::string& name) {
  for (const auto& rec : r.records)
    if (rec.name == name) return rec;
  FAIL("missing record " << name);
  throw std::logic_error("unreachable");
}

Json without_timestamps(Json doc) {
  doc.erase("timestamps");
  return doc;
}

}  // namespace

TEST_CASE("main inequality and equality corollary on worked examples") {
  const Subshift g(SubshiftSpec::golden_mean());
  const auto rec = check_main_inequality(g, 6, 1e-12);
  CHECK(rec.status == CheckStatus::pass);
  CHECK(rec.metrics["pairs_checked"].get<std::size_t>() > 0);
  CHECK(rec.metrics["asymmetric_pairs"].get<std::size_t>() > 0);

  // mu(1) < mu(0) is one of the pairs: E(1) is inside E(0).
  const Measure m(g);
  CHECK(m(b("1")) < m(b("0")));
  // E(000) = E(0) forces mu(000) = mu(0) phi^{-2}.
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(m(b("000")) - m(b("0")) / (phi * phi)) <= 1e-12);

  CHECK(check_equality_corollary(g, 6, 1e-9).status == CheckStatus::pass);

  // S = {0,1}: E(1) = E(101), so mu(101) = mu(1) e^{-2h}.
  const Subshift s(SubshiftSpec::sgap(SGapSet::finite({0, 1})));
  const Measure ms(s);
  CHECK(std::abs(ms(b("101")) - ms(b("1")) * std::exp(-2 * ms.entropy())) <= 1e-9);
  CHECK(check_main_inequality(s, 6, 1e-12).status == CheckStatus::pass);

  const Subshift f(SubshiftSpec::full(Alphabet::binary()));
  CHECK(check_equality_corollary(f, 4, 1e-12).status == CheckStatus::pass);
}

TEST_CASE("entropy root, limit, value and synchronized-formula checks") {
  CHECK(check_entropy_root(SGapSet::finite({0, 1}), 1e-12, 1e-10).status == CheckStatus::pass);
  CHECK(check_entropy_root(SGapSet::finite({1, 3}), 1e-12, 1e-10).status == CheckStatus::pass);

  const auto lim = check_limit(SGapSet::finite({0, 1}), 200, 1e-3, 60, 1e-9);
  CHECK(lim.status == CheckStatus::pass);
  CHECK(std::abs(lim.metrics["closed_form"].get<double>() - 1.1708) <= 1e-4);
  CHECK(check_limit(SGapSet::cofinite({}, 1), 200, 1e-3, 60, 1e-9).status == CheckStatus::pass);
  const auto tail = check_limit(SGapSet::cofinite({2}, 5), 300, 1e-3, 40, 1e-9);
  CHECK(tail.status == CheckStatus::pass);
  CHECK(tail.metrics["branch"] == "infinite");
  const auto gated = check_limit(SGapSet::finite({1}), 100, 1e-3, 20, 1e-9);
  CHECK(gated.status == CheckStatus::skipped);
  CHECK(gated.reason.find("gcd") != std::string::npos);

  CHECK(check_value_theorem(SGapSet::finite({0, 1}), 10, 1e-9).status == CheckStatus::pass);
  CHECK(check_value_theorem(SGapSet::finite({1, 3}), 10, 1e-9).status == CheckStatus::pass);

  const auto s0 = check_synch_formula_word(SGapSet::finite({0, 1}), b("0"), 30, 1e-6);
  CHECK(s0.status == CheckStatus::pass);
  CHECK(s0.metrics["abs_residual"].get<double>() <= 1e-6);
  const auto s01 = check_synch_formula_word(SGapSet::cofinite({}, 1), b("01"), 40, 1e-6);
  CHECK(s01.metrics["abs_residual"].get<double>() <= 1e-6);
  // u = 1: the double sum collapses to mu(1) by gap normalization.
  const auto s1 = check_synch_formula_word(SGapSet::finite({0, 2, 3}), b("1"), 40, 1e-6);
  CHECK(s1.metrics["abs_residual"].get<double>() <= 1e-9);
  CHECK(check_synch_formula_word(SGapSet::finite({0, 1}), b("00"), 10, 1e-6).status == CheckStatus::error);
}

TEST_CASE("hereditary corollary") {
  const auto g = check_hereditary_entropy(Subshift(SubshiftSpec::golden_mean()), 8, 8, 1e-9);
  CHECK(g.status == CheckStatus::pass);
  CHECK(g.metrics["specification_distance"] == 1);
  const auto f = check_hereditary_entropy(Subshift(SubshiftSpec::full(Alphabet::binary())), 8, 8, 1e-9);
  CHECK(f.status == CheckStatus::pass);
  const auto s = check_hereditary_entropy(Subshift(SubshiftSpec::sgap(SGapSet::finite({1}))), 4, 6, 1e-9);
  CHECK(s.status == CheckStatus::skipped);
}

TEST_CASE("replacement calculus sweeps") {
  const auto lem = check_replacement_lemmas(2, 2, 8);
  CHECK(lem.status == CheckStatus::pass);
  CHECK(lem.metrics["qualifying_pairs"].get<std::size_t>() > 0);
  CHECK(check_respects_agreement(2, 3).status == CheckStatus::pass);
}

TEST_CASE("config parsing") {
  const VerifyConfig c = config_from_json(small_config());
  CHECK(c.seed == 7);
  CHECK(c.specs.size() == 4);
  CHECK(c.budgets.pair_maxlen == 4);
  CHECK(c.budgets.limit_n == 80);
  CHECK(c.tolerances.main == 1e-12);
  // Canonical emission round-trips.
  CHECK(config_to_json(config_from_json(config_to_json(c))) == config_to_json(c));
  CHECK(config_to_json(config_from_json(config_to_json(default_config()))) == config_to_json(default_config()));

  auto expect_kind = [](const std::string& text, ErrorKind kind) {
    try {
      config_from_json(parse_json(text));
      FAIL("expected an error for " << text);
    } catch (const Error& e) {
      CHECK(e.kind() == kind);
    }
  };
  expect_kind(R"({"sed": 1})", ErrorKind::schema_error);
  expect_kind(R"({"budgets": {"pair_maxlen": 0}})", ErrorKind::semantic_error);
  expect_kind(R"({"budgets": {"nope": 3}})", ErrorKind::schema_error);
  expect_kind(R"({"tolerances": {"main": -1}})", ErrorKind::semantic_error);
  expect_kind(R"({"specs": [{"name": "a", "spec": {"type":"sgap","finite":[]}}]})", ErrorKind::semantic_error);
  expect_kind(R"({"specs": [{"name": "a", "spec": {"type":"full","alphabet":["0"]}},
                            {"name": "a", "spec": {"type":"full","alphabet":["0"]}}]})",
              ErrorKind::semantic_error);
}

TEST_CASE("suite run: gates, determinism and CSV") {
  const VerifyConfig c = config_from_json(small_config());
  const VerificationReport r1 = run_all(c);
  const VerificationReport r2 = run_all(c);
  CHECK(without_timestamps(r1.to_json()).dump(2) == without_timestamps(r2.to_json()).dump(2));
  CHECK(r1.ok());
  CHECK(std::is_sorted(r1.records.begin(), r1.records.end(),
                       [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; }));

  CHECK(find(r1, "limit/s1").status == CheckStatus::skipped);
  const auto& red = find(r1, "main-inequality/twofix");
  CHECK(red.status == CheckStatus::skipped);
  CHECK(red.reason.find("reducible-presentation") != std::string::npos);
  CHECK(find(r1, "main-inequality/golden").status == CheckStatus::pass);

  const auto doc = r1.to_json();
  CHECK(doc["summary"]["total"].get<std::size_t>() == r1.records.size());
  CHECK(doc.contains("timestamps"));

  const auto dir = std::filesystem::temp_directory_path() / "symdyn_csv_test";
  std::filesystem::remove_all(dir);
  r1.write_csv(dir);
  std::ifstream in(dir / "limit_s01__counts.csv");
  REQUIRE(in);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(header == "n,count,scaled");
  CHECK(first == "0,1,1");
  std::filesystem::remove_all(dir);
}

TEST_CASE("random SFTs are seeded") {
  CHECK(random_sft(1, 0, 3) == random_sft(1, 0, 3));
  CHECK(random_sft(1, 0, 3).alphabet().size() == 3);
}

TEST_CASE("number formatting is locale independent and round-trips") {
  for (double x : {0.1, 1e-300, 1.0 / 3.0, 12345.678})
    CHECK(std::stod(format_double(x)) == x);
  CHECK(format_double(0.5) == "0.5");
}
