#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "symdyn/cli.hpp"
#include "symdyn/error.hpp"
#include "symdyn/io.hpp"

using namespace symdyn;

namespace {

const std::string data = SYMDYN_TEST_DATA;

struct Run {
  int code;
  Json out;
  Json err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "symdyn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  Run r{code, nullptr, nullptr};
  if (!out.str().empty() && out.str()[0] == '{') r.out = Json::parse(out.str());
  if (!err.str().empty()) r.err = Json::parse(err.str());
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("entropy and extender commands") {
  const auto e = run({"entropy", "--spec", data + "/golden.json"});
  CHECK(e.code == 0);
  CHECK(std::abs(e.out["h"].get<double>() - 0.4812118250596) <= 1e-12);
  CHECK(std::abs(e.out["lambda"].get<double>() - 1.6180339887499) <= 1e-12);

  const auto c = run({"extender", "cmp", "--spec", data + "/golden.json", "1", "0"});
  CHECK(c.code == 0);
  CHECK(c.out["relation"] == "proper-subset");
  CHECK(c.out["v"]["left_classes"].size() == 1);
}

TEST_CASE("language commands") {
  CHECK(run({"count", "--spec", data + "/golden.json", "--n", "100"}).out["count"] == "927372692193078999176");
  const auto en = run({"enumerate", "--spec", data + "/golden.json", "--n", "2"});
  CHECK(en.out["words"] == Json::array({"00", "01", "10"}));
  CHECK(run({"member", "--spec", data + "/golden.json", "010"}).out["member"] == true);
  const auto no = run({"member", "--spec", data + "/golden.json", "11"});
  CHECK(no.code == 0);
  CHECK(no.out["member"] == false);
}

TEST_CASE("mme command") {
  const auto m = run({"mme", "--spec", data + "/sgap_0_1.json", "--word", "11"});
  CHECK(m.code == 0);
  CHECK(std::abs(m.out["mu"].get<double>() - 0.4472135955) <= 1e-9);
  CHECK(m.out["k"] == 0);
  CHECK(m.out["f"] == Json::array({0, 1}));
  const auto p = run({"mme", "--spec", data + "/golden.json", "--word", "0"});
  CHECK(std::abs(p.out["mu"].get<double>() - 0.7236067977) <= 1e-9);
  CHECK_FALSE(p.out.contains("t"));
}

TEST_CASE("replacement commands") {
  CHECK(run({"replace", "--u", "0101", "--v", "01", "--w", "001", "--positions", "0,2"}).out["result"] == "001001");
  const auto broken = run({"replace", "--u", "111", "--v", "11", "--w", "10", "--positions", "0,1"});
  CHECK(broken.code == 1);
  CHECK(broken.err["error"] == "replacement-broken");
  const auto r = run({"respects", "11", "1", "--bounded", "3"});
  CHECK(r.out["respects"] == false);
  CHECK(r.out["witness"]["u"] == "111");
  CHECK(r.out["bounded"] == false);
  CHECK(run({"respects", "1", "11"}).out["respects"] == true);
}

TEST_CASE("grid2d command") {
  const auto g = run({"grid2d", "check-gtheorem", "--spec", data + "/hard_square.json", "--v", data + "/cell_1.json",
                      "--w", data + "/cell_0.json", "--widths", "4,6,8"});
  CHECK(g.code == 0);
  CHECK(g.out["status"] == "pass");
  CHECK(g.out["values"].size() == 3);
  const auto rev = run({"grid2d", "check-gtheorem", "--spec", data + "/hard_square.json", "--v",
                        data + "/cell_0.json", "--w", data + "/cell_1.json", "--widths", "4"});
  CHECK(rev.code == 1);
  CHECK(rev.out["status"] == "skipped");
}

TEST_CASE("verify command writes a report and CSVs") {
  const auto cfg = temp_file("symdyn_cli_cfg.json", R"({
    "specs": [{"name": "golden", "spec": {"type":"sft","alphabet":["0","1"],"forbidden":["11"]}}],
    "budgets": {"pair_maxlen": 3, "replacement_max_vw": 1, "replacement_max_u": 4, "agreement_max_vw": 1,
                "random_sfts": 1, "extender_maxlen": 3}
  })");
  const auto out = std::filesystem::temp_directory_path() / "symdyn_cli_report.json";
  const auto csv = std::filesystem::temp_directory_path() / "symdyn_cli_csv";
  std::filesystem::remove(out);
  std::filesystem::remove_all(csv);
  const auto r = run({"verify", "run", "--config", cfg.string(), "--out", out.string(), "--csv", csv.string()});
  CHECK(r.code == 0);
  CHECK(r.out["ok"] == true);
  CHECK(std::filesystem::exists(out));
  CHECK(std::filesystem::exists(csv / "hereditary-entropy_golden__ratios.csv"));
  const Json report = parse_json(read_file(out));
  CHECK(report["summary"]["ok"] == true);
  CHECK(report["seed"] == 20240601);

  const auto bad = temp_file("symdyn_cli_bad.json", R"({"budgets": {"pair_maxlen": 0}})");
  const auto e = run({"verify", "run", "--config", bad.string()});
  CHECK(e.code == 2);
  CHECK(e.err["error"] == "semantic-error");
}

TEST_CASE("usage and input errors") {
  const auto u = run({"frobnicate"});
  CHECK(u.code == 2);
  CHECK(u.err["error"] == "usage");
  CHECK(u.err["help"].get<std::string>().find("entropy") != std::string::npos);
  CHECK(run({"entropy"}).code == 2);
  CHECK(run({"count", "--spec", data + "/golden.json", "--n", "abc"}).code == 2);

  const auto missing = run({"entropy", "--spec", "/nonexistent/spec.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err["error"] == "parse-error");

  const auto empty = temp_file("symdyn_empty_gaps.json", R"({"type":"sgap","finite":[]})");
  CHECK(run({"entropy", "--spec", empty.string()}).err["error"] == "semantic-error");
  const auto unknown = temp_file("symdyn_unknown_key.json", R"({"type":"full","alphabet":["0"],"x":1})");
  const auto uk = run({"entropy", "--spec", unknown.string()});
  CHECK(uk.err["error"] == "schema-error");
  CHECK(uk.err["message"].get<std::string>().find("'x'") != std::string::npos);
  const auto wrong = temp_file("symdyn_wrong_symbol.json", R"({"type":"sft","alphabet":["0","1"],"forbidden":["12"]})");
  CHECK(run({"entropy", "--spec", wrong.string()}).err["error"] == "semantic-error");
  CHECK(run({"mme", "--spec", data + "/golden.json", "--word", "2"}).code == 2);
}

TEST_CASE("spec loading examples and canonical round-trip") {
  CHECK(std::get<SubshiftSpec>(parse_spec(R"({"type":"sgap","finite":[0,1]})")) ==
        SubshiftSpec::sgap(SGapSet::finite({0, 1})));
  CHECK(std::get<SubshiftSpec>(parse_spec(R"({"type":"sft","alphabet":["0","1"],"forbidden":["11"]})")) ==
        SubshiftSpec::golden_mean());
  try {
    parse_spec(R"({"type":"sgap","finite":[]})");
    FAIL("expected semantic-error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::semantic_error);
  }
  CHECK_THROWS_AS(parse_spec("{not json"), Error);

  for (const char* f : {"golden.json", "full2.json", "sgap_0_1.json", "sgap_from_1.json", "sgap_2_from_5.json",
                        "hard_square.json"}) {
    const AnySpec s = load_spec(data + "/" + f);
    const std::string text = canonical_text(s);
    CHECK(canonical_text(parse_spec(text)) == text);
    CHECK(parse_spec(text) == s);
  }
}
