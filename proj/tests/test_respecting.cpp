#include <doctest.h>

#include "oracles.hpp"
#include "symdyn/error.hpp"
#include "symdyn/respecting_extension.hpp"

using namespace symdyn;

namespace {
Word b(const std::string& s) { return binary_word(s); }

bool ends_with(const Word& a, const Word& suffix) {
  return a.size() >= suffix.size() && std::equal(suffix.begin(), suffix.end(), a.end() - suffix.size());
}
}  // namespace

TEST_CASE("growth threshold") {
  // Golden mean: |L_n| = F_{n+2} is 2, 3, 5, 8 against 2n = 2, 4, 6, 8.
  CHECK(growth_threshold(Subshift(SubshiftSpec::golden_mean())) == 4);
  CHECK(growth_threshold(Subshift(SubshiftSpec::full(Alphabet::binary()))) == 1);
}

TEST_CASE("golden mean, v = 0, w = 00, rich contexts") {
  const Subshift g(SubshiftSpec::golden_mean());
  // Every legal 6-block, each followed by 0, so every 5-block occurs.
  std::string ctx;
  for (const auto& s : oracle::all_strings("01", 6))
    if (oracle::avoids(s, {"11"})) ctx += s + "0";
  const Word left = b(ctx), right = b(ctx);
  const Word v = b("0"), w = b("00");
  const auto r = find_respecting_extension(g, v, w, left, right);
  CHECK(r.alpha.size() >= r.floor);
  Word avb = r.alpha, awb = r.alpha;
  avb.insert(avb.end(), v.begin(), v.end());
  awb.insert(awb.end(), w.begin(), w.end());
  CHECK_FALSE(ends_with(awb, avb));  // alpha v is not a suffix of alpha w
  avb.insert(avb.end(), r.beta.begin(), r.beta.end());
  awb.insert(awb.end(), r.beta.begin(), r.beta.end());
  CHECK(respects_transition_exact(avb, awb).respects);
  const auto flags = affix_flags(avb, awb);
  CHECK_FALSE(flags.v_is_suffix_of_w);
  CHECK_FALSE(flags.w_is_prefix_of_v);
  CHECK(member(g, avb));
}

TEST_CASE("periodic left context is exhausted") {
  const Subshift g(SubshiftSpec::golden_mean());
  try {
    find_respecting_extension(g, b("0"), b("00"), b(std::string(40, '0')), b(std::string(40, '0')));
    FAIL("expected not-found");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_found);
  }
}

TEST_CASE("full shift, equal lengths") {
  const Subshift f(SubshiftSpec::full(Alphabet::binary()));
  std::string ctx;
  for (int i = 0; i < 8; ++i) ctx += "0001011100";
  const auto r = find_respecting_extension(f, b("0"), b("1"), b(ctx), b(ctx));
  CHECK(r.alpha.size() == r.floor);
}
