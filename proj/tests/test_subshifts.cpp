#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "symdyn/error.hpp"
#include "symdyn/subshift.hpp"

using namespace symdyn;

namespace {

const double phi = (1.0 + std::sqrt(5.0)) / 2.0;

Word b(const std::string& s) { return binary_word(s); }

Subshift golden() { return Subshift(SubshiftSpec::golden_mean()); }
Subshift full2() { return Subshift(SubshiftSpec::full(Alphabet::binary())); }
Subshift sgap_finite(std::vector<unsigned> s) { return Subshift(SubshiftSpec::sgap(SGapSet::finite(std::move(s)))); }
Subshift sgap_from(std::vector<unsigned> extra, unsigned from) {
  return Subshift(SubshiftSpec::sgap(SGapSet::cofinite(std::move(extra), from)));
}

std::vector<std::string> strings(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(binary_string(w));
  return out;
}

}  // namespace

TEST_CASE("automaton construction") {
  const Subshift g = golden();
  CHECK(g.automaton().num_states() == 2);
  CHECK(g.automaton().irreducible());

  const Automaton gaps = build_automaton(SubshiftSpec::sgap(SGapSet::finite({0, 1})));
  CHECK(gaps.states_before_trim() == 3);
  CHECK(gaps.irreducible());

  try {
    Subshift empty(SubshiftSpec::sft(Alphabet::binary(), {b("0"), b("1")}));
    FAIL("expected empty-subshift");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::empty_subshift);
  }

  // Two disjoint fixed points: reducible but accepted.
  const Subshift two(SubshiftSpec::sft(Alphabet::binary(), {b("01"), b("10")}));
  CHECK_FALSE(two.automaton().irreducible());
}

TEST_CASE("membership examples") {
  CHECK(member(golden(), b("010")));
  CHECK_FALSE(member(golden(), b("11")));
  CHECK_FALSE(member(sgap_finite({1}), b("1001")));
  CHECK(member(sgap_finite({1}), b("10101")));
}

TEST_CASE("membership agrees with brute-force extension oracles") {
  // SFT with a non-extendable word: 00 may only be followed by 0 and 11 is forbidden.
  const std::vector<std::string> forb{"11", "001"};
  std::vector<Word> fw;
  for (const auto& f : forb) fw.push_back(b(f));
  const Subshift x(SubshiftSpec::sft(Alphabet::binary(), fw));
  for (std::size_t n = 1; n <= 9; ++n)
    for (const auto& u : oracle::all_strings("01", n))
      CHECK_MESSAGE(member(x, b(u)) == oracle::sft_member("01", forb, u, 6), u);

  const std::vector<std::pair<oracle::Gaps, SGapSet>> cases{
      {{{0, 1}, {}}, SGapSet::finite({0, 1})},
      {{{1, 3}, {}}, SGapSet::finite({1, 3})},
      {{{0, 2, 3}, {}}, SGapSet::finite({0, 2, 3})},
      {{{}, 1u}, SGapSet::cofinite({}, 1)},
      {{{2}, 5u}, SGapSet::cofinite({2}, 5)},
      {{{0}, {}}, SGapSet::finite({0})},
  };
  for (const auto& [o, s] : cases) {
    const Subshift x(SubshiftSpec::sgap(s));
    for (std::size_t n = 1; n <= 11; ++n)
      for (const auto& u : oracle::all_strings("01", n))
        CHECK_MESSAGE(member(x, b(u)) == oracle::sgap_member(o, u), s.describe() << " " << u);
  }
}

TEST_CASE("counting") {
  CHECK(count_words(full2(), 5) == 32);
  CHECK(count_words(golden(), 5) == 13);
  // Fibonacci: |L_n| = F_{n+2}.
  BigInt a = 1, c = 2;
  for (std::size_t n = 1; n <= 90; ++n) {
    CHECK(count_words(golden(), n) == c);
    const BigInt next = a + c;
    a = c;
    c = next;
  }
  const double s60 = count_words_scaled(golden(), 60, phi);
  const double s59 = count_words_scaled(golden(), 59, phi);
  CHECK(std::abs(s60 - s59) <= 1e-6);

  // Oracle: count by filtering all strings.
  const oracle::Gaps g{{0, 2, 3}, {}};
  const Subshift x = sgap_finite({0, 2, 3});
  for (std::size_t n = 1; n <= 14; ++n)
    CHECK(count_words(x, n) ==
          oracle::count_if_member("01", n, [&](const std::string& u) { return oracle::sgap_member(g, u); }));
}

TEST_CASE("enumeration") {
  CHECK(strings(enumerate_words(golden(), 2)) == std::vector<std::string>{"00", "01", "10"});
  CHECK(strings(enumerate_words(full2(), 1)) == std::vector<std::string>{"0", "1"});
  CHECK(strings(enumerate_words(sgap_finite({0}), 3)) == std::vector<std::string>{"111"});
  try {
    enumerate_words(full2(), 20, 1000);
    FAIL("expected resource-limit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::resource_limit);
  }
}

TEST_CASE("entropy") {
  CHECK(std::abs(entropy(full2()).h - std::log(2.0)) <= 1e-12);
  CHECK(std::abs(entropy(golden()).h - std::log(phi)) <= 1e-12);
  CHECK(std::abs(entropy(sgap_finite({0, 1})).h - std::log(phi)) <= 1e-12);
  CHECK(std::abs(sgap_lambda(SGapSet::finite({0, 1})) - phi) <= 1e-12);
  CHECK(std::abs(sgap_lambda(SGapSet::cofinite({}, 1)) - phi) <= 1e-12);
  CHECK(sgap_lambda(SGapSet::finite({0})) == 1.0);
  CHECK(entropy(sgap_finite({0})).h == doctest::Approx(0.0));

  for (const auto& [o, s] : std::vector<std::pair<oracle::Gaps, SGapSet>>{
           {{{1, 3}, {}}, SGapSet::finite({1, 3})},
           {{{0, 2, 3}, {}}, SGapSet::finite({0, 2, 3})},
           {{{2}, 5u}, SGapSet::cofinite({2}, 5)}}) {
    CHECK(std::abs(sgap_lambda(s) - oracle::sgap_lambda(o)) <= 1e-9);
    const Subshift x(SubshiftSpec::sgap(s));
    CHECK(std::abs(entropy(x).h - std::log(sgap_lambda(s))) <= 1e-10);
  }
}

TEST_CASE("gap set validation and gcd") {
  CHECK_THROWS_AS(SGapSet::finite({}), Error);
  CHECK(SGapSet::finite({3, 1, 1}) == SGapSet::finite({1, 3}));
  CHECK(SGapSet::finite({1, 3}).gcd_plus_one() == 2);
  CHECK(SGapSet::finite({0, 1}).gcd_plus_one() == 1);
  CHECK(SGapSet::cofinite({}, 1).gcd_plus_one() == 1);
}

TEST_CASE("synchronizing words and specification") {
  for (const auto& x : {sgap_finite({0, 1}), sgap_finite({1, 3}), sgap_from({2}, 5)})
    CHECK(is_synchronizing(x, b("1")));
  CHECK(is_synchronizing(golden(), b("1")));
  CHECK(is_synchronizing(full2(), b("0")));

  CHECK(specification_distance_holds(golden(), 1));
  CHECK_FALSE(specification_distance_holds(golden(), 0));
  CHECK(specification_distance_holds(sgap_finite({0, 1}), 2));
}

TEST_CASE("hereditary sweeps") {
  CHECK(is_i_hereditary_bounded(golden(), 8).holds);
  CHECK(is_hereditary_bounded(golden(), linear_order(2), 8).holds);
  CHECK(is_i_hereditary_bounded(full2(), 8).holds);
  CHECK(is_hereditary_bounded(full2(), linear_order(2), 8).holds);
  const auto r = is_hereditary_bounded(sgap_finite({1}), linear_order(2), 6);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness_image);
  CHECK_FALSE(member(sgap_finite({1}), *r.witness_image));
}
