// Invariants checked over families of inputs rather than single examples.
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "symdyn/error.hpp"
#include "symdyn/extender.hpp"
#include "symdyn/mme.hpp"
#include "symdyn/verify.hpp"

using namespace symdyn;

namespace {

Word b(const std::string& s) { return binary_word(s); }

std::vector<SubshiftSpec> sample_specs() {
  std::vector<SubshiftSpec> out{SubshiftSpec::golden_mean(), SubshiftSpec::full(Alphabet::binary()),
                                SubshiftSpec::sgap(SGapSet::finite({0, 1})),
                                SubshiftSpec::sgap(SGapSet::finite({1, 3})),
                                SubshiftSpec::sgap(SGapSet::cofinite({2}, 5))};
  for (std::size_t i = 0; i < 4; ++i) out.push_back(random_sft(99, i, 3));
  return out;
}

}  // namespace

TEST_CASE("languages are factorial, extendable, and counted consistently") {
  for (const auto& spec : sample_specs()) {
    const Subshift x(spec);
    const std::size_t k = x.alphabet().size();
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto words = enumerate_words(x, n);
      CHECK(BigInt(words.size()) == count_words(x, n));
      CHECK(std::is_sorted(words.begin(), words.end()));
      for (const auto& w : words) {
        REQUIRE(member(x, w));
        // Subwords are members.
        CHECK(member(x, std::span<const Symbol>(w).subspan(1)));
        CHECK(member(x, std::span<const Symbol>(w).first(n - 1)));
        // Some one-symbol extension on each side stays in the language.
        bool left = false, right = false;
        for (std::size_t a = 0; a < k; ++a) {
          Word l{static_cast<Symbol>(a)}, r = w;
          l.insert(l.end(), w.begin(), w.end());
          r.push_back(static_cast<Symbol>(a));
          left = left || member(x, l);
          right = right || member(x, r);
        }
        CHECK(left);
        CHECK(right);
      }
    }
  }
}

TEST_CASE("scaled counts agree with exact counts") {
  for (const auto& spec : sample_specs()) {
    const Subshift x(spec);
    const double lambda = entropy(x).lambda;
    const auto series = count_words_scaled_series(x, 40, lambda);
    for (std::size_t n = 0; n <= 40; n += 5) {
      const double exact = count_words(x, n).convert_to<double>() / std::pow(lambda, static_cast<double>(n));
      CHECK(std::abs(series[n] - exact) <= 1e-9 * exact);
    }
  }
}

TEST_CASE("measures are additive, normalized and supported on the language") {
  for (const auto& spec : sample_specs()) {
    const Subshift x(spec);
    if (!x.automaton().irreducible()) continue;
    const Measure m(x);
    const std::size_t k = x.alphabet().size();
    for (std::size_t n = 1; n <= 4; ++n) {
      double total = 0.0;
      for (const auto& w : oracle::all_strings(std::string("0123456789").substr(0, k), n)) {
        const Word word = x.alphabet().parse(w);
        const double mu = m(word);
        total += mu;
        CHECK((mu > 0.0) == member(x, word));
        double right = 0.0, left = 0.0;
        for (std::size_t a = 0; a < k; ++a) {
          Word r = word, l{static_cast<Symbol>(a)};
          r.push_back(static_cast<Symbol>(a));
          l.insert(l.end(), word.begin(), word.end());
          right += m(r);
          left += m(l);
        }
        CHECK(std::abs(right - mu) <= 1e-12);
        CHECK(std::abs(left - mu) <= 1e-12);
      }
      CHECK(std::abs(total - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("extender comparison is a preorder with mirrored relations") {
  for (const auto& spec : sample_specs()) {
    const Subshift x(spec);
    const auto words = enumerate_words_up_to(x, 3);
    std::vector<ExtenderDescriptor> d;
    for (const auto& w : words) d.push_back(extender_descriptor(x, w));
    for (std::size_t a = 0; a < words.size(); ++a) {
      CHECK(extender_contained(x, d[a], d[a]));
      for (std::size_t c = 0; c < words.size(); ++c) {
        const auto r = extender_compare(x, words[a], words[c]);
        const auto s = extender_compare(x, words[c], words[a]);
        const bool mirrored = (r == ExtenderRelation::equal && s == ExtenderRelation::equal) ||
                              (r == ExtenderRelation::incomparable && s == ExtenderRelation::incomparable) ||
                              (r == ExtenderRelation::proper_subset && s == ExtenderRelation::proper_superset) ||
                              (r == ExtenderRelation::proper_superset && s == ExtenderRelation::proper_subset);
        CHECK(mirrored);
        if (!extender_contained(x, d[a], d[c])) continue;
        for (std::size_t e = 0; e < words.size(); ++e)
          if (extender_contained(x, d[c], d[e])) CHECK(extender_contained(x, d[a], d[e]));
      }
    }
  }
}

TEST_CASE("windowed comparator agrees with the exact one on shifts of finite type") {
  for (std::size_t i = 0; i < 4; ++i) {
    const Subshift x(random_sft(2024, i, 3));
    CHECK(check_extender_consistency(x, 4).status == CheckStatus::pass);
  }
  CHECK(check_extender_consistency(Subshift(SubshiftSpec::golden_mean()), 6).status == CheckStatus::pass);
}

TEST_CASE("S-gap values: additivity and partition of unity") {
  for (const auto& s : {SGapSet::finite({0, 1}), SGapSet::finite({1, 3}), SGapSet::finite({0, 2, 3}),
                        SGapSet::cofinite({}, 1), SGapSet::cofinite({2}, 5)}) {
    const SGapMme m(s);
    for (std::size_t n = 1; n <= 8; ++n) {
      double total = 0.0;
      for (const auto& w : oracle::all_strings("01", n)) total += m.mu(b(w));
      CHECK(std::abs(total - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("replacement lemmas on worked cases") {
  // (1 -> 11) in 0101 over every subset of {1, 3}: images are distinct.
  std::set<Word> images;
  for (const auto& s : std::vector<std::vector<std::size_t>>{{}, {1}, {3}, {1, 3}})
    images.insert(replace_seq(b("0101"), b("1"), b("11"), s));
  CHECK(images.size() == 4);

  // (01 -> 1) in 010101: the m-th replacement lands at s_m - m.
  const Word u = b("010101");
  const auto occ = occurrences(u, b("01"));
  CHECK(occ == std::vector<std::size_t>{0, 2, 4});
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < 3; ++k)
      if (mask >> k & 1) s.push_back(occ[k]);
    const Word image = replace_seq(u, b("01"), b("1"), s);
    for (std::size_t m = 0; m < s.size(); ++m) CHECK(occurs_at(image, b("1"), s[m] - m));
  }
}

TEST_CASE("exhaustive sweeps are schedule independent") {
  const auto a = check_replacement_lemmas(2, 2, 7);
  const auto c = check_replacement_lemmas(2, 2, 7);
  CHECK(a.to_json() == c.to_json());
  CHECK(a.status == CheckStatus::pass);
}

TEST_CASE("exact respects decider agrees with bounded sweep over three symbols") {
  const Alphabet abc({"0", "1", "2"});
  for (std::size_t lv = 1; lv <= 2; ++lv)
    for (std::size_t lw = 1; lw <= 2; ++lw)
      for (const auto& v : oracle::all_strings("012", lv))
        for (const auto& w : oracle::all_strings("012", lw)) {
          if (v == w) continue;
          const Word vv = abc.parse(v), ww = abc.parse(w);
          CHECK(respects_transition_exact(vv, ww).respects ==
                respects_transition_bounded(vv, ww, 3, exactness_radius(lv, lw)).respects);
        }
}
