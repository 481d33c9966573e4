#include "symdyn/respecting_extension.hpp"

#include <algorithm>
#include <unordered_set>

namespace symdyn {

std::size_t growth_threshold(const Subshift& x, std::size_t horizon) {
  std::size_t n = horizon + 1;
  for (std::size_t k = horizon; k >= 1; --k) {
    if (count_words(x, k) < BigInt(2 * k)) break;
    n = k;
  }
  if (n > horizon)
    throw Error(ErrorKind::not_found, "language growth never reaches 2n within the horizon");
  return n;
}

namespace {

bool covers_all(std::span<const Symbol> text, const std::vector<Word>& words, std::size_t n) {
  std::unordered_set<Word, WordHash> seen;
  for (std::size_t i = 0; i + n <= text.size(); ++i)
    seen.emplace(text.begin() + static_cast<std::ptrdiff_t>(i),
                 text.begin() + static_cast<std::ptrdiff_t>(i + n));
  return std::all_of(words.begin(), words.end(), [&](const Word& w) { return seen.count(w) > 0; });
}

}  // namespace

RespectingExtension find_respecting_extension(const Subshift& x, std::span<const Symbol> v,
                                              std::span<const Symbol> w,
                                              std::span<const Symbol> left,
                                              std::span<const Symbol> right) {
  if (v.empty() || w.empty()) throw Error(ErrorKind::invalid_argument, "v and w must be nonempty");
  if (std::equal(v.begin(), v.end(), w.begin(), w.end()))
    throw Error(ErrorKind::invalid_argument, "v and w must differ");
  Word sample(left.begin(), left.end());
  sample.insert(sample.end(), v.begin(), v.end());
  sample.insert(sample.end(), right.begin(), right.end());
  if (!member(x, sample))
    throw Error(ErrorKind::invalid_argument, "left.v.right is not in the language");

  const std::size_t floor = std::max(growth_threshold(x), v.size()) + 1;
  for (std::size_t a = floor; a <= left.size(); ++a) {
    const auto alpha = left.subspan(left.size() - a);
    Word av(alpha.begin(), alpha.end()), aw = av;
    av.insert(av.end(), v.begin(), v.end());
    aw.insert(aw.end(), w.begin(), w.end());
    if (affix_flags(av, aw).v_is_suffix_of_w) continue;
    // Counts never shrink with a while the text has fewer windows, so stop.
    const std::size_t windows = av.size() + right.size() - a + 1;
    if (count_words(x, a) > BigInt(windows)) break;
    const auto block = enumerate_words(x, a);
    for (std::size_t b = 0; b <= right.size(); ++b) {
      Word avb = av, awb = aw;
      avb.insert(avb.end(), right.begin(), right.begin() + static_cast<std::ptrdiff_t>(b));
      awb.insert(awb.end(), right.begin(), right.begin() + static_cast<std::ptrdiff_t>(b));
      if (!covers_all(avb, block, a)) continue;
      const std::span<const Symbol> tail(avb.end() - static_cast<std::ptrdiff_t>(a), avb.end());
      if (occurrences(avb, tail).size() != 1) continue;
      const AffixFlags flags = affix_flags(avb, awb);
      if (flags.v_is_suffix_of_w || flags.w_is_prefix_of_v) continue;
      if (!respects_transition_exact(avb, awb)) continue;
      return {Word(alpha.begin(), alpha.end()), Word(right.begin(), right.begin() + static_cast<std::ptrdiff_t>(b)),
              floor};
    }
  }
  throw Error(ErrorKind::not_found, "context samples exhausted before a respecting extension was found");
}

}  // namespace symdyn
