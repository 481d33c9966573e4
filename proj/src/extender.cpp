#include "symdyn/extender.hpp"

#include <algorithm>

namespace symdyn {

std::string_view to_string(ExtenderRelation relation) {
  switch (relation) {
    case ExtenderRelation::equal: return "equal";
    case ExtenderRelation::proper_subset: return "proper-subset";
    case ExtenderRelation::proper_superset: return "proper-superset";
    case ExtenderRelation::incomparable: return "incomparable";
  }
  return "?";
}

namespace {

ExtenderRelation relation_from(bool v_in_w, bool w_in_v) {
  if (v_in_w && w_in_v) return ExtenderRelation::equal;
  if (v_in_w) return ExtenderRelation::proper_subset;
  if (w_in_v) return ExtenderRelation::proper_superset;
  return ExtenderRelation::incomparable;
}

}  // namespace

ExtenderDescriptor extender_descriptor(const Subshift& x, std::span<const Symbol> w) {
  if (!member(x, w))
    throw Error(ErrorKind::invalid_argument,
                "word " + x.alphabet().format(w) + " is not in the language");
  ExtenderDescriptor d;
  const std::size_t n = x.automaton().num_states();
  // Right rays depend only on the follower set, so name each target by the
  // least state with the same followers.
  auto canonical = [&](std::size_t q) {
    for (std::size_t r = 0; r < q; ++r)
      if (x.follower_contained(q, r) && x.follower_contained(r, q)) return r;
    return q;
  };
  for (std::size_t p = 0; p < n; ++p)
    if (auto q = x.read(p, w)) {
      const std::size_t c = canonical(*q);
      d.left_classes.push_back(p);
      d.right_classes.push_back(c);
      d.transfers.emplace_back(p, c);
    }
  std::sort(d.right_classes.begin(), d.right_classes.end());
  d.right_classes.erase(std::unique(d.right_classes.begin(), d.right_classes.end()),
                        d.right_classes.end());
  d.empty = d.left_classes.empty() || d.right_classes.empty();
  return d;
}

bool extender_contained(const Subshift& x, const ExtenderDescriptor& v,
                        const ExtenderDescriptor& w) {
  std::size_t k = 0;
  for (const auto& [p, q] : v.transfers) {
    while (k < w.transfers.size() && w.transfers[k].first < p) ++k;
    if (k == w.transfers.size() || w.transfers[k].first != p) return false;
    if (!x.follower_contained(q, w.transfers[k].second)) return false;
  }
  return true;
}

ExtenderRelation extender_compare(const Subshift& x, std::span<const Symbol> v,
                                  std::span<const Symbol> w) {
  const auto dv = extender_descriptor(x, v);
  const auto dw = extender_descriptor(x, w);
  return relation_from(extender_contained(x, dv, dw), extender_contained(x, dw, dv));
}

WindowedExtender extender_windowed(const Subshift& x, std::span<const Symbol> w,
                                   std::size_t radius, std::uint64_t budget) {
  if (radius == 0) throw Error(ErrorKind::invalid_argument, "window radius must be at least 1");
  const auto block = enumerate_words(x, radius, budget);
  if (static_cast<std::uint64_t>(block.size()) * block.size() > budget)
    throw Error(ErrorKind::resource_limit, "windowed extender exceeds the pair budget");
  WindowedExtender out;
  out.radius = radius;
  Word joined;
  for (const auto& a : block)
    for (const auto& b : block) {
      joined.assign(a.begin(), a.end());
      joined.insert(joined.end(), w.begin(), w.end());
      joined.insert(joined.end(), b.begin(), b.end());
      if (member(x, joined)) out.pairs.emplace_back(a, b);
    }
  return out;
}

ExtenderRelation WindowedComparison::relation() const noexcept {
  return relation_from(v_in_w, w_in_v);
}

WindowedComparison compare_windowed(const Subshift& x, std::span<const Symbol> v,
                                    std::span<const Symbol> w, std::size_t radius,
                                    std::uint64_t budget) {
  const auto ev = extender_windowed(x, v, radius, budget);
  const auto ew = extender_windowed(x, w, radius, budget);
  WindowedComparison c;
  // Both lists come out in the same lexicographic order.
  for (const auto& p : ev.pairs)
    if (!std::binary_search(ew.pairs.begin(), ew.pairs.end(), p)) {
      c.v_in_w = false;
      c.v_not_in_w = p;
      break;
    }
  for (const auto& p : ew.pairs)
    if (!std::binary_search(ev.pairs.begin(), ev.pairs.end(), p)) {
      c.w_in_v = false;
      c.w_not_in_v = p;
      break;
    }
  return c;
}

}  // namespace symdyn
