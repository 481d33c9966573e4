#pragma once

#include <cstddef>

#include "symdyn/subshift.hpp"

namespace symdyn {

struct RespectingExtension {
  Word alpha;
  Word beta;
  std::size_t floor = 0;  // the lower bound N imposed on |alpha|
};

/// Smallest n such that |L_k(X)| >= 2k for every k in [n, horizon].
std::size_t growth_threshold(const Subshift& x, std::size_t horizon = 64);

/// Searches suffixes alpha of `left` and prefixes beta of `right` so that
/// alpha v beta respects the transition to alpha w beta, alpha v is not a
/// suffix of alpha w, alpha w beta is not a prefix of alpha v beta, every word
/// of L_{|alpha|}(X) occurs in alpha v beta and the |alpha|-suffix of
/// alpha v beta occurs in it exactly once. Throws not_found when the samples
/// run out.
RespectingExtension find_respecting_extension(const Subshift& x, std::span<const Symbol> v,
                                              std::span<const Symbol> w,
                                              std::span<const Symbol> left,
                                              std::span<const Symbol> right);

}  // namespace symdyn
