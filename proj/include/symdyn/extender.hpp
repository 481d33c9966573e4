#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "symdyn/subshift.hpp"

namespace symdyn {

/// Exact certificate of E_X(w) for an automaton-presented shift whose
/// presentation determines the end state of every left ray (m-block and gap
/// counter presentations both do). A left ray ending in state p extends
/// through w exactly when p reads w, and the admissible right rays are then
/// the followers of the state reached. So E(w) is fixed by the transfer map
/// p -> p.w, and the two class sets are its domain and image.
struct ExtenderDescriptor {
  std::vector<std::size_t> left_classes;   // states p that read w
  std::vector<std::size_t> right_classes;  // follower classes of p.w (least member), sorted, deduplicated
  std::vector<std::pair<std::size_t, std::size_t>> transfers;  // (p, class of p.w), sorted by p
  bool empty = true;

  friend bool operator==(const ExtenderDescriptor&, const ExtenderDescriptor&) = default;
};

enum class ExtenderRelation { equal, proper_subset, proper_superset, incomparable };

std::string_view to_string(ExtenderRelation relation);

/// Throws invalid_argument when w is not in the language.
ExtenderDescriptor extender_descriptor(const Subshift& x, std::span<const Symbol> w);

/// E(v) subset of E(w): every left class of v is a left class of w and the
/// right rays after v are among those after w from the same left class.
bool extender_contained(const Subshift& x, const ExtenderDescriptor& v,
                        const ExtenderDescriptor& w);

ExtenderRelation extender_compare(const Subshift& x, std::span<const Symbol> v,
                                  std::span<const Symbol> w);

struct WindowedExtender {
  std::size_t radius = 0;
  std::vector<std::pair<Word, Word>> pairs;  // (alpha, beta) in L_L x L_L, sorted
};

WindowedExtender extender_windowed(const Subshift& x, std::span<const Symbol> w,
                                   std::size_t radius,
                                   std::uint64_t budget = std::uint64_t{1} << 22);

struct WindowedComparison {
  bool v_in_w = true;
  bool w_in_v = true;
  std::optional<std::pair<Word, Word>> v_not_in_w;  // pair extending v but not w
  std::optional<std::pair<Word, Word>> w_not_in_v;

  ExtenderRelation relation() const noexcept;
};

/// Containment of windowed sets is necessary for containment of extender
/// sets; for SFTs it is also sufficient once radius >= memory.
WindowedComparison compare_windowed(const Subshift& x, std::span<const Symbol> v,
                                    std::span<const Symbol> w, std::size_t radius,
                                    std::uint64_t budget = std::uint64_t{1} << 22);

}  // namespace symdyn
