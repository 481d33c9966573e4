#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symdyn/error.hpp"

namespace symdyn {

using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Finite ordered set of symbol tokens. The order fixes canonical enumeration
/// and, where a symbol order is needed (hereditary checks), the linear order.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  static Alphabet binary();

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::string& token(Symbol s) const;
  std::optional<Symbol> find(std::string_view token) const;

  /// Single-character alphabets read one symbol per character; otherwise
  /// symbols are separated by '.'.
  Word parse(std::string_view text) const;
  std::string format(std::span<const Symbol> word) const;
  bool contains(std::span<const Symbol> word) const noexcept;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
  bool single_char_ = true;
};

/// Parses a word written over {0,1}; shorthand used heavily by S-gap code.
Word binary_word(std::string_view text);
std::string binary_string(std::span<const Symbol> word);

// ---------------------------------------------------------------------------
// Replacement calculus.

/// Sorted start indices of every (possibly overlapping) occurrence of v in u.
std::vector<std::size_t> occurrences(std::span<const Symbol> u, std::span<const Symbol> v);

bool occurs_at(std::span<const Symbol> u, std::span<const Symbol> v, std::size_t i) noexcept;

/// Splices w in place of the occurrence of v at i.
Word replace_at(std::span<const Symbol> u, std::span<const Symbol> v,
                std::span<const Symbol> w, std::size_t i);

struct ReplacementPlan {
  Word u;
  Word v;
  Word w;
  std::vector<std::size_t> positions;  // strictly increasing, subset of O_v(u)
};

/// Left-to-right sequential replacement. The m-th replacement (0-based) is
/// applied at positions[m] + m(|w|-|v|) in the current word; if that is not an
/// occurrence any more the call fails with ErrorKind::replacement_broken.
Word replace_seq(const ReplacementPlan& plan);
Word replace_seq(std::span<const Symbol> u, std::span<const Symbol> v,
                 std::span<const Symbol> w, std::span<const std::size_t> positions);

/// Offsets d in (0,|v|) with v[d..) == v[..|v|-d).
std::vector<std::size_t> self_overlaps(std::span<const Symbol> v);

struct AffixFlags {
  bool v_is_suffix_of_w = false;
  bool w_is_prefix_of_v = false;

  friend bool operator==(const AffixFlags&, const AffixFlags&) = default;
};

AffixFlags affix_flags(std::span<const Symbol> v, std::span<const Symbol> w);

/// The four clauses of "v respects the transition to w".
enum class TransitionClause {
  later_v_survives,    // (i)  j > i, j in O_v(u)  =>  j+|w|-|v| in O_v(u')
  earlier_v_survives,  // (ii) j < i, j in O_v(u)  =>  j in O_v(u')
  earlier_w_survives,  // (iii) j < i, j in O_w(u) =>  j in O_w(u')
  order_preserved,     // (iv) j > i, j in O_v(u)  =>  j+|w|-|v| > i
};

std::string_view to_string(TransitionClause clause);

struct TransitionWitness {
  Word u;
  std::size_t i = 0;  // replaced occurrence of v
  std::size_t j = 0;  // the occurrence whose clause breaks
  TransitionClause clause = TransitionClause::order_preserved;
};

struct TransitionVerdict {
  bool respects = true;
  std::optional<TransitionWitness> witness;

  explicit operator bool() const noexcept { return respects; }
};

/// Checks the four clauses for one word u and one replaced occurrence i.
std::optional<TransitionWitness> transition_violation(std::span<const Symbol> u,
                                                      std::span<const Symbol> v,
                                                      std::span<const Symbol> w, std::size_t i);

/// Exact decision over all words u. Every clause involves the replaced
/// occurrence and one other occurrence overlapping it, so the decision is a
/// finite case analysis over relative offsets; a false answer always carries
/// a witness that has been re-checked with transition_violation().
TransitionVerdict respects_transition_exact(std::span<const Symbol> v, std::span<const Symbol> w);

/// Brute force over every u with |u| <= max_length over an alphabet of the
/// given size. Throws resource_limit when the sweep exceeds word_budget words.
TransitionVerdict respects_transition_bounded(std::span<const Symbol> v,
                                              std::span<const Symbol> w,
                                              std::size_t alphabet_size, std::size_t max_length,
                                              std::uint64_t word_budget = std::uint64_t{1} << 24);

/// Radius at which the bounded sweep is expected to agree with the exact decider.
inline std::size_t exactness_radius(std::size_t v_len, std::size_t w_len) {
  return 2 * v_len + w_len + 2;
}

}  // namespace symdyn
