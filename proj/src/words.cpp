#include <algorithm>
#include <cstdint>
#include <numeric>

#include "symdyn/words.hpp"

namespace symdyn {

namespace {

void require_nonempty(std::span<const Symbol> v, const char* what) {
  if (v.empty())
    throw Error(ErrorKind::invalid_argument, std::string(what) + " must be a nonempty word");
}

bool equal_ranges(std::span<const Symbol> a, std::span<const Symbol> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::string_view to_string(TransitionClause clause) {
  switch (clause) {
    case TransitionClause::later_v_survives: return "i";
    case TransitionClause::earlier_v_survives: return "ii";
    case TransitionClause::earlier_w_survives: return "iii";
    case TransitionClause::order_preserved: return "iv";
  }
  return "?";
}

bool occurs_at(std::span<const Symbol> u, std::span<const Symbol> v, std::size_t i) noexcept {
  if (v.empty() || i > u.size() || u.size() - i < v.size()) return false;
  return std::equal(v.begin(), v.end(), u.begin() + static_cast<std::ptrdiff_t>(i));
}

std::vector<std::size_t> occurrences(std::span<const Symbol> u, std::span<const Symbol> v) {
  require_nonempty(v, "pattern");
  std::vector<std::size_t> out;
  if (v.size() > u.size()) return out;
  for (std::size_t i = 0; i + v.size() <= u.size(); ++i)
    if (occurs_at(u, v, i)) out.push_back(i);
  return out;
}

Word replace_at(std::span<const Symbol> u, std::span<const Symbol> v,
                std::span<const Symbol> w, std::size_t i) {
  require_nonempty(v, "replaced word");
  if (!occurs_at(u, v, i))
    throw Error(ErrorKind::invalid_position,
                "position " + std::to_string(i) + " is not an occurrence of the replaced word");
  Word out;
  out.reserve(u.size() - v.size() + w.size());
  out.insert(out.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
  out.insert(out.end(), w.begin(), w.end());
  out.insert(out.end(), u.begin() + static_cast<std::ptrdiff_t>(i + v.size()), u.end());
  return out;
}

Word replace_seq(std::span<const Symbol> u, std::span<const Symbol> v,
                 std::span<const Symbol> w, std::span<const std::size_t> positions) {
  require_nonempty(v, "replaced word");
  for (std::size_t k = 1; k < positions.size(); ++k)
    if (positions[k] <= positions[k - 1])
      throw Error(ErrorKind::invalid_argument, "replacement positions must be strictly increasing");
  for (std::size_t s : positions)
    if (!occurs_at(u, v, s))
      throw Error(ErrorKind::invalid_position,
                  "position " + std::to_string(s) + " is not an occurrence in the original word");

  const std::ptrdiff_t shift =
      static_cast<std::ptrdiff_t>(w.size()) - static_cast<std::ptrdiff_t>(v.size());
  Word current(u.begin(), u.end());
  Word next;
  for (std::size_t m = 0; m < positions.size(); ++m) {
    const std::ptrdiff_t at = static_cast<std::ptrdiff_t>(positions[m]) +
                              static_cast<std::ptrdiff_t>(m) * shift;
    if (at < 0 || !occurs_at(current, v, static_cast<std::size_t>(at)))
      throw Error(ErrorKind::replacement_broken,
                  "replacement " + std::to_string(m) + " (original position " +
                      std::to_string(positions[m]) + ") no longer finds the replaced word");
    const auto i = static_cast<std::size_t>(at);
    next.clear();
    next.insert(next.end(), current.begin(), current.begin() + at);
    next.insert(next.end(), w.begin(), w.end());
    next.insert(next.end(), current.begin() + static_cast<std::ptrdiff_t>(i + v.size()),
                current.end());
    current.swap(next);
  }
  return current;
}

Word replace_seq(const ReplacementPlan& plan) {
  return replace_seq(plan.u, plan.v, plan.w, plan.positions);
}

std::vector<std::size_t> self_overlaps(std::span<const Symbol> v) {
  require_nonempty(v, "word");
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d < v.size(); ++d)
    if (equal_ranges(v.subspan(d), v.first(v.size() - d))) out.push_back(d);
  return out;
}

AffixFlags affix_flags(std::span<const Symbol> v, std::span<const Symbol> w) {
  require_nonempty(v, "v");
  require_nonempty(w, "w");
  AffixFlags f;
  f.v_is_suffix_of_w = v.size() <= w.size() && equal_ranges(v, w.last(v.size()));
  f.w_is_prefix_of_v = w.size() <= v.size() && equal_ranges(w, v.first(w.size()));
  return f;
}

std::optional<TransitionWitness> transition_violation(std::span<const Symbol> u,
                                                      std::span<const Symbol> v,
                                                      std::span<const Symbol> w, std::size_t i) {
  const Word replaced = replace_at(u, v, w, i);
  const std::ptrdiff_t shift =
      static_cast<std::ptrdiff_t>(w.size()) - static_cast<std::ptrdiff_t>(v.size());
  auto witness = [&](std::size_t j, TransitionClause c) {
    return TransitionWitness{Word(u.begin(), u.end()), i, j, c};
  };

  for (std::size_t j = 0; j + v.size() <= u.size(); ++j) {
    if (j == i || !occurs_at(u, v, j)) continue;
    if (j > i) {
      const std::ptrdiff_t moved = static_cast<std::ptrdiff_t>(j) + shift;
      if (moved <= static_cast<std::ptrdiff_t>(i))
        return witness(j, TransitionClause::order_preserved);
      if (!occurs_at(replaced, v, static_cast<std::size_t>(moved)))
        return witness(j, TransitionClause::later_v_survives);
    } else if (!occurs_at(replaced, v, j)) {
      return witness(j, TransitionClause::earlier_v_survives);
    }
  }
  for (std::size_t j = 0; j < i && j + w.size() <= u.size(); ++j)
    if (occurs_at(u, w, j) && !occurs_at(replaced, w, j))
      return witness(j, TransitionClause::earlier_w_survives);
  return std::nullopt;
}

namespace {

// One placement of the replaced occurrence of v (at i) against a second
// occurrence of `other` (at j). Positions of u covered by neither occurrence
// are unconstrained, and since the two occurrences overlap their union is an
// interval; anything the clause needs outside it can be made to fail by
// truncating u or choosing a different letter.
struct Placement {
  Word letters;  // the union of the two occurrences, as a concrete word
  std::size_t i = 0;
  std::size_t j = 0;
};

std::optional<Placement> place(std::span<const Symbol> v, std::span<const Symbol> other,
                               std::ptrdiff_t offset) {
  const std::ptrdiff_t lo = std::min<std::ptrdiff_t>(0, offset);
  const std::ptrdiff_t hi = std::max<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(v.size()),
                                                     offset + static_cast<std::ptrdiff_t>(other.size()));
  std::vector<int> cells(static_cast<std::size_t>(hi - lo), -1);
  const auto i = static_cast<std::size_t>(-lo);
  const auto j = static_cast<std::size_t>(offset - lo);
  for (std::size_t k = 0; k < v.size(); ++k) cells[i + k] = v[k];
  for (std::size_t k = 0; k < other.size(); ++k) {
    int& c = cells[j + k];
    if (c >= 0 && c != other[k]) return std::nullopt;
    c = other[k];
  }
  Placement p;
  p.i = i;
  p.j = j;
  p.letters.reserve(cells.size());
  for (int c : cells) p.letters.push_back(static_cast<Symbol>(c));  // union is contiguous
  return p;
}

// Does `target` survive at u'-position `start` after v at p.i is replaced by w,
// for every u extending p.letters? Positions of u' that map outside the known
// letters count as failures.
bool survives(const Placement& p, std::span<const Symbol> v, std::span<const Symbol> w,
              std::span<const Symbol> target, std::ptrdiff_t start) {
  const std::ptrdiff_t shift =
      static_cast<std::ptrdiff_t>(w.size()) - static_cast<std::ptrdiff_t>(v.size());
  const auto i = static_cast<std::ptrdiff_t>(p.i);
  const auto n = static_cast<std::ptrdiff_t>(p.letters.size());
  for (std::size_t k = 0; k < target.size(); ++k) {
    const std::ptrdiff_t pos = start + static_cast<std::ptrdiff_t>(k);
    std::ptrdiff_t src = -1;
    int letter = -1;
    if (pos < 0) return false;
    if (pos < i) {
      src = pos;
    } else if (pos < i + static_cast<std::ptrdiff_t>(w.size())) {
      letter = w[static_cast<std::size_t>(pos - i)];
    } else {
      src = pos - shift;
    }
    if (letter < 0) {
      if (src < 0 || src >= n) return false;
      letter = p.letters[static_cast<std::size_t>(src)];
    }
    if (letter != target[k]) return false;
  }
  return true;
}

TransitionVerdict refuted(std::span<const Symbol> v, std::span<const Symbol> w,
                          const Placement& p, TransitionClause clause) {
  auto checked = transition_violation(p.letters, v, w, p.i);
  if (!checked)
    throw Error(ErrorKind::internal, "exact transition decider produced an unconfirmed witness");
  TransitionVerdict verdict;
  verdict.respects = false;
  verdict.witness = TransitionWitness{p.letters, p.i, p.j, clause};
  return verdict;
}

}  // namespace

TransitionVerdict respects_transition_exact(std::span<const Symbol> v, std::span<const Symbol> w) {
  require_nonempty(v, "v");
  require_nonempty(w, "w");
  if (equal_ranges(v, w))
    throw Error(ErrorKind::invalid_argument, "respects_transition_exact requires v != w");

  const auto a = static_cast<std::ptrdiff_t>(v.size());
  const auto b = static_cast<std::ptrdiff_t>(w.size());
  const std::ptrdiff_t shift = b - a;

  // (iv): a later occurrence at distance d moves to i+d+shift, which must stay
  // right of i. Later occurrences are at self-overlap offsets or at d >= |v|.
  for (std::size_t d : self_overlaps(v)) {
    if (static_cast<std::ptrdiff_t>(d) <= a - b) {
      auto p = place(v, v, static_cast<std::ptrdiff_t>(d));
      return refuted(v, w, *p, TransitionClause::order_preserved);
    }
  }

  // (i): later overlapping v at i+d, 0<d<|v|, must reappear at i+d+shift.
  for (std::ptrdiff_t d = 1; d < a; ++d) {
    auto p = place(v, v, d);
    if (!p) continue;
    if (!survives(*p, v, w, v, static_cast<std::ptrdiff_t>(p->j) + shift))
      return refuted(v, w, *p, TransitionClause::later_v_survives);
  }
  // (ii): earlier overlapping v at i-d must stay put.
  for (std::ptrdiff_t d = 1; d < a; ++d) {
    auto p = place(v, v, -d);
    if (!p) continue;
    if (!survives(*p, v, w, v, static_cast<std::ptrdiff_t>(p->j)))
      return refuted(v, w, *p, TransitionClause::earlier_v_survives);
  }
  // (iii): earlier overlapping w at i-d must stay put.
  for (std::ptrdiff_t d = 1; d < b; ++d) {
    auto p = place(v, w, -d);
    if (!p) continue;
    if (!survives(*p, v, w, w, static_cast<std::ptrdiff_t>(p->j)))
      return refuted(v, w, *p, TransitionClause::earlier_w_survives);
  }
  return {};
}

TransitionVerdict respects_transition_bounded(std::span<const Symbol> v,
                                              std::span<const Symbol> w,
                                              std::size_t alphabet_size, std::size_t max_length,
                                              std::uint64_t word_budget) {
  require_nonempty(v, "v");
  require_nonempty(w, "w");
  if (alphabet_size == 0) throw Error(ErrorKind::invalid_argument, "alphabet size must be positive");
  if (max_length < v.size())
    throw Error(ErrorKind::invalid_argument, "sweep length must be at least |v|");
  for (Symbol s : v)
    if (s >= alphabet_size) throw Error(ErrorKind::invalid_argument, "v uses symbols outside the alphabet");
  for (Symbol s : w)
    if (s >= alphabet_size) throw Error(ErrorKind::invalid_argument, "w uses symbols outside the alphabet");

  // Total number of words of length <= max_length.
  std::uint64_t total = 0;
  std::uint64_t layer = 1;
  for (std::size_t n = 0; n <= max_length; ++n) {
    total += layer;
    if (total > word_budget)
      throw Error(ErrorKind::resource_limit, "bounded transition sweep exceeds the word budget");
    if (n < max_length) {
      if (layer > word_budget / alphabet_size + 1)
        throw Error(ErrorKind::resource_limit, "bounded transition sweep exceeds the word budget");
      layer *= alphabet_size;
    }
  }
  if (equal_ranges(v, w)) return {};

  Word u;
  for (std::size_t n = v.size(); n <= max_length; ++n) {
    u.assign(n, 0);
    while (true) {
      for (std::size_t i = 0; i + v.size() <= n; ++i) {
        if (!occurs_at(u, v, i)) continue;
        if (auto bad = transition_violation(u, v, w, i)) {
          TransitionVerdict verdict;
          verdict.respects = false;
          verdict.witness = std::move(bad);
          return verdict;
        }
      }
      // odometer increment, last position fastest
      std::size_t k = n;
      while (k > 0) {
        --k;
        if (++u[k] < alphabet_size) break;
        u[k] = 0;
        if (k == 0) {
          k = n + 1;
          break;
        }
      }
      if (k == n + 1 || n == 0) break;
    }
  }
  return {};
}

}  // namespace symdyn
