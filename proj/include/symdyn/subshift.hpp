#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symdyn/words.hpp"

namespace symdyn {

using BigInt = boost::multiprecision::cpp_int;

/// Gap set S of an S-gap shift: either a finite set or E ∪ [from, ∞).
class SGapSet {
 public:
  static SGapSet finite(std::vector<unsigned> gaps);
  static SGapSet cofinite(std::vector<unsigned> extra, unsigned from);

  bool is_finite() const noexcept { return finite_; }
  bool contains(unsigned n) const noexcept;
  /// The finite list, or the extra elements below `from` in the cofinite case.
  const std::vector<unsigned>& elements() const noexcept { return elements_; }
  unsigned from() const noexcept { return from_; }
  unsigned max_finite() const noexcept { return elements_.empty() ? 0 : elements_.back(); }
  /// gcd of {n+1 : n in S}; 1 means the measure of maximal entropy is mixing.
  unsigned gcd_plus_one() const noexcept;
  std::string describe() const;

  friend bool operator==(const SGapSet&, const SGapSet&) = default;

 private:
  SGapSet() = default;
  bool finite_ = true;
  std::vector<unsigned> elements_;
  unsigned from_ = 0;
};

/// Declarative description of a one-dimensional subshift.
class SubshiftSpec {
 public:
  enum class Kind { full, sft, sgap };

  static SubshiftSpec full(Alphabet alphabet);
  static SubshiftSpec sft(Alphabet alphabet, std::vector<Word> forbidden);
  static SubshiftSpec sgap(SGapSet gaps);
  static SubshiftSpec golden_mean();

  Kind kind() const noexcept { return kind_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& forbidden() const noexcept { return forbidden_; }
  const SGapSet& gaps() const;
  std::string describe() const;

  friend bool operator==(const SubshiftSpec&, const SubshiftSpec&) = default;

 private:
  SubshiftSpec(Kind kind, Alphabet alphabet) : kind_(kind), alphabet_(std::move(alphabet)) {}
  Kind kind_;
  Alphabet alphabet_;
  std::vector<Word> forbidden_;
  std::optional<SGapSet> gaps_;
};

struct Transition {
  Symbol label;
  std::size_t target;
};

/// Labeled graph presenting a subshift. Right-resolving (at most one
/// transition per label out of each state) and trimmed to its essential part:
/// every state has an incoming and an outgoing transition. The language is
/// the set of labels of finite paths.
class Automaton {
 public:
  struct Edge {
    std::size_t source;
    Symbol label;
    std::size_t target;
  };

  /// Trims and validates the graph. Throws empty_subshift when nothing
  /// survives trimming and invalid_argument when the graph is not
  /// right-resolving.
  Automaton(std::size_t alphabet_size, std::vector<std::string> state_names,
            const std::vector<Edge>& edges);

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t num_states() const noexcept { return names_.size(); }
  std::size_t states_before_trim() const noexcept { return untrimmed_states_; }
  const std::string& state_name(std::size_t s) const { return names_.at(s); }
  const std::vector<Transition>& out(std::size_t s) const { return out_.at(s); }
  std::optional<std::size_t> step(std::size_t s, Symbol a) const;
  bool irreducible() const noexcept { return irreducible_; }
  /// Strongly connected components with at least one internal edge cycle.
  const std::vector<std::vector<std::size_t>>& components() const noexcept { return components_; }
  std::size_t num_edges() const noexcept;
  /// Dense n x n matrix of edge counts.
  std::vector<double> adjacency() const;

 private:
  std::size_t alphabet_size_;
  std::size_t untrimmed_states_;
  std::vector<std::string> names_;
  std::vector<std::vector<Transition>> out_;
  std::vector<std::vector<std::size_t>> components_;
  bool irreducible_ = false;
};

/// m-block presentation for SFT/full specs (m = max forbidden length - 1,
/// at least 1) and the gap-counter presentation for S-gap specs.
Automaton build_automaton(const SubshiftSpec& spec);

/// Memory of the presentation: the SFT block length, or 0 for S-gap specs.
std::size_t presentation_memory(const SubshiftSpec& spec);

/// Subset construction of an automaton started from the set of all states.
/// Words of the language correspond one-to-one with paths from the start.
class LanguageDfa {
 public:
  static constexpr std::size_t kDead = static_cast<std::size_t>(-1);

  explicit LanguageDfa(const Automaton& automaton, std::size_t max_subsets = 1 << 16);

  std::size_t start() const noexcept { return 0; }
  std::size_t num_states() const noexcept { return subsets_.size(); }
  std::size_t next(std::size_t state, Symbol a) const { return delta_[state * alphabet_size_ + a]; }
  /// Automaton states reached after reading the word that led here.
  const std::vector<std::size_t>& subset(std::size_t state) const { return subsets_.at(state); }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }

 private:
  std::size_t alphabet_size_;
  std::vector<std::vector<std::size_t>> subsets_;
  std::vector<std::size_t> delta_;
};

/// A compiled subshift: its definition together with its presentation, the subset
/// DFA of its language and the follower-set order of presentation states.
/// Immutable after construction.
class Subshift {
 public:
  explicit Subshift(SubshiftSpec spec);

  const SubshiftSpec& spec() const noexcept { return spec_; }
  const Alphabet& alphabet() const noexcept { return spec_.alphabet(); }
  const Automaton& automaton() const noexcept { return *automaton_; }
  std::shared_ptr<const Automaton> automaton_ptr() const noexcept { return automaton_; }
  const LanguageDfa& dfa() const noexcept { return dfa_; }
  std::size_t memory() const noexcept { return memory_; }

  /// Every word readable from state p is readable from state q.
  bool follower_contained(std::size_t p, std::size_t q) const {
    return follower_order_[p * automaton_->num_states() + q] != 0;
  }

  /// Automaton states in which a path labeled w can start.
  std::vector<std::size_t> left_states(std::span<const Symbol> w) const;
  /// End state of the path labeled w from p, if any.
  std::optional<std::size_t> read(std::size_t p, std::span<const Symbol> w) const;

 private:
  SubshiftSpec spec_;
  std::shared_ptr<const Automaton> automaton_;
  LanguageDfa dfa_;
  std::size_t memory_;
  std::vector<char> follower_order_;
};

// ---------------------------------------------------------------------------
// Language queries.

bool member(const Subshift& x, std::span<const Symbol> u);

BigInt count_words(const Subshift& x, std::size_t n);

/// |L_n| / lambda^n, renormalizing by lambda at every step.
double count_words_scaled(const Subshift& x, std::size_t n, double lambda);

/// Scaled counts for every length 0..n in one pass.
std::vector<double> count_words_scaled_series(const Subshift& x, std::size_t n, double lambda);

/// Words of length n in canonical (alphabet) order. Throws resource_limit
/// when the language has more than `budget` words of that length.
std::vector<Word> enumerate_words(const Subshift& x, std::size_t n,
                                  std::uint64_t budget = std::uint64_t{1} << 22);

/// All words of length 1..max_length, shortest first.
std::vector<Word> enumerate_words_up_to(const Subshift& x, std::size_t max_length,
                                        std::uint64_t budget = std::uint64_t{1} << 22);

struct EntropyResult {
  double h = 0.0;
  double lambda = 1.0;
  bool irreducible = true;
  /// For S-gap specs: lambda from the root equation, checked against the
  /// automaton value.
  std::optional<double> root_lambda;
  double perron_residual = 0.0;
};

/// Topological entropy. Reducible presentations are accepted; the value is
/// the maximum over components and `irreducible` is false.
EntropyResult entropy(const Subshift& x);

/// Unique lambda >= 1 with sum_{n in S} lambda^{-n-1} = 1.
double sgap_lambda(const SGapSet& gaps);

/// sum_{n in S} x^{n+1}, with the cofinite tail in closed form.
double sgap_power_sum(const SGapSet& gaps, double x);

bool is_synchronizing(const Subshift& x, std::span<const Symbol> w);

/// For all u, w in L(X) there is v in L_N(X) with uvw in L(X).
bool specification_distance_holds(const Subshift& x, std::size_t distance);

struct HereditaryReport {
  bool holds = true;
  std::size_t checked_words = 0;
  std::optional<Word> witness_source;  // word of the language
  std::optional<Word> witness_image;   // its modification that left the language
};

/// Partial order on symbols: leq(a, b) means a <= b. The default is the
/// alphabet order.
using SymbolOrder = std::vector<std::vector<char>>;
SymbolOrder linear_order(std::size_t alphabet_size);

/// Necessary-condition sweeps over all words of length <= max_length.
HereditaryReport is_i_hereditary_bounded(const Subshift& x, std::size_t max_length);
HereditaryReport is_hereditary_bounded(const Subshift& x, const SymbolOrder& order,
                                       std::size_t max_length);

}  // namespace symdyn
