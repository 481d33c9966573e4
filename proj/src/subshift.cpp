#include "symdyn/subshift.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "symdyn/linalg.hpp"

namespace symdyn {

// ---------------------------------------------------------------------------
// SGapSet

SGapSet SGapSet::finite(std::vector<unsigned> gaps) {
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  if (gaps.empty()) throw Error(ErrorKind::invalid_argument, "finite gap set must be nonempty");
  SGapSet s;
  s.finite_ = true;
  s.elements_ = std::move(gaps);
  return s;
}

SGapSet SGapSet::cofinite(std::vector<unsigned> extra, unsigned from) {
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  if (!extra.empty() && extra.back() >= from)
    throw Error(ErrorKind::invalid_argument,
                "extra gaps of a cofinite gap set must lie below 'from'");
  SGapSet s;
  s.finite_ = false;
  s.elements_ = std::move(extra);
  s.from_ = from;
  return s;
}

bool SGapSet::contains(unsigned n) const noexcept {
  if (!finite_ && n >= from_) return true;
  return std::binary_search(elements_.begin(), elements_.end(), n);
}

unsigned SGapSet::gcd_plus_one() const noexcept {
  unsigned g = 0;
  for (unsigned n : elements_) g = std::gcd(g, n + 1);
  if (!finite_) g = std::gcd(g, std::gcd(from_ + 1, from_ + 2));
  return g;
}

std::string SGapSet::describe() const {
  std::ostringstream os;
  if (finite_ || !elements_.empty()) {
    os << '{';
    for (std::size_t k = 0; k < elements_.size(); ++k) os << (k ? "," : "") << elements_[k];
    os << '}';
  }
  if (!finite_) os << (elements_.empty() ? "" : "+") << '[' << from_ << ",inf)";
  return os.str();
}

// ---------------------------------------------------------------------------
// SubshiftSpec

SubshiftSpec SubshiftSpec::full(Alphabet alphabet) { return SubshiftSpec(Kind::full, std::move(alphabet)); }

SubshiftSpec SubshiftSpec::sft(Alphabet alphabet, std::vector<Word> forbidden) {
  for (const auto& f : forbidden) {
    if (f.empty()) throw Error(ErrorKind::invalid_argument, "forbidden words must be nonempty");
    if (!alphabet.contains(f))
      throw Error(ErrorKind::invalid_argument, "forbidden word uses symbols outside the alphabet");
  }
  SubshiftSpec s(Kind::sft, std::move(alphabet));
  s.forbidden_ = std::move(forbidden);
  return s;
}

SubshiftSpec SubshiftSpec::sgap(SGapSet gaps) {
  SubshiftSpec s(Kind::sgap, Alphabet::binary());
  s.gaps_ = std::move(gaps);
  return s;
}

SubshiftSpec SubshiftSpec::golden_mean() {
  return sft(Alphabet::binary(), {binary_word("11")});
}

const SGapSet& SubshiftSpec::gaps() const {
  if (!gaps_) throw Error(ErrorKind::invalid_argument, "spec is not an S-gap shift");
  return *gaps_;
}

std::string SubshiftSpec::describe() const {
  switch (kind_) {
    case Kind::full: return "full(" + std::to_string(alphabet_.size()) + ")";
    case Kind::sgap: return "sgap" + gaps_->describe();
    case Kind::sft: {
      std::string s = "sft{";
      for (std::size_t k = 0; k < forbidden_.size(); ++k)
        s += (k ? "," : "") + alphabet_.format(forbidden_[k]);
      return s + "}";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Automaton

Automaton::Automaton(std::size_t alphabet_size, std::vector<std::string> state_names,
                     const std::vector<Edge>& edges)
    : alphabet_size_(alphabet_size), untrimmed_states_(state_names.size()) {
  const std::size_t n = state_names.size();
  std::vector<std::vector<Transition>> out(n);
  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  for (const auto& e : edges) {
    if (e.source >= n || e.target >= n || e.label >= alphabet_size)
      throw Error(ErrorKind::invalid_argument, "automaton edge out of range");
    for (const auto& t : out[e.source])
      if (t.label == e.label)
        throw Error(ErrorKind::invalid_argument, "automaton is not right-resolving");
    out[e.source].push_back({e.label, e.target});
  }

  // Iteratively drop states without an incoming or outgoing edge.
  std::vector<char> alive(n, 1);
  for (std::size_t s = 0; s < n; ++s)
    for (const auto& t : out[s]) {
      ++outdeg[s];
      ++indeg[t.target];
    }
  std::vector<std::vector<std::size_t>> preds(n);
  for (std::size_t s = 0; s < n; ++s)
    for (const auto& t : out[s]) preds[t.target].push_back(s);
  std::queue<std::size_t> doomed;
  for (std::size_t s = 0; s < n; ++s)
    if (indeg[s] == 0 || outdeg[s] == 0) {
      alive[s] = 0;
      doomed.push(s);
    }
  while (!doomed.empty()) {
    const std::size_t s = doomed.front();
    doomed.pop();
    for (const auto& t : out[s])
      if (alive[t.target] && --indeg[t.target] == 0) {
        alive[t.target] = 0;
        doomed.push(t.target);
      }
    for (std::size_t p : preds[s])
      if (alive[p] && --outdeg[p] == 0) {
        alive[p] = 0;
        doomed.push(p);
      }
  }

  std::vector<std::size_t> index(n, static_cast<std::size_t>(-1));
  for (std::size_t s = 0; s < n; ++s)
    if (alive[s]) {
      index[s] = names_.size();
      names_.push_back(std::move(state_names[s]));
    }
  if (names_.empty()) throw Error(ErrorKind::empty_subshift, "the subshift is empty");
  out_.resize(names_.size());
  for (std::size_t s = 0; s < n; ++s) {
    if (!alive[s]) continue;
    for (const auto& t : out[s])
      if (alive[t.target]) out_[index[s]].push_back({t.label, index[t.target]});
    std::sort(out_[index[s]].begin(), out_[index[s]].end(),
              [](const Transition& a, const Transition& b) { return a.label < b.label; });
  }

  // Tarjan's algorithm, iterative.
  const std::size_t m = names_.size();
  std::vector<std::size_t> order(m, 0), low(m, 0), stack;
  std::vector<char> on_stack(m, 0), visited(m, 0);
  std::size_t counter = 0;
  struct Frame {
    std::size_t v;
    std::size_t next_edge;
  };
  for (std::size_t root = 0; root < m; ++root) {
    if (visited[root]) continue;
    std::vector<Frame> frames{{root, 0}};
    visited[root] = 1;
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_edge < out_[f.v].size()) {
        const std::size_t w = out_[f.v][f.next_edge++].target;
        if (!visited[w]) {
          visited[w] = 1;
          order[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], order[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == order[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        bool cyclic = comp.size() > 1;
        if (!cyclic)
          for (const auto& t : out_[v]) cyclic = cyclic || t.target == v;
        if (cyclic) components_.push_back(std::move(comp));
      }
    }
  }
  std::sort(components_.begin(), components_.end());
  irreducible_ = components_.size() == 1 && components_[0].size() == m;
}

std::optional<std::size_t> Automaton::step(std::size_t s, Symbol a) const {
  for (const auto& t : out_.at(s))
    if (t.label == a) return t.target;
  return std::nullopt;
}

std::size_t Automaton::num_edges() const noexcept {
  std::size_t e = 0;
  for (const auto& o : out_) e += o.size();
  return e;
}

std::vector<double> Automaton::adjacency() const {
  const std::size_t n = num_states();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t s = 0; s < n; ++s)
    for (const auto& t : out_[s]) a[s * n + t.target] += 1.0;
  return a;
}

std::size_t presentation_memory(const SubshiftSpec& spec) {
  switch (spec.kind()) {
    case SubshiftSpec::Kind::full: return 1;
    case SubshiftSpec::Kind::sgap: return 0;
    case SubshiftSpec::Kind::sft: {
      std::size_t longest = 0;
      for (const auto& f : spec.forbidden()) longest = std::max(longest, f.size());
      return std::max<std::size_t>(1, longest == 0 ? 1 : longest - 1);
    }
  }
  return 1;
}

namespace {

Automaton block_automaton(const SubshiftSpec& spec) {
  const Alphabet& alpha = spec.alphabet();
  const std::size_t k = alpha.size();
  const std::size_t m = presentation_memory(spec);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    total *= k;
    if (total > (std::uint64_t{1} << 20))
      throw Error(ErrorKind::resource_limit, "block presentation would exceed 2^20 states");
  }
  const auto& forbidden = spec.forbidden();
  auto avoids = [&](std::span<const Symbol> word, bool suffix_only) {
    for (const auto& f : forbidden) {
      if (f.size() > word.size()) continue;
      if (suffix_only) {
        if (std::equal(f.begin(), f.end(), word.end() - static_cast<std::ptrdiff_t>(f.size())))
          return false;
      } else if (!occurrences(word, f).empty()) {
        return false;
      }
    }
    return true;
  };

  // States: admissible m-blocks, indexed by their base-k code.
  std::vector<std::size_t> index(total, static_cast<std::size_t>(-1));
  std::vector<Word> blocks;
  std::vector<std::string> names;
  Word block(m, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = m; i-- > 0;) {
      block[i] = static_cast<Symbol>(c % k);
      c /= k;
    }
    if (!avoids(block, false)) continue;
    index[code] = blocks.size();
    blocks.push_back(block);
    names.push_back(alpha.format(block));
  }

  std::vector<Automaton::Edge> edges;
  Word extended(m + 1);
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    const Word& b = blocks[s];
    std::copy(b.begin(), b.end(), extended.begin());
    for (Symbol a = 0; a < k; ++a) {
      extended[m] = a;
      if (!avoids(extended, true)) continue;
      std::uint64_t code = 0;
      for (std::size_t i = 1; i <= m; ++i) code = code * k + extended[i];
      if (index[code] == static_cast<std::size_t>(-1)) continue;
      edges.push_back({s, a, index[code]});
    }
  }
  return Automaton(k, std::move(names), edges);
}

// Gap counter: state g = number of 0s since the last 1. Finite S uses
// 0..max(S)+1 (the overflow state has no way out and is trimmed); cofinite
// S = E ∪ [M,∞) uses 0..M with M absorbing on 0.
Automaton gap_automaton(const SGapSet& gaps) {
  const unsigned top = gaps.is_finite() ? gaps.max_finite() + 1 : gaps.from();
  std::vector<std::string> names;
  std::vector<Automaton::Edge> edges;
  for (unsigned g = 0; g <= top; ++g) {
    names.push_back("g" + std::to_string(g));
    if (g < top)
      edges.push_back({g, 0, g + 1});
    else if (!gaps.is_finite())
      edges.push_back({g, 0, g});
    if (gaps.contains(g)) edges.push_back({g, 1, 0});
  }
  return Automaton(2, std::move(names), edges);
}

}  // namespace

Automaton build_automaton(const SubshiftSpec& spec) {
  if (spec.kind() == SubshiftSpec::Kind::sgap) return gap_automaton(spec.gaps());
  return block_automaton(spec);
}

// ---------------------------------------------------------------------------
// LanguageDfa

LanguageDfa::LanguageDfa(const Automaton& automaton, std::size_t max_subsets)
    : alphabet_size_(automaton.alphabet_size()) {
  std::map<std::vector<std::size_t>, std::size_t> ids;
  std::vector<std::size_t> all(automaton.num_states());
  std::iota(all.begin(), all.end(), 0);
  ids.emplace(all, 0);
  subsets_.push_back(all);
  for (std::size_t cur = 0; cur < subsets_.size(); ++cur) {
    for (std::size_t a = 0; a < alphabet_size_; ++a) {
      std::vector<std::size_t> next;
      for (std::size_t s : subsets_[cur])
        if (auto t = automaton.step(s, static_cast<Symbol>(a))) next.push_back(*t);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.empty()) {
        delta_.push_back(kDead);
        continue;
      }
      auto [it, fresh] = ids.emplace(next, subsets_.size());
      if (fresh) {
        if (subsets_.size() >= max_subsets)
          throw Error(ErrorKind::resource_limit, "language DFA exceeds the subset budget");
        subsets_.push_back(std::move(next));
      }
      delta_.push_back(it->second);
    }
  }
}

// ---------------------------------------------------------------------------
// Subshift

Subshift::Subshift(SubshiftSpec spec)
    : spec_(std::move(spec)),
      automaton_(std::make_shared<const Automaton>(build_automaton(spec_))),
      dfa_(*automaton_),
      memory_(presentation_memory(spec_)) {
  // Greatest fixpoint: p <= q unless some move of p cannot be matched by q.
  const Automaton& a = *automaton_;
  const std::size_t n = a.num_states();
  follower_order_.assign(n * n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        char& rel = follower_order_[p * n + q];
        if (!rel) continue;
        for (const auto& t : a.out(p)) {
          auto matched = a.step(q, t.label);
          if (!matched || !follower_order_[t.target * n + *matched]) {
            rel = 0;
            changed = true;
            break;
          }
        }
      }
  }
}

std::optional<std::size_t> Subshift::read(std::size_t p, std::span<const Symbol> w) const {
  std::size_t s = p;
  for (Symbol c : w) {
    auto t = automaton_->step(s, c);
    if (!t) return std::nullopt;
    s = *t;
  }
  return s;
}

std::vector<std::size_t> Subshift::left_states(std::span<const Symbol> w) const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < automaton_->num_states(); ++p)
    if (read(p, w)) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// Language queries

bool member(const Subshift& x, std::span<const Symbol> u) {
  const LanguageDfa& d = x.dfa();
  std::size_t s = d.start();
  for (Symbol c : u) {
    if (c >= d.alphabet_size()) return false;
    s = d.next(s, c);
    if (s == LanguageDfa::kDead) return false;
  }
  return true;
}

BigInt count_words(const Subshift& x, std::size_t n) {
  const LanguageDfa& d = x.dfa();
  std::vector<BigInt> cur(d.num_states()), next(d.num_states());
  cur[d.start()] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    for (auto& c : next) c = 0;
    for (std::size_t s = 0; s < d.num_states(); ++s) {
      if (cur[s].is_zero()) continue;
      for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
        const std::size_t t = d.next(s, static_cast<Symbol>(a));
        if (t != LanguageDfa::kDead) next[t] += cur[s];
      }
    }
    cur.swap(next);
  }
  BigInt total = 0;
  for (const auto& c : cur) total += c;
  return total;
}

std::vector<double> count_words_scaled_series(const Subshift& x, std::size_t n, double lambda) {
  if (!(lambda > 0.0)) throw Error(ErrorKind::invalid_argument, "scale must be positive");
  const LanguageDfa& d = x.dfa();
  std::vector<double> cur(d.num_states(), 0.0), next(d.num_states());
  cur[d.start()] = 1.0;
  std::vector<double> series{1.0};
  series.reserve(n + 1);
  for (std::size_t step = 0; step < n; ++step) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t s = 0; s < d.num_states(); ++s) {
      if (cur[s] == 0.0) continue;
      const double share = cur[s] / lambda;
      for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
        const std::size_t t = d.next(s, static_cast<Symbol>(a));
        if (t != LanguageDfa::kDead) next[t] += share;
      }
    }
    cur.swap(next);
    double total = 0.0;
    for (double c : cur) total += c;
    series.push_back(total);
  }
  return series;
}

double count_words_scaled(const Subshift& x, std::size_t n, double lambda) {
  return count_words_scaled_series(x, n, lambda).back();
}

std::vector<Word> enumerate_words(const Subshift& x, std::size_t n, std::uint64_t budget) {
  if (count_words(x, n) > budget)
    throw Error(ErrorKind::resource_limit, "enumeration of length " + std::to_string(n) +
                                               " exceeds the word budget");
  const LanguageDfa& d = x.dfa();
  std::vector<Word> out;
  Word current;
  current.reserve(n);
  std::function<void(std::size_t)> walk = [&](std::size_t s) {
    if (current.size() == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
      const std::size_t t = d.next(s, static_cast<Symbol>(a));
      if (t == LanguageDfa::kDead) continue;
      current.push_back(static_cast<Symbol>(a));
      walk(t);
      current.pop_back();
    }
  };
  walk(d.start());
  return out;
}

std::vector<Word> enumerate_words_up_to(const Subshift& x, std::size_t max_length,
                                        std::uint64_t budget) {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_length; ++n) {
    auto layer = enumerate_words(x, n, budget);
    if (out.size() + layer.size() > budget)
      throw Error(ErrorKind::resource_limit, "enumeration exceeds the word budget");
    out.insert(out.end(), std::make_move_iterator(layer.begin()),
               std::make_move_iterator(layer.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Entropy

double sgap_power_sum(const SGapSet& gaps, double x) {
  double sum = 0.0;
  for (unsigned n : gaps.elements()) sum += std::pow(x, static_cast<double>(n) + 1.0);
  if (!gaps.is_finite()) {
    if (x >= 1.0) return std::numeric_limits<double>::infinity();
    sum += std::pow(x, static_cast<double>(gaps.from()) + 1.0) / (1.0 - x);
  }
  return sum;
}

namespace {

// d/dx of sgap_power_sum.
double sgap_power_sum_derivative(const SGapSet& gaps, double x) {
  double sum = 0.0;
  for (unsigned n : gaps.elements())
    sum += (static_cast<double>(n) + 1.0) * std::pow(x, static_cast<double>(n));
  if (!gaps.is_finite()) {
    // d/dx x^{M+1}/(1-x) = x^M ((M+1) - M x) / (1-x)^2
    const double m = gaps.from();
    sum += std::pow(x, m) * ((m + 1.0) - m * x) / ((1.0 - x) * (1.0 - x));
  }
  return sum;
}

}  // namespace

double sgap_lambda(const SGapSet& gaps) {
  // Solve for x = 1/lambda in (0,1]; the power sum is increasing in x.
  auto f = [&](double x) { return sgap_power_sum(gaps, x) - 1.0; };
  if (gaps.is_finite() && gaps.elements().size() == 1) return 1.0;
  double lo = 1.0 / 3.0;  // lambda <= 2 for a binary shift
  double hi = 1.0;
  if (!gaps.is_finite()) hi = std::nextafter(1.0, 0.0);
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    const double step = f(x) / sgap_power_sum_derivative(gaps, x);
    const double nx = x - step;
    if (!(nx > 0.0 && nx <= 1.0) || std::abs(f(nx)) > std::abs(f(x))) break;
    x = nx;
  }
  return 1.0 / x;
}

EntropyResult entropy(const Subshift& x) {
  const Automaton& a = x.automaton();
  const std::size_t n = a.num_states();
  const std::vector<double> adj = a.adjacency();
  EntropyResult r;
  r.irreducible = a.irreducible();
  double best = 0.0;
  double residual = 0.0;
  for (const auto& comp : a.components()) {
    const auto sub = submatrix(adj, n, comp);
    const PerronPair p = perron_right(sub, comp.size());
    if (p.value > best) {
      best = p.value;
      residual = p.residual;
    }
  }
  if (a.components().empty()) best = 1.0;  // cannot happen after trimming; keeps h finite
  r.lambda = best;
  r.h = std::log(best);
  r.perron_residual = residual;
  if (x.spec().kind() == SubshiftSpec::Kind::sgap) r.root_lambda = sgap_lambda(x.spec().gaps());
  return r;
}

// ---------------------------------------------------------------------------
// Structural predicates

bool is_synchronizing(const Subshift& x, std::span<const Symbol> w) {
  if (!member(x, w)) throw Error(ErrorKind::invalid_argument, "word is not in the language");
  std::vector<std::size_t> ends;
  for (std::size_t p = 0; p < x.automaton().num_states(); ++p)
    if (auto q = x.read(p, w)) ends.push_back(*q);
  for (std::size_t p : ends)
    for (std::size_t q : ends)
      if (!x.follower_contained(p, q)) return false;
  return true;
}

bool specification_distance_holds(const Subshift& x, std::size_t distance) {
  const Automaton& a = x.automaton();
  const LanguageDfa& d = x.dfa();
  const std::size_t n = a.num_states();
  const std::size_t k = a.alphabet_size();

  auto advance_any = [&](const std::vector<char>& set) {
    std::vector<char> next(n, 0);
    for (std::size_t s = 0; s < n; ++s)
      if (set[s])
        for (const auto& t : a.out(s)) next[t.target] = 1;
    return next;
  };
  auto advance = [&](const std::vector<char>& set, Symbol c) {
    std::vector<char> next(n, 0);
    bool any = false;
    for (std::size_t s = 0; s < n; ++s)
      if (set[s])
        if (auto t = a.step(s, c)) {
          next[*t] = 1;
          any = true;
        }
    return std::make_pair(next, any);
  };

  const std::vector<char> everything(n, 1);
  // Each DFA state is the set of states some word u can end in.
  for (std::size_t ds = 0; ds < d.num_states(); ++ds) {
    std::vector<char> reach(n, 0);
    for (std::size_t s : d.subset(ds)) reach[s] = 1;
    for (std::size_t step = 0; step < distance; ++step) reach = advance_any(reach);
    // Every word of the language must be readable from `reach`.
    std::set<std::pair<std::vector<char>, std::vector<char>>> seen;
    std::vector<std::pair<std::vector<char>, std::vector<char>>> todo{{everything, reach}};
    while (!todo.empty()) {
      auto [lhs, rhs] = std::move(todo.back());
      todo.pop_back();
      if (!seen.insert({lhs, rhs}).second) continue;
      for (std::size_t c = 0; c < k; ++c) {
        auto [l2, lany] = advance(lhs, static_cast<Symbol>(c));
        if (!lany) continue;
        auto [r2, rany] = advance(rhs, static_cast<Symbol>(c));
        if (!rany) return false;
        todo.emplace_back(std::move(l2), std::move(r2));
      }
    }
  }
  return true;
}

SymbolOrder linear_order(std::size_t alphabet_size) {
  SymbolOrder order(alphabet_size, std::vector<char>(alphabet_size, 0));
  for (std::size_t a = 0; a < alphabet_size; ++a)
    for (std::size_t b = a; b < alphabet_size; ++b) order[a][b] = 1;
  return order;
}

HereditaryReport is_i_hereditary_bounded(const Subshift& x, std::size_t max_length) {
  HereditaryReport r;
  for (const Word& u : enumerate_words_up_to(x, max_length)) {
    ++r.checked_words;
    for (std::size_t pos = 0; pos <= u.size(); ++pos) {
      Word grown = u;
      grown.insert(grown.begin() + static_cast<std::ptrdiff_t>(pos), Symbol{0});
      if (!member(x, grown)) {
        r.holds = false;
        r.witness_source = u;
        r.witness_image = std::move(grown);
        return r;
      }
    }
  }
  return r;
}

HereditaryReport is_hereditary_bounded(const Subshift& x, const SymbolOrder& order,
                                       std::size_t max_length) {
  const std::size_t k = x.alphabet().size();
  if (order.size() != k)
    throw Error(ErrorKind::invalid_argument, "symbol order does not match the alphabet");
  HereditaryReport r;
  // Lowering one coordinate at a time reaches every coordinatewise-smaller word
  // through words that are themselves smaller, so single changes suffice.
  for (const Word& u : enumerate_words_up_to(x, max_length)) {
    ++r.checked_words;
    for (std::size_t pos = 0; pos < u.size(); ++pos)
      for (std::size_t b = 0; b < k; ++b) {
        if (b == u[pos] || !order[b][u[pos]]) continue;
        Word lowered = u;
        lowered[pos] = static_cast<Symbol>(b);
        if (!member(x, lowered)) {
          r.holds = false;
          r.witness_source = u;
          r.witness_image = std::move(lowered);
          return r;
        }
      }
  }
  return r;
}

}  // namespace symdyn
