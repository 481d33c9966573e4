#include "symdyn/mme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symdyn/linalg.hpp"

namespace symdyn {

ParryModel::ParryModel(std::shared_ptr<const Automaton> automaton) : automaton_(std::move(automaton)) {
  const Automaton& a = *automaton_;
  if (!a.irreducible())
    throw Error(ErrorKind::reducible_presentation,
                "the presentation is reducible; no Parry measure is built");
  const std::size_t n = a.num_states();
  const auto adj = a.adjacency();
  const PerronPair r = perron_right(adj, n);
  const PerronPair l = perron_right(transpose(adj, n), n);
  lambda_ = r.value;
  right_ = r.vector;
  left_ = l.vector;
  if (std::abs(r.value - l.value) > 1e-12 * std::max(1.0, r.value))
    throw Error(ErrorKind::internal, "left and right Perron values disagree");

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += left_[i] * right_[i];
  stationary_.resize(n);
  for (std::size_t i = 0; i < n; ++i) stationary_[i] = left_[i] * right_[i] / total;

  // Invariants: probability vector, stochastic rows, stationarity.
  double sum = 0.0;
  std::vector<double> pushed(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(stationary_[i] > 0.0)) throw Error(ErrorKind::internal, "stationary vector not positive");
    sum += stationary_[i];
    double row = 0.0;
    for (const auto& t : a.out(i)) {
      const double p = transition(i, t.target);
      row += p;
      pushed[t.target] += stationary_[i] * p;
    }
    invariant_residual_ = std::max(invariant_residual_, std::abs(row - 1.0));
  }
  invariant_residual_ = std::max(invariant_residual_, std::abs(sum - 1.0));
  for (std::size_t i = 0; i < n; ++i)
    invariant_residual_ = std::max(invariant_residual_, std::abs(pushed[i] - stationary_[i]));
  if (invariant_residual_ > 1e-12)
    throw Error(ErrorKind::internal, "Parry model invariants violated beyond 1e-12");
}

ParryModel parry(const Subshift& x) { return ParryModel(x.automaton_ptr()); }

double mu_parry_choices(const ParryModel& model,
                        const std::vector<std::vector<Symbol>>& choices) {
  const Automaton& a = model.automaton();
  std::vector<double> cur = model.stationary(), next(cur.size());
  for (const auto& allowed : choices) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t s = 0; s < cur.size(); ++s) {
      if (cur[s] == 0.0) continue;
      for (Symbol c : allowed)
        if (auto t = a.step(s, c)) next[*t] += cur[s] * model.transition(s, *t);
    }
    cur.swap(next);
  }
  double total = 0.0;
  for (double v : cur) total += v;
  return total;
}

double mu_parry(const ParryModel& model, std::span<const Symbol> w) {
  std::vector<std::vector<Symbol>> choices;
  choices.reserve(w.size());
  for (Symbol c : w) {
    if (c >= model.automaton().alphabet_size()) return 0.0;
    choices.push_back({c});
  }
  return mu_parry_choices(model, choices);
}

// ---------------------------------------------------------------------------
// S-gap measure

double sgap_weighted_tail(unsigned from, double t) {
  // sum_{k >= M+1} k t^k = t^{M+1} ((M+1) - M t) / (1-t)^2
  const double m = from;
  return std::pow(t, m + 1.0) * ((m + 1.0) - m * t) / ((1.0 - t) * (1.0 - t));
}

double sgap_mu1(const SGapSet& gaps) {
  const double t = 1.0 / sgap_lambda(gaps);
  double sum = 0.0;
  for (unsigned n : gaps.elements()) sum += (n + 1.0) * std::pow(t, n + 1.0);
  if (!gaps.is_finite()) sum += sgap_weighted_tail(gaps.from(), t);
  return 1.0 / sum;
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorKind::resource_limit, "certificate coefficient overflow");
  return r;
}

ValueCertificate combine(const ValueCertificate& a, const ValueCertificate& b, int sign) {
  ValueCertificate r;
  r.k = checked_add(a.k, sign * b.k);
  r.f.assign(std::max(a.f.size(), b.f.size()), 0);
  for (std::size_t i = 0; i < a.f.size(); ++i) r.f[i] = checked_add(r.f[i], a.f[i]);
  for (std::size_t i = 0; i < b.f.size(); ++i) r.f[i] = checked_add(r.f[i], sign * b.f[i]);
  while (!r.f.empty() && r.f.back() == 0) r.f.pop_back();
  return r;
}

double evaluate(const ValueCertificate& c, double mu1, double t) {
  double p = 0.0;
  for (std::size_t i = c.f.size(); i-- > 0;) p = p * t + static_cast<double>(c.f[i]);
  return static_cast<double>(c.k) + mu1 * p;
}

}  // namespace

SGapMme::SGapMme(SGapSet gaps)
    : gaps_(std::move(gaps)), lambda_(sgap_lambda(gaps_)), t_(1.0 / lambda_), mu1_(sgap_mu1(gaps_)) {}

bool SGapMme::closed_word_legal(std::span<const Symbol> w) const {
  unsigned run = 0;
  for (Symbol c : w) {
    if (c > 1) return false;
    if (c == 0) {
      ++run;
    } else {
      if (!gaps_.contains(run)) return false;
      run = 0;
    }
  }
  return gaps_.contains(run);
}

bool SGapMme::in_language(std::span<const Symbol> w) const {
  const auto first = std::find(w.begin(), w.end(), Symbol{1});
  const auto bound = [&](std::size_t run) { return !gaps_.is_finite() || run <= gaps_.max_finite(); };
  if (first == w.end()) return bound(w.size());
  const auto last = std::find(w.rbegin(), w.rend(), Symbol{1}).base() - 1;
  return bound(static_cast<std::size_t>(first - w.begin())) &&
         bound(static_cast<std::size_t>(w.end() - last - 1)) &&
         (first == last || closed_word_legal(std::span<const Symbol>(first + 1, last)));
}

const SGapMme::Entry& SGapMme::lookup(const Word& w) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(w); it != memo_.end()) return *it->second;
  }
  auto entry = std::make_unique<Entry>();
  const std::size_t n = w.size();
  if (n == 0) {
    entry->value = 1.0;
    entry->cert.k = 1;
  } else if (n == 1) {
    if (w[0] == 1) {
      entry->value = mu1_;
      entry->cert.f = {1};
    } else {
      entry->value = 1.0 - mu1_;
      entry->cert.k = 1;
      entry->cert.f = {-1};
    }
  } else {
    const Word inner(w.begin() + 1, w.end() - 1);
    Word one_inner_one{1};
    one_inner_one.insert(one_inner_one.end(), inner.begin(), inner.end());
    one_inner_one.push_back(1);
    const bool first = w.front() == 1, last = w.back() == 1;
    if (first && last) {
      if (closed_word_legal(inner)) {
        entry->value = mu1_ * std::pow(t_, static_cast<double>(inner.size() + 1));
        entry->cert.f.assign(inner.size() + 2, 0);
        entry->cert.f.back() = 1;
      } else {
        entry->value = 0.0;
      }
    } else if (first || last) {
      // 1x0 = 1x - 1x1 and 0x1 = x1 - 1x1.
      const Word shorter = first ? Word(w.begin(), w.end() - 1) : Word(w.begin() + 1, w.end());
      const Entry& a = lookup(shorter);
      const Entry& b = lookup(one_inner_one);
      entry->value = a.value - b.value;
      entry->cert = combine(a.cert, b.cert, -1);
    } else {
      // 0x0 = x - 1x1 - 1x0 - 0x1.
      Word one_inner_zero(one_inner_one), zero_inner_one(one_inner_one);
      one_inner_zero.back() = 0;
      zero_inner_one.front() = 0;
      const Entry& x = lookup(inner);
      const Entry& a = lookup(one_inner_one);
      const Entry& b = lookup(one_inner_zero);
      const Entry& c = lookup(zero_inner_one);
      entry->value = x.value - a.value - b.value - c.value;
      entry->cert = combine(combine(combine(x.cert, a.cert, -1), b.cert, -1), c.cert, -1);
    }
  }
  // Cancellation leaves rounding noise on null cylinders; the certificate still
  // records the exact combination.
  if (!in_language(w)) entry->value = 0.0;
  const double residual = std::abs(evaluate(entry->cert, mu1_, t_) - entry->value);

  std::lock_guard lock(mutex_);
  worst_residual_ = std::max(worst_residual_, residual);
  auto [it, fresh] = memo_.try_emplace(w, std::move(entry));
  (void)fresh;
  return *it->second;
}

double SGapMme::mu(std::span<const Symbol> w) const {
  for (Symbol c : w)
    if (c > 1) throw Error(ErrorKind::invalid_argument, "S-gap words are binary");
  return lookup(Word(w.begin(), w.end())).value;
}

ValueCertificate SGapMme::certificate(std::span<const Symbol> w) const {
  mu(w);
  return lookup(Word(w.begin(), w.end())).cert;
}

double SGapMme::certificate_residual() const {
  std::lock_guard lock(mutex_);
  return worst_residual_;
}

SGapOracle::SGapOracle(const SGapSet& gaps) {
  if (gaps.is_finite() && gaps.elements().size() == 1) {
    period_gap_ = gaps.elements()[0];
    return;
  }
  Subshift x(SubshiftSpec::sgap(gaps));
  model_ = std::make_unique<ParryModel>(x.automaton_ptr());
}

double SGapOracle::mu(std::span<const Symbol> w) const {
  if (model_) return mu_parry(*model_, w);
  // The orbit of (1 0^g)^infinity: average over its g+1 phases.
  const std::size_t period = *period_gap_ + 1;
  std::size_t hits = 0;
  for (std::size_t phase = 0; phase < period; ++phase) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i)
      ok = w[i] == (((phase + i) % period) == 0 ? 1 : 0);
    hits += ok;
  }
  return static_cast<double>(hits) / static_cast<double>(period);
}

double sgap_mu_oracle(const SGapSet& gaps, std::span<const Symbol> w) {
  return SGapOracle(gaps).mu(w);
}

}  // namespace symdyn
