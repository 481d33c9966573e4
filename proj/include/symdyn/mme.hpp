#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "symdyn/subshift.hpp"

namespace symdyn {

/// Parry measure of an irreducible right-resolving presentation.
class ParryModel {
 public:
  /// Throws reducible_presentation unless the automaton is irreducible.
  explicit ParryModel(std::shared_ptr<const Automaton> automaton);

  const Automaton& automaton() const noexcept { return *automaton_; }
  double lambda() const noexcept { return lambda_; }
  const std::vector<double>& right_vector() const noexcept { return right_; }
  const std::vector<double>& left_vector() const noexcept { return left_; }
  const std::vector<double>& stationary() const noexcept { return stationary_; }
  /// P(s -> t) along an edge of the presentation.
  double transition(std::size_t s, std::size_t t) const { return right_[t] / (lambda_ * right_[s]); }
  /// Worst deviation found by the construction-time invariant checks.
  double invariant_residual() const noexcept { return invariant_residual_; }

 private:
  std::shared_ptr<const Automaton> automaton_;
  double lambda_ = 1.0;
  std::vector<double> right_, left_, stationary_;
  double invariant_residual_ = 0.0;
};

ParryModel parry(const Subshift& x);

/// mu([w]) by forward propagation of the stationary vector.
double mu_parry(const ParryModel& model, std::span<const Symbol> w);

/// Cylinder measure where step k may read any label in choices[k].
double mu_parry_choices(const ParryModel& model,
                        const std::vector<std::vector<Symbol>>& choices);

/// mu(1) = 1 / sum_{n in S} (n+1) t^{n+1}, t = 1/lambda.
double sgap_mu1(const SGapSet& gaps);

/// sum_{n >= from} (n+1) t^{n+1}, in closed form.
double sgap_weighted_tail(unsigned from, double t);

/// mu(w) = k + mu(1) f(t) with k an integer and f an integer polynomial
/// (coefficient i multiplies t^i).
struct ValueCertificate {
  std::int64_t k = 0;
  std::vector<std::int64_t> f;
};

/// Measure of maximal entropy of an S-gap shift evaluated by the recursion
/// over the first and last symbols. Results are memoized; the cache is
/// write-once per key and safe to share between threads.
class SGapMme {
 public:
  explicit SGapMme(SGapSet gaps);

  const SGapSet& gaps() const noexcept { return gaps_; }
  double lambda() const noexcept { return lambda_; }
  double t() const noexcept { return t_; }
  double mu1() const noexcept { return mu1_; }

  double mu(std::span<const Symbol> w) const;
  ValueCertificate certificate(std::span<const Symbol> w) const;
  /// Largest |recursion value - certificate value| seen so far.
  double certificate_residual() const;

  /// 1 w 1 is in the language: every run of 0s strictly between 1s is a gap in S.
  bool closed_word_legal(std::span<const Symbol> w) const;
  /// w occurs in some point of the shift.
  bool in_language(std::span<const Symbol> w) const;

 private:
  struct Entry {
    double value;
    ValueCertificate cert;
  };
  const Entry& lookup(const Word& w) const;

  SGapSet gaps_;
  double lambda_, t_, mu1_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, std::unique_ptr<Entry>, WordHash> memo_;
  mutable double worst_residual_ = 0.0;
};

/// Independent value: Parry measure of the gap-counter presentation, or the
/// periodic-orbit average when S is a singleton.
double sgap_mu_oracle(const SGapSet& gaps, std::span<const Symbol> w);

/// Oracle with a prebuilt model for sweeps.
class SGapOracle {
 public:
  explicit SGapOracle(const SGapSet& gaps);
  double mu(std::span<const Symbol> w) const;

 private:
  std::optional<unsigned> period_gap_;
  std::unique_ptr<ParryModel> model_;
};

}  // namespace symdyn
