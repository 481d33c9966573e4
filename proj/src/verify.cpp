#include "symdyn/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "symdyn/extender.hpp"

namespace symdyn {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::error: return "error";
  }
  return "?";
}

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

void CheckRecord::settle() {
  if (status == CheckStatus::skipped || status == CheckStatus::error) return;
  status = CheckStatus::pass;
  for (const auto& r : residuals)
    if (!(r.value <= r.tolerance)) status = CheckStatus::fail;
  if (status == CheckStatus::fail && reason.empty()) {
    for (const auto& r : residuals)
      if (!(r.value <= r.tolerance)) {
        reason = r.label + " = " + format_double(r.value) + " exceeds " + format_double(r.tolerance);
        break;
      }
  }
}

Json CheckRecord::to_json() const {
  Json doc;
  doc["name"] = name;
  doc["subject"] = subject;
  doc["status"] = std::string(symdyn::to_string(status));
  doc["reason"] = reason;
  doc["parameters"] = parameters;
  Json res = Json::array();
  for (const auto& r : residuals) {
    Json e;
    e["label"] = r.label;
    e["value"] = r.value;
    e["tolerance"] = r.tolerance;
    e["within"] = r.value <= r.tolerance;
    res.push_back(std::move(e));
  }
  doc["residuals"] = std::move(res);
  doc["metrics"] = metrics;
  doc["witness"] = witness;
  Json ser = Json::array();
  for (const auto& s : series) {
    Json e;
    e["name"] = s.name;
    e["columns"] = s.columns;
    e["rows"] = s.rows.size();
    ser.push_back(std::move(e));
  }
  doc["series"] = std::move(ser);
  return doc;
}

// ---------------------------------------------------------------------------
// Helpers

namespace {

template <class Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Every word over k symbols with length in [lo, hi], shortest first.
std::vector<Word> all_words(std::size_t k, std::size_t lo, std::size_t hi) {
  std::vector<Word> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    Word w(n, 0);
    while (true) {
      out.push_back(w);
      std::size_t i = n;
      while (i > 0 && ++w[i - 1] == k) w[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

template <class Body>
CheckRecord guarded(std::string name, std::string subject, Body&& body) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.subject = std::move(subject);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(rec);
    rec.settle();
  } catch (const Error& e) {
    const bool gate = e.kind() == ErrorKind::reducible_presentation ||
                      e.kind() == ErrorKind::empty_subshift;
    rec.status = gate ? CheckStatus::skipped : CheckStatus::error;
    rec.reason = std::string(to_string(e.kind())) + ": " + e.what();
  } catch (const std::exception& e) {
    rec.status = CheckStatus::error;
    rec.reason = std::string("internal: ") + e.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

void skip(CheckRecord& rec, std::string reason) {
  rec.status = CheckStatus::skipped;
  rec.reason = std::move(reason);
}

std::string word_text(const Subshift& x, std::span<const Symbol> w) {
  return w.empty() ? std::string() : x.alphabet().format(w);
}

Word zeros(std::size_t n) { return Word(n, 0); }

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(r);
}

}  // namespace

// ---------------------------------------------------------------------------
// Measure

Measure::Measure(const Subshift& x) {
  if (x.spec().kind() == SubshiftSpec::Kind::sgap) {
    sgap_ = std::make_unique<SGapMme>(x.spec().gaps());
    h_ = std::log(sgap_->lambda());
  } else {
    parry_ = std::make_unique<ParryModel>(x.automaton_ptr());
    h_ = std::log(parry_->lambda());
  }
}

double Measure::operator()(std::span<const Symbol> w) const {
  return sgap_ ? sgap_->mu(w) : mu_parry(*parry_, w);
}

// ---------------------------------------------------------------------------
// One-dimensional checks

namespace {

struct PairSweep {
  std::vector<Word> words;
  std::vector<ExtenderDescriptor> descriptors;
  std::vector<double> mu;
};

PairSweep pair_sweep(const Subshift& x, const Measure& m, std::size_t max_length) {
  PairSweep s;
  s.words = enumerate_words_up_to(x, max_length);
  for (const auto& w : s.words) {
    s.descriptors.push_back(extender_descriptor(x, w));
    s.mu.push_back(m(w));
  }
  return s;
}

}  // namespace

CheckRecord check_main_inequality(const Subshift& x, std::size_t max_length, double tol,
                                  bool same_length_only) {
  return guarded("main-inequality", x.spec().describe(), [&](CheckRecord& rec) {
    rec.parameters["max_length"] = max_length;
    rec.parameters["tolerance"] = tol;
    rec.parameters["same_length_only"] = same_length_only;
    const Measure m(x);
    const double h = m.entropy();
    rec.metrics["h"] = h;
    if (!(h > 1e-12)) return skip(rec, "zero topological entropy; the inequality assumes h > 0");
    const PairSweep s = pair_sweep(x, m, max_length);
    double worst = -std::numeric_limits<double>::infinity();
    std::size_t worst_v = 0, worst_w = 0, pairs = 0, asymmetric = 0;
    for (std::size_t a = 0; a < s.words.size(); ++a)
      for (std::size_t b = 0; b < s.words.size(); ++b) {
        const auto& v = s.words[a];
        const auto& w = s.words[b];
        if (same_length_only && v.size() != w.size()) continue;
        if (!extender_contained(x, s.descriptors[a], s.descriptors[b])) continue;
        ++pairs;
        asymmetric += v.size() != w.size();
        const double rhs =
            s.mu[b] * std::exp(h * (static_cast<double>(w.size()) - static_cast<double>(v.size())));
        const double excess = s.mu[a] - rhs;
        if (excess > worst) {
          worst = excess;
          worst_v = a;
          worst_w = b;
        }
      }
    rec.metrics["words"] = s.words.size();
    rec.metrics["pairs_checked"] = pairs;
    rec.metrics["asymmetric_pairs"] = asymmetric;
    rec.metrics["max_excess"] = pairs ? worst : 0.0;
    rec.residuals.push_back({"max(mu(v) - mu(w) e^{h(|w|-|v|)})", pairs ? std::max(0.0, worst) : 0.0, tol});
    if (pairs && worst > tol)
      rec.witness = {{"v", word_text(x, s.words[worst_v])},
                     {"w", word_text(x, s.words[worst_w])},
                     {"mu_v", s.mu[worst_v]},
                     {"mu_w", s.mu[worst_w]}};
  });
}

CheckRecord check_equality_corollary(const Subshift& x, std::size_t max_length, double tol) {
  return guarded("equality-corollary", x.spec().describe(), [&](CheckRecord& rec) {
    rec.parameters["max_length"] = max_length;
    rec.parameters["tolerance"] = tol;
    const Measure m(x);
    const double h = m.entropy();
    if (!(h > 1e-12)) return skip(rec, "zero topological entropy; the corollary assumes h > 0");
    const PairSweep s = pair_sweep(x, m, max_length);
    double worst = 0.0;
    std::size_t worst_v = 0, worst_w = 0, pairs = 0;
    for (std::size_t a = 0; a < s.words.size(); ++a)
      for (std::size_t b = a + 1; b < s.words.size(); ++b) {
        if (!extender_contained(x, s.descriptors[a], s.descriptors[b]) ||
            !extender_contained(x, s.descriptors[b], s.descriptors[a]))
          continue;
        ++pairs;
        const double rhs = s.mu[b] * std::exp(h * (static_cast<double>(s.words[b].size()) -
                                                   static_cast<double>(s.words[a].size())));
        const double gap = std::abs(s.mu[a] - rhs);
        if (gap > worst) {
          worst = gap;
          worst_v = a;
          worst_w = b;
        }
      }
    rec.metrics["equal_pairs"] = pairs;
    rec.residuals.push_back({"max|mu(v) - mu(w) e^{h(|w|-|v|)}|", worst, tol});
    if (worst > tol)
      rec.witness = {{"v", word_text(x, s.words[worst_v])}, {"w", word_text(x, s.words[worst_w])}};
  });
}

CheckRecord check_entropy_root(const SGapSet& gaps, double root_tol, double cross_tol) {
  return guarded("entropy-root", "sgap" + gaps.describe(), [&](CheckRecord& rec) {
    rec.parameters["root_tolerance"] = root_tol;
    rec.parameters["cross_tolerance"] = cross_tol;
    const double lambda = sgap_lambda(gaps);
    const Subshift x(SubshiftSpec::sgap(gaps));
    const EntropyResult e = entropy(x);
    rec.metrics["lambda_root"] = lambda;
    rec.metrics["lambda_automaton"] = e.lambda;
    rec.metrics["gcd_plus_one"] = gaps.gcd_plus_one();
    rec.residuals.push_back({"|sum lambda^{-n-1} - 1|", std::abs(sgap_power_sum(gaps, 1.0 / lambda) - 1.0), root_tol});
    rec.residuals.push_back({"|log lambda_root - h_automaton|", std::abs(std::log(lambda) - e.h), cross_tol});
  });
}

CheckRecord check_limit(const SGapSet& gaps, std::size_t n, double tol, std::size_t exact_n,
                        double exact_rel_tol) {
  return guarded("limit", "sgap" + gaps.describe(), [&](CheckRecord& rec) {
    rec.parameters["n"] = n;
    rec.parameters["tolerance"] = tol;
    rec.parameters["exact_n"] = exact_n;
    rec.parameters["exact_relative_tolerance"] = exact_rel_tol;
    const unsigned g = gaps.gcd_plus_one();
    rec.metrics["gcd_plus_one"] = g;
    if (g != 1) return skip(rec, "gcd(S+1) = " + std::to_string(g) + "; the measure of maximal entropy is not mixing");
    if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be positive");
    const double lambda = sgap_lambda(gaps);
    if (!(lambda > 1.0 + 1e-12)) return skip(rec, "zero entropy; the limit formula divides by lambda - 1");
    const double mu1 = sgap_mu1(gaps);
    double closed = mu1 * lambda / ((lambda - 1.0) * (lambda - 1.0));
    if (gaps.is_finite()) {
      const double f = 1.0 - std::pow(lambda, -static_cast<double>(gaps.max_finite()) - 1.0);
      closed *= f * f;
    }
    rec.metrics["branch"] = gaps.is_finite() ? "finite" : "infinite";
    rec.metrics["closed_form"] = closed;
    const Subshift x(SubshiftSpec::sgap(gaps));
    const auto series = count_words_scaled_series(x, std::max(n, exact_n), lambda);
    rec.metrics["a_n"] = series[n];
    rec.residuals.push_back({"|a_n - closed form|", std::abs(series[n] - closed), tol});
    rec.residuals.push_back({"|a_n - a_{n-1}|", std::abs(series[n] - series[n - 1]), tol});

    // Exact counts by big-integer DP, compared relative to the scaled DP.
    double worst_rel = 0.0;
    std::size_t worst_at = 0;
    Series table{"counts", {"n", "count", "scaled"}, {}};
    for (std::size_t k = 0; k <= std::max(n, exact_n); ++k) {
      std::string count_text;
      if (k <= exact_n) {
        const BigInt c = count_words(x, k);
        count_text = c.str();
        const double exact_scaled = c.convert_to<double>() / std::pow(lambda, static_cast<double>(k));
        const double rel = std::abs(exact_scaled - series[k]) / exact_scaled;
        if (rel > worst_rel) {
          worst_rel = rel;
          worst_at = k;
        }
      }
      table.rows.push_back({std::to_string(k), count_text, format_double(series[k])});
    }
    rec.residuals.push_back({"max relative |exact/lambda^n - scaled|", worst_rel, exact_rel_tol});
    if (worst_rel > exact_rel_tol) rec.witness = {{"n", worst_at}};
    rec.series.push_back(std::move(table));
  });
}

CheckRecord check_value_theorem(const SGapSet& gaps, std::size_t max_length, double tol) {
  return guarded("value-theorem", "sgap" + gaps.describe(), [&](CheckRecord& rec) {
    rec.parameters["max_length"] = max_length;
    rec.parameters["tolerance"] = tol;
    const SGapMme mme(gaps);
    const SGapOracle oracle(gaps);
    const double t = mme.t();
    rec.metrics["t"] = t;
    rec.metrics["mu1"] = mme.mu1();
    rec.residuals.push_back({"|mu(1) formula - oracle|", std::abs(mme.mu1() - oracle.mu(binary_word("1"))), tol});

    double normalization = sgap_power_sum(gaps, t) - 1.0;
    rec.residuals.push_back({"|sum t^{n+1} - 1|", std::abs(normalization), 1e-12});

    double worst = 0.0, additivity = 0.0;
    std::string worst_word;
    std::size_t checked = 0, degree = 0;
    std::int64_t max_coef = 0;
    for (const Word& w : all_words(2, 1, max_length)) {
      const double a = mme.mu(w), b = oracle.mu(w);
      ++checked;
      if (std::abs(a - b) > worst) {
        worst = std::abs(a - b);
        worst_word = binary_string(w);
      }
      const auto cert = mme.certificate(w);
      degree = std::max(degree, cert.f.size());
      for (auto c : cert.f) max_coef = std::max<std::int64_t>(max_coef, c < 0 ? -c : c);
      if (w.size() < max_length) {
        Word w0 = w, w1 = w, zw = w, ow = w;
        w0.push_back(0);
        w1.push_back(1);
        zw.insert(zw.begin(), Symbol{0});
        ow.insert(ow.begin(), Symbol{1});
        additivity = std::max({additivity, std::abs(mme.mu(w0) + mme.mu(w1) - a),
                               std::abs(mme.mu(zw) + mme.mu(ow) - a)});
      }
    }
    rec.metrics["words_checked"] = checked;
    rec.metrics["certificate_max_degree"] = degree == 0 ? 0 : degree - 1;
    rec.metrics["certificate_max_abs_coefficient"] = max_coef;
    rec.residuals.push_back({"max|sgap_mu - oracle|", worst, tol});
    rec.residuals.push_back({"max additivity defect", additivity, 1e-12});
    rec.residuals.push_back({"max|k + mu(1) f(t) - mu|", mme.certificate_residual(), 1e-12});
    if (worst > tol) rec.witness = {{"w", worst_word}};
  });
}

namespace {

struct SynchResult {
  double final_value = 0.0;
  double max_drop = 0.0;
  double tail = 0.0;  // bound on the terms with max(a, b) > max_gap
  std::vector<double> partial;  // T(0..max_gap)
};

SynchResult synch_sum(const SGapMme& mme, std::span<const Symbol> u, std::size_t max_gap) {
  SynchResult r;
  const double t = mme.t();
  double total = 0.0;
  Word inner;
  for (std::size_t g = 0; g <= max_gap; ++g) {
    // Add the (a, b) with max(a, b) == g.
    for (std::size_t a = 0; a <= g; ++a)
      for (std::size_t b = 0; b <= g; ++b) {
        if (std::max(a, b) != g) continue;
        inner.assign(a, 0);
        inner.insert(inner.end(), u.begin(), u.end());
        inner.insert(inner.end(), b, 0);
        if (!mme.closed_word_legal(inner)) continue;
        total += mme.mu1() * std::pow(t, static_cast<double>(a + b + u.size() + 1));
      }
    if (!r.partial.empty()) r.max_drop = std::max(r.max_drop, r.partial.back() - total);
    r.partial.push_back(total);
  }
  r.final_value = total;
  r.tail = mme.mu1() * std::pow(t, static_cast<double>(u.size() + 1)) * 2.0 *
           std::pow(t, static_cast<double>(max_gap + 1)) / ((1.0 - t) * (1.0 - t));
  return r;
}

}  // namespace

CheckRecord check_synch_formula_word(const SGapSet& gaps, std::span<const Symbol> u,
                                     std::size_t max_gap, double tol) {
  return guarded("synch-formula", "sgap" + gaps.describe(), [&](CheckRecord& rec) {
    const Subshift x(SubshiftSpec::sgap(gaps));
    if (u.empty() || !member(x, u)) throw Error(ErrorKind::invalid_argument, "u must be a nonempty word of the language");
    rec.parameters["u"] = binary_string(u);
    rec.parameters["max_gap"] = max_gap;
    rec.parameters["tolerance"] = tol;
    const SGapMme mme(gaps);
    const SynchResult s = synch_sum(mme, u, max_gap);
    rec.metrics["truncated_sum"] = s.final_value;
    rec.metrics["mu_u"] = mme.mu(u);
    rec.metrics["tail_bound"] = s.tail;
    const double gap = std::abs(s.final_value - mme.mu(u));
    rec.metrics["abs_residual"] = gap;
    rec.metrics["abs_residual_within_tolerance"] = gap <= tol;
    rec.residuals.push_back({"|T(max_gap) - mu(u)| beyond the tail bound", std::max(0.0, gap - s.tail), tol});
    rec.residuals.push_back({"max decrease of T", s.max_drop, 0.0});
    Series table{"partial-sums", {"max_gap", "T"}, {}};
    for (std::size_t g = 0; g < s.partial.size(); ++g)
      table.rows.push_back({std::to_string(g), format_double(s.partial[g])});
    rec.series.push_back(std::move(table));
  });
}

CheckRecord check_synch_formula(const SGapSet& gaps, std::size_t max_u_length, std::size_t max_gap,
                                double tol) {
  return guarded("synch-formula", "sgap" + gaps.describe(), [&](CheckRecord& rec) {
    rec.parameters["max_u_length"] = max_u_length;
    rec.parameters["max_gap"] = max_gap;
    rec.parameters["tolerance"] = tol;
    const Subshift x(SubshiftSpec::sgap(gaps));
    const SGapMme mme(gaps);
    double worst = 0.0, excess = 0.0, drop = 0.0, tail = 0.0;
    std::string worst_u;
    Series table{"partial-sums", {"u", "max_gap", "T", "mu_u"}, {}};
    const auto words = enumerate_words_up_to(x, max_u_length);
    for (const Word& u : words) {
      const SynchResult s = synch_sum(mme, u, max_gap);
      const double mu = mme.mu(u);
      if (std::abs(s.final_value - mu) >= worst) {
        worst = std::abs(s.final_value - mu);
        worst_u = binary_string(u);
      }
      drop = std::max(drop, s.max_drop);
      tail = std::max(tail, s.tail);
      excess = std::max(excess, std::abs(s.final_value - mu) - s.tail);
      for (std::size_t g = 0; g < s.partial.size(); ++g)
        table.rows.push_back({binary_string(u), std::to_string(g), format_double(s.partial[g]), format_double(mu)});
    }
    rec.metrics["words"] = words.size();
    // Slow tails (t near 1) are judged against the rigorous truncation bound;
    // the raw residual stays visible in the metrics.
    rec.metrics["tail_bound"] = tail;
    rec.metrics["max_abs_residual"] = worst;
    rec.metrics["max_abs_residual_u"] = worst_u;
    rec.metrics["abs_residual_within_tolerance"] = worst <= tol;
    rec.residuals.push_back({"max(|T(max_gap) - mu(u)| - tail bound)", std::max(0.0, excess), tol});
    rec.residuals.push_back({"max decrease of T", drop, 0.0});
    if (excess > tol) rec.witness = {{"u", worst_u}};
    rec.series.push_back(std::move(table));
  });
}

CheckRecord check_hereditary_entropy(const Subshift& x, std::size_t n_max, std::size_t sweep_length,
                                     double tol) {
  return guarded("hereditary-entropy", x.spec().describe(), [&](CheckRecord& rec) {
    rec.parameters["n_max"] = n_max;
    rec.parameters["sweep_length"] = sweep_length;
    rec.parameters["tolerance"] = tol;
    const auto ih = is_i_hereditary_bounded(x, sweep_length);
    const auto hd = is_hereditary_bounded(x, linear_order(x.alphabet().size()), sweep_length);
    rec.metrics["i_hereditary_sweep"] = ih.holds;
    rec.metrics["hereditary_sweep"] = hd.holds;
    if (!ih.holds || !hd.holds) {
      const auto& bad = ih.holds ? hd : ih;
      rec.witness = {{"source", word_text(x, *bad.witness_source)},
                     {"image", word_text(x, *bad.witness_image)}};
      return skip(rec, std::string(ih.holds ? "hereditary" : "i-hereditary") +
                           " sweep fails; the corollary does not apply");
    }
    const Measure m(x);
    const double h = m.entropy();
    rec.metrics["h"] = h;
    double excess = 0.0;
    Series table{"ratios", {"n", "log_ratio", "h"}, {}};
    for (std::size_t n = 1; n <= n_max; ++n) {
      const double ratio = std::log(m(zeros(n)) / m(zeros(n + 1)));
      excess = std::max(excess, ratio - h);
      table.rows.push_back({std::to_string(n), format_double(ratio), format_double(h)});
    }
    rec.residuals.push_back({"max(log(mu(0^n)/mu(0^{n+1})) - h)", excess, tol});
    std::optional<std::size_t> distance;
    for (std::size_t n = 1; n <= n_max && !distance; ++n)
      if (specification_distance_holds(x, n)) distance = n;
    if (distance) {
      rec.metrics["specification_distance"] = *distance;
      const double ratio = std::log(m(zeros(*distance)) / m(zeros(*distance + 1)));
      rec.residuals.push_back({"|h - log(mu(0^N)/mu(0^{N+1}))|", std::abs(h - ratio), tol});
    } else {
      rec.metrics["specification_distance"] = nullptr;
    }
    double order = 0.0;
    for (std::size_t s = 1; s < x.alphabet().size(); ++s) {
      const Word hi{static_cast<Symbol>(s)}, lo{static_cast<Symbol>(s - 1)};
      order = std::max(order, m(hi) - m(lo));
    }
    rec.residuals.push_back({"max(mu(s) - mu(s-1))", order, tol});
    rec.series.push_back(std::move(table));
  });
}

namespace {

struct LemmaOutcome {
  std::size_t plans = 0;
  std::optional<Json> failure;
};

LemmaOutcome replacement_lemmas_for(const Word& v, const Word& w, std::size_t k, std::size_t max_u) {
  LemmaOutcome out;
  const std::ptrdiff_t d = static_cast<std::ptrdiff_t>(w.size()) - static_cast<std::ptrdiff_t>(v.size());
  auto fail = [&](const char* lemma, const Word& u, const std::vector<std::size_t>& s) {
    Json pos = Json::array();
    for (auto p : s) pos.push_back(p);
    out.failure = Json{{"lemma", lemma}, {"v", binary_string(v)}, {"w", binary_string(w)},
                       {"u", binary_string(u)}, {"positions", pos}};
  };
  // Preimage counts keyed by the image with m appended.
  std::unordered_map<Word, std::size_t, WordHash> preimages;
  std::vector<std::size_t> s;
  for (const Word& u : all_words(k, v.size(), max_u)) {
    const auto occ = occurrences(u, v);
    if (occ.size() > 20) throw Error(ErrorKind::resource_limit, "too many occurrences for subset sweep");
    std::unordered_set<Word, WordHash> images;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << occ.size()); ++mask) {
      s.clear();
      for (std::size_t b = 0; b < occ.size(); ++b)
        if (mask >> b & 1) s.push_back(occ[b]);
      ++out.plans;
      Word image;
      try {
        image = replace_seq(u, v, w, s);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::replacement_broken) throw;
        fail("wsurvive", u, s);
        return out;
      }
      // Replaced positions carry w.
      for (std::size_t i = 0; i < s.size(); ++i)
        if (!occurs_at(image, w, static_cast<std::size_t>(static_cast<std::ptrdiff_t>(s[i]) + static_cast<std::ptrdiff_t>(i) * d))) {
          fail("wsurvive", u, s);
          return out;
        }
      // Unreplaced occurrences of v move by the number of earlier replacements.
      for (std::size_t m : occ) {
        if (std::binary_search(s.begin(), s.end(), m)) continue;
        const auto before = static_cast<std::ptrdiff_t>(std::lower_bound(s.begin(), s.end(), m) - s.begin());
        if (!occurs_at(image, v, static_cast<std::size_t>(static_cast<std::ptrdiff_t>(m) + before * d))) {
          fail("vsurvive", u, s);
          return out;
        }
      }
      Word key = image;
      key.push_back(static_cast<Symbol>(1000 + s.size()));
      if (!images.insert(key).second) {
        fail("injective", u, s);
        return out;
      }
      ++preimages[key];
    }
  }
  for (const auto& [key, count] : preimages) {
    const std::size_t m = key.back() - 1000;
    const Word image(key.begin(), key.end() - 1);
    if (static_cast<double>(count) > binomial(occurrences(image, w).size(), m)) {
      out.failure = Json{{"lemma", "preimage"}, {"v", binary_string(v)}, {"w", binary_string(w)},
                         {"image", binary_string(image)}, {"m", m}, {"count", count}};
      return out;
    }
  }
  return out;
}

}  // namespace

CheckRecord check_replacement_lemmas(std::size_t alphabet_size, std::size_t max_vw, std::size_t max_u) {
  return guarded("replacement-lemmas", "alphabet of size " + std::to_string(alphabet_size), [&](CheckRecord& rec) {
    rec.parameters["alphabet_size"] = alphabet_size;
    rec.parameters["max_vw"] = max_vw;
    rec.parameters["max_u"] = max_u;
    const auto words = all_words(alphabet_size, 1, max_vw);
    std::vector<std::pair<Word, Word>> pairs;
    for (const auto& v : words)
      for (const auto& w : words) {
        if (v == w) continue;
        const auto flags = affix_flags(v, w);
        if (flags.v_is_suffix_of_w || flags.w_is_prefix_of_v) continue;
        if (!respects_transition_exact(v, w)) continue;
        pairs.emplace_back(v, w);
      }
    std::vector<LemmaOutcome> outcomes(pairs.size());
    parallel_for(pairs.size(), 0, [&](std::size_t i) {
      outcomes[i] = replacement_lemmas_for(pairs[i].first, pairs[i].second, alphabet_size, max_u);
    });
    std::size_t plans = 0, failures = 0;
    for (const auto& o : outcomes) {
      plans += o.plans;
      if (o.failure) {
        if (!failures) rec.witness = *o.failure;
        ++failures;
      }
    }
    rec.metrics["qualifying_pairs"] = pairs.size();
    rec.metrics["plans_checked"] = plans;
    rec.residuals.push_back({"pairs violating a lemma", static_cast<double>(failures), 0.0});
  });
}

CheckRecord check_respects_agreement(std::size_t alphabet_size, std::size_t max_vw) {
  return guarded("respects-agreement", "alphabet of size " + std::to_string(alphabet_size), [&](CheckRecord& rec) {
    rec.parameters["alphabet_size"] = alphabet_size;
    rec.parameters["max_vw"] = max_vw;
    rec.parameters["radius"] = "2|v|+|w|+2";
    const auto words = all_words(alphabet_size, 1, max_vw);
    std::vector<std::pair<Word, Word>> pairs;
    for (const auto& v : words)
      for (const auto& w : words)
        if (v != w) pairs.emplace_back(v, w);
    std::vector<char> exact(pairs.size()), bounded(pairs.size());
    parallel_for(pairs.size(), 0, [&](std::size_t i) {
      const auto& [v, w] = pairs[i];
      exact[i] = respects_transition_exact(v, w).respects;
      bounded[i] = respects_transition_bounded(v, w, alphabet_size, exactness_radius(v.size(), w.size())).respects;
    });
    std::size_t disagreements = 0, respecting = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      respecting += exact[i];
      if (exact[i] != bounded[i]) {
        if (!disagreements)
          rec.witness = {{"v", binary_string(pairs[i].first)}, {"w", binary_string(pairs[i].second)},
                         {"exact", exact[i] != 0}, {"bounded", bounded[i] != 0}};
        ++disagreements;
      }
    }
    rec.metrics["pairs"] = pairs.size();
    rec.metrics["respecting_pairs"] = respecting;
    rec.residuals.push_back({"disagreements", static_cast<double>(disagreements), 0.0});
  });
}

CheckRecord check_extender_consistency(const Subshift& x, std::size_t max_length) {
  return guarded("extender-consistency", x.spec().describe(), [&](CheckRecord& rec) {
    rec.parameters["max_length"] = max_length;
    if (x.spec().kind() == SubshiftSpec::Kind::sgap)
      return skip(rec, "the windowed comparator is exact only for shifts of finite type");
    const std::size_t radius = std::max<std::size_t>(1, x.memory());
    rec.parameters["radius"] = radius;
    const auto words = enumerate_words_up_to(x, max_length);
    std::vector<ExtenderDescriptor> desc;
    std::vector<std::vector<std::pair<Word, Word>>> windows;
    for (const auto& w : words) {
      desc.push_back(extender_descriptor(x, w));
      windows.push_back(extender_windowed(x, w, radius).pairs);
    }
    std::size_t disagreements = 0, reflexive = 0;
    std::map<std::string, std::size_t> tally;
    for (std::size_t a = 0; a < words.size(); ++a) {
      if (!extender_contained(x, desc[a], desc[a])) ++reflexive;
      for (std::size_t b = 0; b < words.size(); ++b) {
        const bool e_ab = extender_contained(x, desc[a], desc[b]);
        const bool w_ab = std::includes(windows[b].begin(), windows[b].end(), windows[a].begin(), windows[a].end());
        ++tally[e_ab ? "contained" : "not-contained"];
        if (e_ab != w_ab) {
          if (!disagreements)
            rec.witness = {{"v", word_text(x, words[a])}, {"w", word_text(x, words[b])},
                           {"exact", e_ab}, {"windowed", w_ab}};
          ++disagreements;
        }
      }
    }
    rec.metrics["words"] = words.size();
    rec.metrics["ordered_pairs"] = words.size() * words.size();
    rec.metrics["contained_pairs"] = tally["contained"];
    rec.residuals.push_back({"exact vs windowed disagreements", static_cast<double>(disagreements), 0.0});
    rec.residuals.push_back({"reflexivity failures", static_cast<double>(reflexive), 0.0});
  });
}

// ---------------------------------------------------------------------------
// Two-dimensional checks

CheckRecord check_gtheorem(const Grid2dSpec& spec, const Pattern2D& v, const Pattern2D& w,
                           const std::vector<int>& widths, double tol, int halo) {
  return guarded("gtheorem", "grid2d", [&](CheckRecord& rec) {
    Json ws = Json::array();
    for (int W : widths) ws.push_back(W);
    rec.parameters["v"] = to_json(v, spec.alphabet());
    rec.parameters["w"] = to_json(w, spec.alphabet());
    rec.parameters["widths"] = ws;
    rec.parameters["tolerance"] = tol;
    rec.parameters["halo"] = halo;
    const auto rep = replaceability_windowed(spec, v, w, halo);
    rec.metrics["replaceability"] = rep.holds ? "certified-sufficient" : "not-certified";
    rec.metrics["halos_checked"] = rep.halos_checked;
    if (!rep.holds) {
      rec.witness = {{"halo", to_json(*rep.witness, spec.alphabet())}};
      return skip(rec, "replaceability_windowed fails, so E(v) subset of E(w) is not certified");
    }
    Series table{"strip-values", {"width", "mu_v", "mu_w", "columns"}, {}};
    double margin = std::numeric_limits<double>::infinity();
    for (int W : widths) {
      const auto a = strip_mme_mu(spec, W, v);
      const auto b = strip_mme_mu(spec, W, w);
      rec.residuals.push_back({"W=" + std::to_string(W) + ": max(mu_W(v) - mu_W(w), 0)",
                               std::max(0.0, a.value - b.value), tol});
      margin = std::min(margin, b.value - a.value);
      table.rows.push_back({std::to_string(W), format_double(a.value), format_double(b.value),
                            std::to_string(a.columns)});
      if (v.size() == 1) {
        // Single-cell additivity at this width.
        double total = 0.0;
        const Cell c = v.cells()[0].first;
        for (std::size_t s = 0; s < spec.alphabet().size(); ++s)
          total += strip_mme_mu(spec, W, Pattern2D({{c, static_cast<Symbol>(s)}})).value;
        rec.residuals.push_back({"W=" + std::to_string(W) + ": |sum_s mu_W(s) - 1|", std::abs(total - 1.0), 1e-12});
      }
    }
    rec.metrics["min_margin"] = margin;
    rec.series.push_back(std::move(table));
  });
}

CheckRecord check_grid_lemmas(const Grid2dSpec& spec, const Pattern2D& v, const Pattern2D& w, int side) {
  return guarded("grid-lemmas", "grid2d", [&](CheckRecord& rec) {
    rec.parameters["v"] = to_json(v, spec.alphabet());
    rec.parameters["w"] = to_json(w, spec.alphabet());
    rec.parameters["side"] = side;
    const Shape f = v.shape();
    const auto rects = enumerate_legal_rectangles(spec, side, side);
    std::unordered_map<Word, std::size_t, WordHash> preimages;
    std::size_t plans = 0, injective_fail = 0, order_fail = 0;
    Json first_failure;
    for (const Word& symbols : rects) {
      const Pattern2D u = rectangle_pattern(symbols, side, side);
      // T: greedy sparse subset of the occurrences.
      std::vector<Cell> t;
      for (const Cell& g : occurrences(u, v)) {
        t.push_back(g);
        if (!f_sparse_check(t, f)) t.pop_back();
      }
      if (t.size() > 20) throw Error(ErrorKind::resource_limit, "too many sparse occurrences for subset sweep");
      std::unordered_set<Word, WordHash> images;
      std::vector<Cell> s;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t.size()); ++mask) {
        s.clear();
        for (std::size_t b = 0; b < t.size(); ++b)
          if (mask >> b & 1) s.push_back(t[b]);
        ++plans;
        const Pattern2D image = replace_sparse(u, v, w, s);
        std::vector<Cell> reversed(s.rbegin(), s.rend());
        if (s.size() > 1 && !(replace_sparse(u, v, w, reversed) == image)) {
          if (first_failure.is_null()) first_failure = {{"property", "order-independence"}, {"u", binary_string(symbols)}};
          ++order_fail;
        }
        Word key;
        key.reserve(image.size() + 1);
        for (const auto& [c, sym] : image.cells()) key.push_back(sym);
        key.push_back(static_cast<Symbol>(1000 + s.size()));
        if (!images.insert(key).second) {
          if (first_failure.is_null()) first_failure = {{"property", "injective"}, {"u", binary_string(symbols)}};
          ++injective_fail;
        }
        ++preimages[key];
      }
    }
    std::size_t preimage_fail = 0;
    for (const auto& [key, count] : preimages) {
      const std::size_t m = key.back() - 1000;
      const Word image(key.begin(), key.end() - 1);
      const auto occ = occurrences(rectangle_pattern(image, side, side), w).size();
      if (static_cast<double>(count) > binomial(occ, m)) {
        if (first_failure.is_null())
          first_failure = {{"property", "preimage"}, {"image", binary_string(image)}, {"m", m}, {"count", count}};
        ++preimage_fail;
      }
    }
    rec.metrics["rectangles"] = rects.size();
    rec.metrics["plans_checked"] = plans;
    rec.metrics["distinct_images"] = preimages.size();
    rec.residuals.push_back({"order-dependence failures", static_cast<double>(order_fail), 0.0});
    rec.residuals.push_back({"injectivity failures", static_cast<double>(injective_fail), 0.0});
    rec.residuals.push_back({"preimage bound failures", static_cast<double>(preimage_fail), 0.0});
    rec.witness = first_failure;
  });
}

// ---------------------------------------------------------------------------
// Configuration

namespace {

[[noreturn]] void config_schema(const std::string& m) { throw Error(ErrorKind::schema_error, "config: " + m); }

void reject_unknown(const Json& doc, std::initializer_list<std::string_view> keys, const std::string& where) {
  if (!doc.is_object()) config_schema(where + " must be an object");
  for (const auto& [key, value] : doc.items()) {
    bool ok = false;
    for (auto k : keys) ok = ok || key == k;
    if (!ok) config_schema(where + ": unknown key '" + key + "'");
  }
}

std::size_t positive(const Json& doc, const std::string& where) {
  if (!doc.is_number_integer() || doc.get<std::int64_t>() <= 0)
    throw Error(ErrorKind::semantic_error, "config: " + where + " must be a positive integer");
  return doc.get<std::size_t>();
}

double positive_real(const Json& doc, const std::string& where) {
  if (!doc.is_number() || !(doc.get<double>() > 0.0))
    throw Error(ErrorKind::semantic_error, "config: " + where + " must be a positive number");
  return doc.get<double>();
}

std::string name_of(const Json& entry, const std::string& where) {
  if (!entry.contains("name") || !entry["name"].is_string() || entry["name"].get<std::string>().empty())
    config_schema(where + ": each entry needs a nonempty string 'name'");
  const auto n = entry["name"].get<std::string>();
  for (char c : n)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.'))
      throw Error(ErrorKind::semantic_error, "config: " + where + ": name '" + n + "' may only use [A-Za-z0-9._-]");
  return n;
}

#define SYMDYN_BUDGET_FIELDS(X) \
  X(pair_maxlen)                \
  X(value_maxlen)               \
  X(limit_n)                    \
  X(exact_count_n)              \
  X(synch_maxgap)               \
  X(synch_maxlen)               \
  X(hereditary_nmax)            \
  X(hereditary_sweep)           \
  X(extender_maxlen)            \
  X(random_sfts)                \
  X(random_sft_alphabet)        \
  X(replacement_alphabet)       \
  X(replacement_max_vw)         \
  X(replacement_max_u)          \
  X(agreement_max_vw)

#define SYMDYN_TOLERANCE_FIELDS(X) \
  X(main) X(equality) X(root) X(cross) X(limit) X(exact_relative) X(value) X(synch) X(hereditary) X(gtheorem)

}  // namespace

VerifyConfig config_from_json(const Json& doc) {
  reject_unknown(doc, {"seed", "specs", "grid2d", "budgets", "tolerances"}, "top level");
  VerifyConfig c;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) config_schema("seed must be a nonnegative integer");
    c.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("specs")) {
    if (!doc["specs"].is_array()) config_schema("specs must be an array");
    std::set<std::string> names;
    for (const auto& e : doc["specs"]) {
      reject_unknown(e, {"name", "spec"}, "specs[]");
      const auto name = name_of(e, "specs[]");
      if (!names.insert(name).second) throw Error(ErrorKind::semantic_error, "config: duplicate spec name '" + name + "'");
      if (!e.contains("spec")) config_schema("specs[" + name + "]: missing 'spec'");
      c.specs.push_back({name, subshift_spec_from_json(e["spec"])});
    }
  }
  if (doc.contains("grid2d")) {
    if (!doc["grid2d"].is_array()) config_schema("grid2d must be an array");
    std::set<std::string> names;
    for (const auto& e : doc["grid2d"]) {
      reject_unknown(e, {"name", "spec", "v", "w", "widths", "halo", "lemma_side"}, "grid2d[]");
      const auto name = name_of(e, "grid2d[]");
      if (!names.insert(name).second) throw Error(ErrorKind::semantic_error, "config: duplicate grid2d name '" + name + "'");
      for (const char* key : {"spec", "v", "w"})
        if (!e.contains(key)) config_schema("grid2d[" + name + "]: missing '" + key + "'");
      Grid2dSpec spec = grid2d_spec_from_json(e["spec"]);
      GridCase g{name, spec, pattern_from_json(e["v"], spec.alphabet()), pattern_from_json(e["w"], spec.alphabet())};
      if (e.contains("widths")) {
        if (!e["widths"].is_array() || e["widths"].empty()) config_schema("grid2d[" + name + "].widths must be a nonempty array");
        g.widths.clear();
        for (const auto& W : e["widths"]) g.widths.push_back(static_cast<int>(positive(W, "grid2d.widths")));
      }
      if (e.contains("halo")) g.halo = static_cast<int>(positive(e["halo"], "grid2d.halo"));
      if (e.contains("lemma_side")) g.lemma_side = static_cast<int>(positive(e["lemma_side"], "grid2d.lemma_side"));
      c.grids.push_back(std::move(g));
    }
  }
  if (doc.contains("budgets")) {
    const Json& b = doc["budgets"];
#define X(f) #f,
    reject_unknown(b, {SYMDYN_BUDGET_FIELDS(X)}, "budgets");
#undef X
#define X(f) \
  if (b.contains(#f)) c.budgets.f = positive(b[#f], "budgets." #f);
    SYMDYN_BUDGET_FIELDS(X)
#undef X
  }
  if (doc.contains("tolerances")) {
    const Json& t = doc["tolerances"];
#define X(f) #f,
    reject_unknown(t, {SYMDYN_TOLERANCE_FIELDS(X)}, "tolerances");
#undef X
#define X(f) \
  if (t.contains(#f)) c.tolerances.f = positive_real(t[#f], "tolerances." #f);
    SYMDYN_TOLERANCE_FIELDS(X)
#undef X
  }
  return c;
}

Json config_to_json(const VerifyConfig& c) {
  Json doc;
  doc["seed"] = c.seed;
  Json specs = Json::array();
  for (const auto& s : c.specs) specs.push_back({{"name", s.name}, {"spec", to_json(s.spec)}});
  doc["specs"] = std::move(specs);
  Json grids = Json::array();
  for (const auto& g : c.grids) {
    Json e;
    e["name"] = g.name;
    e["spec"] = to_json(g.spec);
    e["v"] = to_json(g.v, g.spec.alphabet());
    e["w"] = to_json(g.w, g.spec.alphabet());
    e["widths"] = g.widths;
    e["halo"] = g.halo;
    e["lemma_side"] = g.lemma_side;
    grids.push_back(std::move(e));
  }
  doc["grid2d"] = std::move(grids);
  Json b, t;
#define X(f) b[#f] = c.budgets.f;
  SYMDYN_BUDGET_FIELDS(X)
#undef X
#define X(f) t[#f] = c.tolerances.f;
  SYMDYN_TOLERANCE_FIELDS(X)
#undef X
  doc["budgets"] = std::move(b);
  doc["tolerances"] = std::move(t);
  return doc;
}

VerifyConfig default_config() {
  VerifyConfig c;
  c.specs = {
      {"golden-mean", SubshiftSpec::golden_mean()},
      {"full-2", SubshiftSpec::full(Alphabet::binary())},
      {"sgap-0-1", SubshiftSpec::sgap(SGapSet::finite({0, 1}))},
      {"sgap-1-3", SubshiftSpec::sgap(SGapSet::finite({1, 3}))},
      {"sgap-0-2-3", SubshiftSpec::sgap(SGapSet::finite({0, 2, 3}))},
      {"sgap-from-1", SubshiftSpec::sgap(SGapSet::cofinite({}, 1))},
      {"sgap-2-from-5", SubshiftSpec::sgap(SGapSet::cofinite({2}, 5))},
  };
  const Grid2dSpec hs = Grid2dSpec::hard_square();
  c.grids.push_back({"hard-square", hs, Pattern2D({{{0, 0}, 1}}), Pattern2D({{{0, 0}, 0}})});
  return c;
}

SubshiftSpec random_sft(std::uint64_t seed, std::size_t index, std::size_t alphabet_size) {
  // Raw engine output only, so the draw does not depend on library distributions.
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
  std::vector<std::string> symbols;
  for (std::size_t s = 0; s < alphabet_size; ++s) symbols.push_back(std::to_string(s));
  const Alphabet alphabet(symbols);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<Word> forbidden;
    const std::size_t count = 2 + rng() % 3;
    while (forbidden.size() < count) {
      const std::size_t len = (rng() % 4 == 0) ? 3 : 2;
      Word f(len);
      for (auto& c : f) c = static_cast<Symbol>(rng() % alphabet_size);
      forbidden.insert(f);
    }
    auto spec = SubshiftSpec::sft(alphabet, std::vector<Word>(forbidden.begin(), forbidden.end()));
    try {
      const Subshift x(spec);
      if (entropy(x).h > 0.05) return spec;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::internal, "could not draw a nontrivial random SFT");
}

// ---------------------------------------------------------------------------
// Suite

bool VerificationReport::ok() const {
  return std::none_of(records.begin(), records.end(), [](const CheckRecord& r) {
    return r.status == CheckStatus::fail || r.status == CheckStatus::error;
  });
}

Json VerificationReport::to_json() const {
  Json doc;
  doc["suite"] = "symdyn-verify";
  doc["seed"] = seed;
  doc["config"] = config;
  std::map<std::string, std::size_t> counts{{"pass", 0}, {"fail", 0}, {"skipped", 0}, {"error", 0}};
  Json recs = Json::array();
  for (const auto& r : records) {
    ++counts[std::string(symdyn::to_string(r.status))];
    recs.push_back(r.to_json());
  }
  Json summary;
  summary["total"] = records.size();
  for (const auto& [k, v] : counts) summary[k] = v;
  summary["ok"] = ok();
  doc["summary"] = std::move(summary);
  doc["records"] = std::move(recs);
  Json ts;
  ts["started"] = started;
  ts["finished"] = finished;
  Json per = Json::object();
  for (const auto& r : records) per[r.name] = r.seconds;
  ts["seconds"] = std::move(per);
  doc["timestamps"] = std::move(ts);
  return doc;
}

void VerificationReport::write_csv(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  for (const auto& r : records)
    for (const auto& s : r.series) {
      std::string file = r.name + "__" + s.name + ".csv";
      std::replace(file.begin(), file.end(), '/', '_');
      std::ofstream out(dir / file, std::ios::binary);
      if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + (dir / file).string());
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
      };
      line(s.columns);
      for (const auto& row : s.rows) line(row);
    }
}

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

VerificationReport run_all(const VerifyConfig& config) {
  VerificationReport report;
  report.seed = config.seed;
  report.config = config_to_json(config);
  report.started = utc_now();
  const auto& b = config.budgets;
  const auto& tol = config.tolerances;

  using Task = std::function<CheckRecord()>;
  std::vector<Task> tasks;
  auto named = [](CheckRecord r, const std::string& suffix) {
    r.name += "/" + suffix;
    return r;
  };

  // Compiled subshifts are shared read-only between tasks.
  std::vector<std::shared_ptr<const Subshift>> compiled;
  for (const auto& s : config.specs) {
    std::shared_ptr<const Subshift> x;
    try {
      x = std::make_shared<const Subshift>(s.spec);
    } catch (const Error& e) {
      const std::string reason = std::string(to_string(e.kind())) + ": " + e.what();
      tasks.push_back([name = s.name, reason, subject = s.spec.describe()] {
        CheckRecord r;
        r.name = "compile/" + name;
        r.subject = subject;
        r.status = CheckStatus::error;
        r.reason = reason;
        return r;
      });
      continue;
    }
    const std::string name = s.name;
    tasks.push_back([=] { return named(check_main_inequality(*x, b.pair_maxlen, tol.main), name); });
    tasks.push_back([=] { return named(check_equality_corollary(*x, b.pair_maxlen, tol.equality), name); });
    tasks.push_back([=] { return named(check_extender_consistency(*x, b.extender_maxlen), name); });
    tasks.push_back([=] {
      return named(check_hereditary_entropy(*x, b.hereditary_nmax, b.hereditary_sweep, tol.hereditary), name);
    });
    if (s.spec.kind() == SubshiftSpec::Kind::sgap) {
      const SGapSet gaps = s.spec.gaps();
      tasks.push_back([=] { return named(check_entropy_root(gaps, tol.root, tol.cross), name); });
      tasks.push_back([=] {
        return named(check_limit(gaps, b.limit_n, tol.limit, b.exact_count_n, tol.exact_relative), name);
      });
      tasks.push_back([=] { return named(check_value_theorem(gaps, b.value_maxlen, tol.value), name); });
      tasks.push_back([=] {
        return named(check_synch_formula(gaps, b.synch_maxlen, b.synch_maxgap, tol.synch), name);
      });
    }
  }
  for (std::size_t i = 0; i < b.random_sfts; ++i)
    tasks.push_back([=, seed = config.seed] {
      const std::string name = "random-sft-" + std::to_string(i);
      try {
        const Subshift x(random_sft(seed, i, b.random_sft_alphabet));
        return named(check_extender_consistency(x, b.extender_maxlen), name);
      } catch (const Error& e) {
        CheckRecord r;
        r.name = "extender-consistency/" + name;
        r.status = CheckStatus::error;
        r.reason = e.what();
        return r;
      }
    });
  tasks.push_back([=] {
    return named(check_replacement_lemmas(b.replacement_alphabet, b.replacement_max_vw, b.replacement_max_u),
                 "alphabet-" + std::to_string(b.replacement_alphabet));
  });
  tasks.push_back([=] {
    return named(check_respects_agreement(b.replacement_alphabet, b.agreement_max_vw),
                 "alphabet-" + std::to_string(b.replacement_alphabet));
  });
  for (const auto& g : config.grids) {
    tasks.push_back([=] { return named(check_gtheorem(g.spec, g.v, g.w, g.widths, tol.gtheorem, g.halo), g.name); });
    tasks.push_back([=] { return named(check_grid_lemmas(g.spec, g.v, g.w, g.lemma_side), g.name); });
  }

  report.records.resize(tasks.size());
  parallel_for(tasks.size(), config.budgets.threads, [&](std::size_t i) { report.records[i] = tasks[i](); });
  std::sort(report.records.begin(), report.records.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  report.finished = utc_now();
  return report;
}

}  // namespace symdyn
