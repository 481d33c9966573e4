#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "symdyn/grid2d.hpp"
#include "symdyn/io.hpp"
#include "symdyn/mme.hpp"
#include "symdyn/subshift.hpp"

namespace symdyn {

enum class CheckStatus { pass, fail, skipped, error };

std::string_view to_string(CheckStatus status);

struct Residual {
  std::string label;
  double value = 0.0;
  double tolerance = 0.0;
};

/// Numeric table emitted as CSV; cells are preformatted so output is
/// independent of locale and stream state.
struct Series {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct CheckRecord {
  std::string name;
  std::string subject;
  Json parameters = Json::object();
  std::vector<Residual> residuals;
  Json metrics = Json::object();
  CheckStatus status = CheckStatus::pass;
  std::string reason;
  Json witness;  // null unless the check failed
  std::vector<Series> series;
  double seconds = 0.0;  // reported under timestamps only

  /// pass iff every residual is within tolerance; leaves skipped/error alone.
  void settle();
  Json to_json() const;
};

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

/// mu(w) for a one-dimensional spec: the Theorem-value recursion for S-gap
/// specs and the Parry measure otherwise.
class Measure {
 public:
  explicit Measure(const Subshift& x);
  double operator()(std::span<const Symbol> w) const;
  double entropy() const noexcept { return h_; }
  const SGapMme* sgap() const noexcept { return sgap_.get(); }

 private:
  std::unique_ptr<SGapMme> sgap_;
  std::unique_ptr<ParryModel> parry_;
  double h_ = 0.0;
};

// ---------------------------------------------------------------------------
// Individual checks. Each returns a settled record and never throws for
// failures of the mathematical statement itself.

CheckRecord check_main_inequality(const Subshift& x, std::size_t max_length, double tol,
                                  bool same_length_only = false);
CheckRecord check_equality_corollary(const Subshift& x, std::size_t max_length, double tol);
CheckRecord check_entropy_root(const SGapSet& gaps, double root_tol, double cross_tol);
CheckRecord check_limit(const SGapSet& gaps, std::size_t n, double tol, std::size_t exact_n,
                        double exact_rel_tol);
CheckRecord check_value_theorem(const SGapSet& gaps, std::size_t max_length, double tol);
/// Runs the truncated sum for every u in L_{<= max_u_length}.
CheckRecord check_synch_formula(const SGapSet& gaps, std::size_t max_u_length, std::size_t max_gap,
                                double tol);
/// Single-word variant.
CheckRecord check_synch_formula_word(const SGapSet& gaps, std::span<const Symbol> u,
                                     std::size_t max_gap, double tol);
CheckRecord check_hereditary_entropy(const Subshift& x, std::size_t n_max, std::size_t sweep_length,
                                     double tol);
CheckRecord check_replacement_lemmas(std::size_t alphabet_size, std::size_t max_vw,
                                     std::size_t max_u);
CheckRecord check_respects_agreement(std::size_t alphabet_size, std::size_t max_vw);
/// Exact extender comparison against the windowed comparator at radius =
/// memory, on all pairs of words up to max_length.
CheckRecord check_extender_consistency(const Subshift& x, std::size_t max_length);

CheckRecord check_gtheorem(const Grid2dSpec& spec, const Pattern2D& v, const Pattern2D& w,
                           const std::vector<int>& widths, double tol, int halo = 1);
/// Sparse replacement lemmas on every legal side x side rectangle.
CheckRecord check_grid_lemmas(const Grid2dSpec& spec, const Pattern2D& v, const Pattern2D& w,
                              int side);

// ---------------------------------------------------------------------------
// Suite

struct NamedSpec {
  std::string name;
  SubshiftSpec spec;
};

struct GridCase {
  std::string name;
  Grid2dSpec spec;
  Pattern2D v, w;
  std::vector<int> widths{4, 6, 8};
  int halo = 1;
  int lemma_side = 5;
};

struct VerifyConfig {
  std::uint64_t seed = 20240601;
  std::vector<NamedSpec> specs;
  std::vector<GridCase> grids;

  struct Budgets {
    std::size_t pair_maxlen = 6;
    std::size_t value_maxlen = 10;
    std::size_t limit_n = 200;
    std::size_t exact_count_n = 60;
    std::size_t synch_maxgap = 40;
    std::size_t synch_maxlen = 4;
    std::size_t hereditary_nmax = 8;
    std::size_t hereditary_sweep = 8;
    std::size_t extender_maxlen = 6;
    std::size_t random_sfts = 2;
    std::size_t random_sft_alphabet = 3;
    std::size_t replacement_alphabet = 2;
    std::size_t replacement_max_vw = 3;
    std::size_t replacement_max_u = 12;
    std::size_t agreement_max_vw = 4;
    std::size_t threads = 0;  // 0: hardware concurrency
  } budgets;

  struct Tolerances {
    double main = 1e-12;
    double equality = 1e-9;
    double root = 1e-12;
    double cross = 1e-10;
    double limit = 1e-3;
    double exact_relative = 1e-9;
    double value = 1e-9;
    double synch = 1e-6;
    double hereditary = 1e-9;
    double gtheorem = 1e-12;
  } tolerances;
};

/// Throws schema_error/semantic_error on malformed configs.
VerifyConfig config_from_json(const Json& doc);
Json config_to_json(const VerifyConfig& config);
VerifyConfig default_config();

struct VerificationReport {
  std::uint64_t seed = 0;
  Json config;
  std::vector<CheckRecord> records;  // sorted by name
  std::string started, finished;

  bool ok() const;
  /// Full report; the "timestamps" member is the only nondeterministic part.
  Json to_json() const;
  /// Writes one CSV per series into `dir`, named <check>__<series>.csv.
  void write_csv(const std::filesystem::path& dir) const;
};

VerificationReport run_all(const VerifyConfig& config);

/// Random SFT over k symbols derived deterministically from the seed.
SubshiftSpec random_sft(std::uint64_t seed, std::size_t index, std::size_t alphabet_size);

}  // namespace symdyn
