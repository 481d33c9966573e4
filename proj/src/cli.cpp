#include "symdyn/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "symdyn/extender.hpp"
#include "symdyn/io.hpp"
#include "symdyn/mme.hpp"
#include "symdyn/respecting_extension.hpp"
#include "symdyn/verify.hpp"

namespace symdyn {

namespace {

// Input errors count as usage errors; everything else is a failed run.
int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse_error:
    case ErrorKind::schema_error:
    case ErrorKind::semantic_error:
      return 2;
    default:
      return 1;
  }
}

void emit(std::ostream& os, const Json& doc) { os << doc.dump(2) << '\n'; }

Json error_doc(std::string_view kind, const std::string& message) {
  Json doc;
  doc["error"] = std::string(kind);
  doc["message"] = message;
  return doc;
}

SubshiftSpec one_dimensional(const std::string& path) {
  AnySpec spec = load_spec(path);
  if (auto* s = std::get_if<SubshiftSpec>(&spec)) return *s;
  throw Error(ErrorKind::semantic_error, path + ": expected a one-dimensional spec, got grid2d");
}

Word parse_word(const Alphabet& a, const std::string& text, const char* what) {
  try {
    return a.parse(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::semantic_error, std::string(what) + " '" + text + "': " + e.what());
  }
}

Alphabet alphabet_option(const std::string& csv) {
  std::vector<std::string> symbols;
  std::stringstream in(csv);
  for (std::string s; std::getline(in, s, ',');) symbols.push_back(s);
  try {
    return Alphabet(std::move(symbols));
  } catch (const Error& e) {
    throw Error(ErrorKind::semantic_error, std::string("--alphabet: ") + e.what());
  }
}

template <class T>
std::vector<T> csv_numbers(const std::string& csv, const char* what) {
  std::vector<T> out;
  std::stringstream in(csv);
  for (std::string s; std::getline(in, s, ',');) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size() || v < 0) throw std::invalid_argument(s);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::semantic_error, std::string(what) + ": '" + s + "' is not a nonnegative integer");
    }
  }
  return out;
}

Json descriptor_json(const Subshift& x, const ExtenderDescriptor& d) {
  const Automaton& a = x.automaton();
  Json left = Json::array(), right = Json::array(), transfers = Json::array();
  for (auto p : d.left_classes) left.push_back(a.state_name(p));
  for (auto q : d.right_classes) right.push_back(a.state_name(q));
  for (auto [p, q] : d.transfers) transfers.push_back(Json::array({a.state_name(p), a.state_name(q)}));
  Json doc;
  doc["left_classes"] = std::move(left);
  doc["right_classes"] = std::move(right);
  doc["transfers"] = std::move(transfers);
  return doc;
}

// Writes via a sibling temporary so readers never see a partial file.
void write_atomically(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + path.string());
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic dynamics toolkit: languages, entropy, extender sets and measures of maximal entropy.",
               "symdyn"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "symdyn 0.1.0");

  std::string spec_path, word, v_text, w_text, u_text, alphabet_csv = "0,1", positions_csv, widths_csv = "4,6,8";
  std::string config_path, out_path, csv_dir, v_path, w_path;
  std::size_t n = 0, bounded = 0;
  std::uint64_t budget = std::uint64_t{1} << 22;
  int halo = 1;
  double tol = 1e-12;

  auto* entropy_cmd = app.add_subcommand("entropy", "Topological entropy h = log lambda");
  entropy_cmd->add_option("--spec", spec_path, "Spec file")->required();

  auto* count_cmd = app.add_subcommand("count", "Exact |L_n| by big-integer dynamic programming");
  count_cmd->add_option("--spec", spec_path, "Spec file")->required();
  count_cmd->add_option("--n", n, "Word length")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "List L_n in lexicographic order");
  enum_cmd->add_option("--spec", spec_path, "Spec file")->required();
  enum_cmd->add_option("--n", n, "Word length")->required();
  enum_cmd->add_option("--budget", budget, "Maximum number of words")->check(CLI::PositiveNumber);

  auto* member_cmd = app.add_subcommand("member", "Is the word in the language");
  member_cmd->add_option("--spec", spec_path, "Spec file")->required();
  member_cmd->add_option("word", word, "Word")->required();

  auto* ext_cmd = app.add_subcommand("extender", "Extender set operations");
  ext_cmd->require_subcommand(1);
  auto* cmp_cmd = ext_cmd->add_subcommand("cmp", "Compare E(v) with E(w)");
  cmp_cmd->add_option("--spec", spec_path, "Spec file")->required();
  cmp_cmd->add_option("v", v_text, "First word")->required();
  cmp_cmd->add_option("w", w_text, "Second word")->required();

  auto* mme_cmd = app.add_subcommand("mme", "Measure of maximal entropy of a cylinder");
  mme_cmd->add_option("--spec", spec_path, "Spec file")->required();
  mme_cmd->add_option("--word", word, "Word")->required();

  auto* replace_cmd = app.add_subcommand("replace", "Sequential replacement of v by w in u");
  replace_cmd->add_option("--u", u_text, "Host word")->required();
  replace_cmd->add_option("--v", v_text, "Replaced word")->required();
  replace_cmd->add_option("--w", w_text, "Replacement word")->required();
  replace_cmd->add_option("--positions", positions_csv, "Comma-separated occurrence positions in u")->required();
  replace_cmd->add_option("--alphabet", alphabet_csv, "Comma-separated symbols")->capture_default_str();

  auto* respects_cmd = app.add_subcommand("respects", "Does v respect the transition to w");
  respects_cmd->add_option("v", v_text, "Replaced word")->required();
  respects_cmd->add_option("w", w_text, "Replacement word")->required();
  respects_cmd->add_option("--alphabet", alphabet_csv, "Comma-separated symbols")->capture_default_str();
  respects_cmd->add_option("--bounded", bounded, "Also run the brute-force sweep up to this length")
      ->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Verification suite");
  verify_cmd->require_subcommand(1);
  auto* run_cmd = verify_cmd->add_subcommand("run", "Run every check in a config");
  run_cmd->add_option("--config", config_path, "Config file (defaults built in when omitted)");
  run_cmd->add_option("--out", out_path, "Report JSON path");
  run_cmd->add_option("--csv", csv_dir, "Directory for numeric series");
  auto* defaults_cmd = verify_cmd->add_subcommand("default-config", "Print the built-in config");

  auto* grid_cmd = app.add_subcommand("grid2d", "Two-dimensional shifts of finite type");
  grid_cmd->require_subcommand(1);
  auto* gth_cmd = grid_cmd->add_subcommand("check-gtheorem", "Same-shape inequality on strip approximations");
  gth_cmd->add_option("--spec", spec_path, "Grid spec file")->required();
  gth_cmd->add_option("--v", v_path, "Pattern file for v")->required();
  gth_cmd->add_option("--w", w_path, "Pattern file for w")->required();
  gth_cmd->add_option("--widths", widths_csv, "Comma-separated strip widths")->capture_default_str();
  gth_cmd->add_option("--halo", halo, "Replaceability halo radius")->check(CLI::PositiveNumber)->capture_default_str();
  gth_cmd->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    Json doc = error_doc("usage", e.what());
    doc["help"] = app.help("", CLI::AppFormatMode::All);
    emit(err, doc);
    return 2;
  }

  try {
    if (entropy_cmd->parsed()) {
      const Subshift x(one_dimensional(spec_path));
      const EntropyResult e = entropy(x);
      Json doc;
      doc["h"] = e.h;
      doc["lambda"] = e.lambda;
      doc["irreducible"] = e.irreducible;
      doc["states"] = x.automaton().num_states();
      if (e.root_lambda) doc["root_lambda"] = *e.root_lambda;
      emit(out, doc);
      return 0;
    }
    if (count_cmd->parsed()) {
      const Subshift x(one_dimensional(spec_path));
      emit(out, {{"n", n}, {"count", count_words(x, n).str()}});
      return 0;
    }
    if (enum_cmd->parsed()) {
      const Subshift x(one_dimensional(spec_path));
      Json words = Json::array();
      for (const auto& w : enumerate_words(x, n, budget)) words.push_back(x.alphabet().format(w));
      emit(out, {{"n", n}, {"words", words}});
      return 0;
    }
    if (member_cmd->parsed()) {
      const Subshift x(one_dimensional(spec_path));
      const Word w = parse_word(x.alphabet(), word, "word");
      emit(out, {{"word", word}, {"member", member(x, w)}});
      return 0;
    }
    if (cmp_cmd->parsed()) {
      const Subshift x(one_dimensional(spec_path));
      const Word v = parse_word(x.alphabet(), v_text, "v");
      const Word w = parse_word(x.alphabet(), w_text, "w");
      const auto dv = extender_descriptor(x, v);
      const auto dw = extender_descriptor(x, w);
      Json doc;
      doc["relation"] = std::string(to_string(extender_compare(x, v, w)));
      doc["v"] = descriptor_json(x, dv);
      doc["w"] = descriptor_json(x, dw);
      emit(out, doc);
      return 0;
    }
    if (mme_cmd->parsed()) {
      const Subshift x(one_dimensional(spec_path));
      const Word w = parse_word(x.alphabet(), word, "word");
      Json doc;
      doc["word"] = word;
      if (x.spec().kind() == SubshiftSpec::Kind::sgap) {
        const SGapMme m(x.spec().gaps());
        const auto cert = m.certificate(w);
        doc["mu"] = m.mu(w);
        doc["t"] = m.t();
        doc["mu1"] = m.mu1();
        doc["k"] = cert.k;
        doc["f"] = cert.f;
      } else {
        doc["mu"] = mu_parry(ParryModel(x.automaton_ptr()), w);
      }
      emit(out, doc);
      return 0;
    }
    if (replace_cmd->parsed()) {
      const Alphabet a = alphabet_option(alphabet_csv);
      const Word u = parse_word(a, u_text, "u");
      const Word v = parse_word(a, v_text, "v");
      const Word w = parse_word(a, w_text, "w");
      const auto positions = csv_numbers<std::size_t>(positions_csv, "--positions");
      emit(out, {{"result", a.format(replace_seq(u, v, w, positions))}});
      return 0;
    }
    if (respects_cmd->parsed()) {
      const Alphabet a = alphabet_option(alphabet_csv);
      const Word v = parse_word(a, v_text, "v");
      const Word w = parse_word(a, w_text, "w");
      const auto verdict = respects_transition_exact(v, w);
      const auto flags = affix_flags(v, w);
      Json doc;
      doc["v"] = v_text;
      doc["w"] = w_text;
      doc["respects"] = verdict.respects;
      doc["v_is_suffix_of_w"] = flags.v_is_suffix_of_w;
      doc["w_is_prefix_of_v"] = flags.w_is_prefix_of_v;
      if (verdict.witness) {
        const auto& wt = *verdict.witness;
        doc["witness"] = {{"u", a.format(wt.u)}, {"i", wt.i}, {"j", wt.j}, {"clause", std::string(to_string(wt.clause))}};
      } else {
        doc["witness"] = nullptr;
      }
      if (bounded) doc["bounded"] = respects_transition_bounded(v, w, a.size(), bounded).respects;
      emit(out, doc);
      return 0;
    }
    if (defaults_cmd->parsed()) {
      emit(out, config_to_json(default_config()));
      return 0;
    }
    if (run_cmd->parsed()) {
      const VerifyConfig config =
          config_path.empty() ? default_config() : config_from_json(parse_json(read_file(config_path)));
      const VerificationReport report = run_all(config);
      if (!out_path.empty()) write_atomically(out_path, report.to_json().dump(2) + "\n");
      if (!csv_dir.empty()) report.write_csv(csv_dir);
      Json summary = report.to_json()["summary"];
      Json failing = Json::array();
      for (const auto& r : report.records)
        if (r.status == CheckStatus::fail || r.status == CheckStatus::error)
          failing.push_back({{"name", r.name}, {"status", std::string(to_string(r.status))}, {"reason", r.reason}});
      Json doc;
      doc["ok"] = report.ok();
      doc["summary"] = summary;
      doc["failing"] = failing;
      if (!out_path.empty()) doc["report"] = out_path;
      emit(out, doc);
      return report.ok() ? 0 : 1;
    }
    if (gth_cmd->parsed()) {
      AnySpec any = load_spec(spec_path);
      auto* spec = std::get_if<Grid2dSpec>(&any);
      if (!spec) throw Error(ErrorKind::semantic_error, spec_path + ": expected a grid2d spec");
      const Pattern2D v = load_pattern(v_path, spec->alphabet());
      const Pattern2D w = load_pattern(w_path, spec->alphabet());
      std::vector<int> widths = csv_numbers<int>(widths_csv, "--widths");
      if (widths.empty()) throw Error(ErrorKind::semantic_error, "--widths: at least one width");
      CheckRecord rec = check_gtheorem(*spec, v, w, widths, tol, halo);
      Json doc = rec.to_json();
      Json rows = Json::array();
      for (const auto& s : rec.series)
        for (const auto& row : s.rows) {
          Json r;
          for (std::size_t i = 0; i < row.size(); ++i) r[s.columns[i]] = std::stod(row[i]);
          rows.push_back(std::move(r));
        }
      doc["values"] = std::move(rows);
      emit(out, doc);
      return rec.status == CheckStatus::pass ? 0 : 1;
    }
  } catch (const Error& e) {
    emit(err, error_doc(to_string(e.kind()), e.what()));
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    emit(err, error_doc("internal", e.what()));
    return 1;
  }
  emit(err, error_doc("usage", "no command"));
  return 2;
}

}  // namespace symdyn
