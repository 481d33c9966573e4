// Thin Python surface. Specs go in as JSON text and results come back as JSON
// text; the package wrapper converts both ways.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "symdyn/cli.hpp"
#include "symdyn/error.hpp"
#include "symdyn/extender.hpp"
#include "symdyn/io.hpp"
#include "symdyn/mme.hpp"
#include "symdyn/verify.hpp"

namespace py = pybind11;
using namespace symdyn;

namespace {

Subshift subshift(const std::string& spec_json) {
  AnySpec spec = parse_spec(spec_json);
  if (auto* s = std::get_if<SubshiftSpec>(&spec)) return Subshift(*s);
  throw Error(ErrorKind::semantic_error, "expected a one-dimensional spec");
}

std::string entropy_json(const std::string& spec) {
  const Subshift x = subshift(spec);
  const EntropyResult e = entropy(x);
  Json doc{{"h", e.h}, {"lambda", e.lambda}, {"irreducible", e.irreducible}};
  if (e.root_lambda) doc["root_lambda"] = *e.root_lambda;
  return doc.dump();
}

std::string count(const std::string& spec, std::size_t n) { return count_words(subshift(spec), n).str(); }

std::vector<std::string> enumerate(const std::string& spec, std::size_t n, std::uint64_t budget) {
  const Subshift x = subshift(spec);
  std::vector<std::string> out;
  for (const auto& w : enumerate_words(x, n, budget)) out.push_back(x.alphabet().format(w));
  return out;
}

bool is_member(const std::string& spec, const std::string& word) {
  const Subshift x = subshift(spec);
  return member(x, x.alphabet().parse(word));
}

std::string extender_cmp(const std::string& spec, const std::string& v, const std::string& w) {
  const Subshift x = subshift(spec);
  return std::string(to_string(extender_compare(x, x.alphabet().parse(v), x.alphabet().parse(w))));
}

std::string mme_json(const std::string& spec, const std::string& word) {
  const Subshift x = subshift(spec);
  const Word w = x.alphabet().parse(word);
  Json doc{{"word", word}};
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
  return doc.dump();
}

std::string replace(const std::string& u, const std::string& v, const std::string& w,
                    const std::vector<std::size_t>& positions) {
  return binary_string(replace_seq(binary_word(u), binary_word(v), binary_word(w), positions));
}

bool respects(const std::string& v, const std::string& w) {
  return respects_transition_exact(binary_word(v), binary_word(w)).respects;
}

std::string verify_run(const std::string& config_json) {
  const VerifyConfig config = config_json.empty() ? default_config() : config_from_json(parse_json(config_json));
  py::gil_scoped_release release;
  return run_all(config).to_json().dump();
}

py::tuple cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"symdyn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_symdyn, m) {
  m.doc() = "Symbolic dynamics toolkit core";
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result([&] { return py::exception<Error>(m, "SymdynError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error.get_stored(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });
  m.def("entropy", &entropy_json, py::arg("spec"));
  m.def("count", &count, py::arg("spec"), py::arg("n"));
  m.def("enumerate", &enumerate, py::arg("spec"), py::arg("n"), py::arg("budget") = std::uint64_t{1} << 22);
  m.def("member", &is_member, py::arg("spec"), py::arg("word"));
  m.def("extender_compare", &extender_cmp, py::arg("spec"), py::arg("v"), py::arg("w"));
  m.def("mme", &mme_json, py::arg("spec"), py::arg("word"));
  m.def("replace_seq", &replace, py::arg("u"), py::arg("v"), py::arg("w"), py::arg("positions"));
  m.def("respects", &respects, py::arg("v"), py::arg("w"));
  m.def("verify_run", &verify_run, py::arg("config") = "");
  m.def("cli", &cli, py::arg("args"));
}
