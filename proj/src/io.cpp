#include "symdyn/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace symdyn {

namespace {

[[noreturn]] void schema(const std::string& message) { throw Error(ErrorKind::schema_error, message); }
[[noreturn]] void semantic(const std::string& message) { throw Error(ErrorKind::semantic_error, message); }

void allow_keys(const Json& doc, std::initializer_list<std::string_view> keys, const std::string& where) {
  if (!doc.is_object()) schema(where + ": expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) schema(where + ": unknown key '" + key + "'");
  }
}

const Json& require(const Json& doc, const std::string& key, const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end()) schema(where + ": missing key '" + key + "'");
  return *it;
}

std::vector<unsigned> gap_list(const Json& doc, const std::string& field) {
  if (!doc.is_array()) schema("sgap." + field + ": expected an array of nonnegative integers");
  std::vector<unsigned> out;
  for (const auto& v : doc) {
    if (!v.is_number_unsigned()) schema("sgap." + field + ": expected an array of nonnegative integers");
    out.push_back(v.get<unsigned>());
  }
  std::set<unsigned> seen;
  for (unsigned g : out)
    if (!seen.insert(g).second) semantic("sgap." + field + ": duplicate gap " + std::to_string(g));
  return out;
}

Alphabet alphabet_from(const Json& doc, const std::string& where) {
  if (!doc.is_array()) schema(where + ".alphabet: expected an array of strings");
  std::vector<std::string> symbols;
  for (const auto& s : doc) {
    if (!s.is_string()) schema(where + ".alphabet: expected an array of strings");
    symbols.push_back(s.get<std::string>());
  }
  try {
    return Alphabet(std::move(symbols));
  } catch (const Error& e) {
    semantic(where + ".alphabet: " + e.what());
  }
}

Json alphabet_json(const Alphabet& a) {
  Json arr = Json::array();
  for (const auto& s : a.symbols()) arr.push_back(s);
  return arr;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse_error, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SubshiftSpec subshift_spec_from_json(const Json& doc) {
  if (!doc.is_object()) schema("spec: expected a JSON object");
  const Json& type = require(doc, "type", "spec");
  if (!type.is_string()) schema("spec.type: expected a string");
  const auto kind = type.get<std::string>();
  if (kind == "full") {
    allow_keys(doc, {"type", "alphabet"}, "full");
    return SubshiftSpec::full(alphabet_from(require(doc, "alphabet", "full"), "full"));
  }
  if (kind == "sft") {
    allow_keys(doc, {"type", "alphabet", "forbidden"}, "sft");
    Alphabet alphabet = alphabet_from(require(doc, "alphabet", "sft"), "sft");
    const Json& list = require(doc, "forbidden", "sft");
    if (!list.is_array()) schema("sft.forbidden: expected an array of strings");
    std::vector<Word> forbidden;
    for (const auto& f : list) {
      if (!f.is_string()) schema("sft.forbidden: expected an array of strings");
      try {
        forbidden.push_back(alphabet.parse(f.get<std::string>()));
      } catch (const Error& e) {
        semantic("sft.forbidden: word '" + f.get<std::string>() + "': " + e.what());
      }
      if (forbidden.back().empty()) semantic("sft.forbidden: empty word");
    }
    return SubshiftSpec::sft(std::move(alphabet), std::move(forbidden));
  }
  if (kind == "sgap") {
    allow_keys(doc, {"type", "finite", "extra", "from"}, "sgap");
    const bool finite = doc.contains("finite");
    const bool cofinite = doc.contains("from") || doc.contains("extra");
    if (finite == cofinite) schema("sgap: give either 'finite' or 'from' (with optional 'extra')");
    try {
      if (finite) {
        auto gaps = gap_list(doc["finite"], "finite");
        if (gaps.empty()) semantic("sgap.finite: the gap set must be nonempty");
        return SubshiftSpec::sgap(SGapSet::finite(std::move(gaps)));
      }
      const Json& from = require(doc, "from", "sgap");
      if (!from.is_number_unsigned()) schema("sgap.from: expected a nonnegative integer");
      auto extra = doc.contains("extra") ? gap_list(doc["extra"], "extra") : std::vector<unsigned>{};
      return SubshiftSpec::sgap(SGapSet::cofinite(std::move(extra), from.get<unsigned>()));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::invalid_argument) semantic(std::string("sgap: ") + e.what());
      throw;
    }
  }
  if (kind == "grid2d") semantic("spec: a grid2d spec is not a one-dimensional subshift");
  schema("spec.type: expected one of full, sft, sgap, grid2d");
}

Pattern2D pattern_from_json(const Json& doc, const Alphabet& alphabet) {
  allow_keys(doc, {"cells"}, "pattern");
  const Json& cells = require(doc, "cells", "pattern");
  if (!cells.is_array()) schema("pattern.cells: expected an array of [x,y,symbol]");
  std::vector<std::pair<Cell, Symbol>> out;
  for (const auto& c : cells) {
    if (!c.is_array() || c.size() != 3 || !c[0].is_number_integer() || !c[1].is_number_integer() ||
        !c[2].is_string())
      schema("pattern.cells: expected entries [x,y,\"symbol\"]");
    auto sym = alphabet.find(c[2].get<std::string>());
    if (!sym) semantic("pattern.cells: symbol '" + c[2].get<std::string>() + "' not in the alphabet");
    out.push_back({{c[0].get<int>(), c[1].get<int>()}, *sym});
  }
  if (out.empty()) semantic("pattern.cells: pattern must be nonempty");
  try {
    return Pattern2D(std::move(out));
  } catch (const Error& e) {
    semantic(std::string("pattern.cells: ") + e.what());
  }
}

Grid2dSpec grid2d_spec_from_json(const Json& doc) {
  allow_keys(doc, {"type", "alphabet", "forbidden"}, "grid2d");
  const Json& type = require(doc, "type", "grid2d");
  if (!type.is_string() || type.get<std::string>() != "grid2d") schema("grid2d.type: expected \"grid2d\"");
  Alphabet alphabet = alphabet_from(require(doc, "alphabet", "grid2d"), "grid2d");
  const Json& list = require(doc, "forbidden", "grid2d");
  if (!list.is_array()) schema("grid2d.forbidden: expected an array of patterns");
  std::vector<Pattern2D> forbidden;
  for (const auto& p : list) forbidden.push_back(pattern_from_json(p, alphabet));
  return Grid2dSpec(std::move(alphabet), std::move(forbidden));
}

AnySpec spec_from_json(const Json& doc) {
  if (doc.is_object() && doc.contains("type") && doc["type"] == "grid2d") return grid2d_spec_from_json(doc);
  return subshift_spec_from_json(doc);
}

AnySpec parse_spec(const std::string& text) { return spec_from_json(parse_json(text)); }

AnySpec load_spec(const std::filesystem::path& path) { return parse_spec(read_file(path)); }

Json to_json(const SubshiftSpec& spec) {
  Json doc;
  switch (spec.kind()) {
    case SubshiftSpec::Kind::full:
      doc["type"] = "full";
      doc["alphabet"] = alphabet_json(spec.alphabet());
      break;
    case SubshiftSpec::Kind::sft: {
      doc["type"] = "sft";
      doc["alphabet"] = alphabet_json(spec.alphabet());
      Json list = Json::array();
      for (const auto& f : spec.forbidden()) list.push_back(spec.alphabet().format(f));
      doc["forbidden"] = std::move(list);
      break;
    }
    case SubshiftSpec::Kind::sgap: {
      const auto& g = spec.gaps();
      doc["type"] = "sgap";
      if (g.is_finite()) {
        doc["finite"] = g.elements();
      } else {
        doc["extra"] = g.elements();
        doc["from"] = g.from();
      }
      break;
    }
  }
  return doc;
}

Json to_json(const Pattern2D& pattern, const Alphabet& alphabet) {
  Json cells = Json::array();
  for (const auto& [c, s] : pattern.cells()) cells.push_back(Json::array({c.x, c.y, alphabet.token(s)}));
  Json doc;
  doc["cells"] = std::move(cells);
  return doc;
}

Json to_json(const Grid2dSpec& spec) {
  Json doc;
  doc["type"] = "grid2d";
  doc["alphabet"] = alphabet_json(spec.alphabet());
  Json list = Json::array();
  for (const auto& f : spec.forbidden()) list.push_back(to_json(f, spec.alphabet()));
  doc["forbidden"] = std::move(list);
  return doc;
}

Json to_json(const AnySpec& spec) {
  return std::visit([](const auto& s) { return to_json(s); }, spec);
}

std::string canonical_text(const AnySpec& spec) { return to_json(spec).dump(2) + "\n"; }

Pattern2D load_pattern(const std::filesystem::path& path, const Alphabet& alphabet) {
  return pattern_from_json(parse_json(read_file(path)), alphabet);
}

}  // namespace symdyn
