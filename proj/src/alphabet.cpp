#include <algorithm>
#include <set>

#include "symdyn/words.hpp"

namespace symdyn {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::invalid_position: return "invalid-position";
    case ErrorKind::replacement_broken: return "replacement-broken";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::not_found: return "not-found";
    case ErrorKind::empty_subshift: return "empty-subshift";
    case ErrorKind::reducible_presentation: return "reducible-presentation";
    case ErrorKind::not_sparse: return "not-sparse";
    case ErrorKind::position_not_occurrence: return "position-not-occurrence";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::schema_error: return "schema-error";
    case ErrorKind::semantic_error: return "semantic-error";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the symbols plus the length.
  std::size_t h = 1469598103934665603ull;
  for (Symbol s : w) {
    h ^= s;
    h *= 1099511628211ull;
  }
  h ^= w.size();
  return h;
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error(ErrorKind::invalid_argument, "alphabet must be nonempty");
  if (symbols_.size() > 65535)
    throw Error(ErrorKind::resource_limit, "alphabet larger than 65535 symbols");
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw Error(ErrorKind::invalid_argument, "alphabet symbols must be nonempty");
    if (s.find('.') != std::string::npos)
      throw Error(ErrorKind::invalid_argument, "alphabet symbol '" + s + "' contains '.'");
    if (!seen.insert(s).second)
      throw Error(ErrorKind::invalid_argument, "duplicate alphabet symbol '" + s + "'");
    if (s.size() != 1) single_char_ = false;
  }
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

const std::string& Alphabet::token(Symbol s) const {
  if (s >= symbols_.size())
    throw Error(ErrorKind::invalid_argument, "symbol index out of range");
  return symbols_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), token);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<Symbol>(it - symbols_.begin());
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  auto push = [&](std::string_view tok) {
    auto s = find(tok);
    if (!s)
      throw Error(ErrorKind::invalid_argument,
                  "symbol '" + std::string(tok) + "' is not in the alphabet");
    out.push_back(*s);
  };
  if (text.empty()) return out;
  if (single_char_ && text.find('.') == std::string_view::npos) {
    for (char c : text) push(std::string_view(&c, 1));
    return out;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    push(text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

std::string Alphabet::format(std::span<const Symbol> word) const {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (!single_char_ && k > 0) out.push_back('.');
    out += token(word[k]);
  }
  return out;
}

bool Alphabet::contains(std::span<const Symbol> word) const noexcept {
  return std::all_of(word.begin(), word.end(), [&](Symbol s) { return s < symbols_.size(); });
}

Word binary_word(std::string_view text) {
  Word out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw Error(ErrorKind::invalid_argument, "binary word may only contain 0 and 1");
    out.push_back(static_cast<Symbol>(c - '0'));
  }
  return out;
}

std::string binary_string(std::span<const Symbol> word) {
  std::string out;
  out.reserve(word.size());
  for (Symbol s : word) out.push_back(static_cast<char>('0' + s));
  return out;
}

}  // namespace symdyn
