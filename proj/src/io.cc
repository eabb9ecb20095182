// Copyright 2026 The scp-bigstep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scp/io.h"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace scp {
namespace {

struct Token {
  std::string_view text;
  std::size_t line;
};

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) {
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (c == '\n') {
        ++line;
        ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else {
        const std::size_t start = i;
        while (i < text.size() &&
               !std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        tokens_.push_back({text.substr(start, i - start), line});
      }
    }
    if (!tokens_.empty()) last_line_ = tokens_.back().line;
  }

  bool done() const { return pos_ == tokens_.size(); }
  const Token* peek() const { return done() ? nullptr : &tokens_[pos_]; }
  std::optional<Token> next() {
    if (done()) return std::nullopt;
    return tokens_[pos_++];
  }
  // Line of the next token, or of the last token once input is exhausted.
  std::size_t line() const { return done() ? last_line_ : tokens_[pos_].line; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 1;
};

std::optional<std::size_t> ToCount(std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return static_cast<std::size_t>(value);
}

// Reads a non-negative integer or throws with `what` describing the slot.
std::size_t ReadCount(Tokenizer& tokens, const std::string& what,
                      const std::string& missing) {
  const std::size_t line = tokens.line();
  const std::optional<Token> token = tokens.next();
  if (!token) throw ParseError(missing, line);
  const std::optional<std::size_t> value = ToCount(token->text);
  if (!value) {
    throw ParseError("malformed " + what + " '" + std::string(token->text) +
                         "'",
                     token->line);
  }
  return *value;
}

void ExpectEnd(const Tokenizer& tokens) {
  if (const Token* extra = tokens.peek()) {
    throw ParseError("unexpected trailing token '" + std::string(extra->text) +
                         "'",
                     extra->line);
  }
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line == 0 ? what
                                   : what + " at line " + std::to_string(line)),
      line_(line) {}

std::string SerializeInstance(const Instance& instance) {
  std::ostringstream out;
  out << instance.universe_size() << ' ' << instance.set_count() << '\n';
  for (const ElementSet& set : instance.sets()) {
    const std::vector<std::size_t> elements = set.elements();
    out << elements.size();
    for (const std::size_t e : elements) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

Instance ParseInstance(std::string_view text) {
  Tokenizer tokens(text);
  const std::size_t n = ReadCount(tokens, "header", "malformed header: missing n");
  const std::size_t m = ReadCount(tokens, "header", "malformed header: missing m");
  if (n == 0) throw ParseError("universe size must be >= 1", 1);
  if (m == 0) throw ParseError("set count must be >= 1", 1);

  std::vector<ElementSet> sets;
  sets.reserve(m);
  const auto truncated = [&] {
    return "truncated set list: expected " + std::to_string(m) +
           " sets, found " + std::to_string(sets.size());
  };
  for (std::size_t s = 0; s < m; ++s) {
    const std::size_t k = ReadCount(tokens, "set size", truncated());
    ElementSet set(n);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t line = tokens.line();
      const std::size_t e = ReadCount(tokens, "element", truncated());
      if (e >= n) {
        throw ParseError("element " + std::to_string(e) + " out of range", line);
      }
      if (set.contains(e)) {
        throw ParseError("duplicate element " + std::to_string(e), line);
      }
      set.insert(e);
    }
    sets.push_back(std::move(set));
  }
  ExpectEnd(tokens);
  return Instance(n, std::move(sets));
}

Instance ParseOrlibScp(std::string_view text,
                       std::vector<std::string>* warnings) {
  Tokenizer tokens(text);
  const std::size_t rows = ReadCount(tokens, "header", "malformed header: missing rows");
  const std::size_t columns =
      ReadCount(tokens, "header", "malformed header: missing columns");
  if (rows == 0) throw ParseError("zero rows", 1);
  if (columns == 0) throw ParseError("zero columns", 1);

  bool unit_costs = true;
  for (std::size_t c = 0; c < columns; ++c) {
    const std::size_t line = tokens.line();
    const std::optional<Token> token = tokens.next();
    if (!token) {
      throw ParseError("truncated cost section: expected " +
                           std::to_string(columns) + " costs, found " +
                           std::to_string(c),
                       line);
    }
    const std::string cost_text(token->text);
    char* end = nullptr;
    const double cost = std::strtod(cost_text.c_str(), &end);
    if (end != cost_text.c_str() + cost_text.size()) {
      throw ParseError("malformed cost '" + cost_text + "'", token->line);
    }
    if (cost != 1.0) unit_costs = false;
  }
  if (!unit_costs && warnings != nullptr) {
    warnings->push_back("non-unit column costs ignored (unicost problem)");
  }

  std::vector<ElementSet> sets(columns, ElementSet(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string missing = "truncated row section: expected " +
                                std::to_string(rows) + " rows, found " +
                                std::to_string(r);
    const std::size_t k = ReadCount(tokens, "row count", missing);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t line = tokens.line();
      const std::size_t column = ReadCount(tokens, "column index", missing);
      if (column == 0 || column > columns) {
        throw ParseError("column index " + std::to_string(column) +
                             " out of bounds",
                         line);
      }
      sets[column - 1].insert(r);
    }
  }
  ExpectEnd(tokens);
  return Instance(rows, std::move(sets));
}

CampaignSpec ParseCampaignSpec(std::string_view json_text) {
  using nlohmann::json;
  CampaignSpec spec;
  try {
    const json doc = json::parse(json_text);
    if (!doc.is_object()) throw ParseError("campaign spec must be an object", 0);
    if (!doc.contains("q") || !doc.contains("m")) {
      throw ParseError("campaign spec needs \"q\" and \"m\"", 0);
    }
    spec.q = doc.at("q").get<double>();
    spec.m_values = doc.at("m").get<std::vector<std::size_t>>();
    spec.n = doc.value("n", spec.n);
    spec.p = doc.value("p", spec.p);
    spec.count = doc.value("count", spec.count);
    spec.seed = doc.value("seed", spec.seed);
    spec.workers = doc.value("workers", spec.workers);
    if (doc.contains("policy")) {
      spec.policy = ParseFeasibilityPolicy(doc.at("policy").get<std::string>());
    }
    spec.Validate();
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid campaign spec: ") + e.what(), 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid campaign spec: ") + e.what(), 0);
  }
  return spec;
}

}  // namespace scp
