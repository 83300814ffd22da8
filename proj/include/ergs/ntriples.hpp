#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ergs/rdf_term.hpp"

namespace ergs {

// Recoverable per-line failure. Callers pick strict (abort on first error)
// or lenient (skip bad lines) handling.
struct ParseError {
  size_t line = 0;
  std::string message;
};

using LineResult = std::variant<Triple, ParseError>;

// Parses one N-Triples line. Returns nullopt for blank lines and comments.
// `blank_scope` tags blank-node labels with the surrounding document.
std::optional<LineResult> parse_ntriples_line(std::string_view line, size_t line_no,
                                              int32_t blank_scope);

// Streaming reader over an input stream; one triple (or error) per call.
class NtriplesReader {
 public:
  explicit NtriplesReader(std::istream& in, int32_t blank_scope = 0)
      : in_(in), scope_(blank_scope) {}

  // Next well-formed triple or positioned error; nullopt at end of input.
  std::optional<LineResult> next();

  size_t line() const { return line_no_; }

 private:
  std::istream& in_;
  int32_t scope_;
  size_t line_no_ = 0;
};

// Convenience: parse a whole document. In strict mode the first bad line
// throws Error(Syntax); in lenient mode bad lines are collected into
// `errors` (when given) and skipped.
std::vector<Triple> parse_ntriples(std::istream& in, int32_t blank_scope, bool strict,
                                   std::vector<ParseError>* errors = nullptr);

void serialize_ntriples(std::span<const Triple> triples, std::ostream& out);
std::string serialize_ntriples(std::span<const Triple> triples);

}  // namespace ergs
