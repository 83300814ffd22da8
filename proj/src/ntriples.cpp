#include "ergs/ntriples.hpp"

#include <cctype>
#include <sstream>

#include "ergs/error.hpp"

namespace ergs {

namespace {

// Cursor over one line. All helpers leave the position on failure intact
// enough for a useful error column.
struct LineScanner {
  std::string_view text;
  size_t pos = 0;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  char take() { return text[pos++]; }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Syntax, msg + " at column " + std::to_string(pos + 1));
  }
};

void append_utf8(std::string& out, uint32_t cp) {
  if (cp <= 0x7F) {
    out.push_back(static_cast<char>(cp));
  } else if (cp <= 0x7FF) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp <= 0xFFFF) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

uint32_t parse_hex(LineScanner& s, int digits) {
  uint32_t cp = 0;
  for (int i = 0; i < digits; ++i) {
    if (s.eof()) s.fail("truncated \\u escape");
    char c = s.take();
    cp <<= 4;
    if (c >= '0' && c <= '9') cp |= static_cast<uint32_t>(c - '0');
    else if (c >= 'a' && c <= 'f') cp |= static_cast<uint32_t>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') cp |= static_cast<uint32_t>(c - 'A' + 10);
    else s.fail("bad hex digit in escape");
  }
  return cp;
}

// ECHAR | UCHAR after the backslash has been consumed.
void decode_escape(LineScanner& s, std::string& out) {
  if (s.eof()) s.fail("dangling backslash");
  char c = s.take();
  switch (c) {
    case 't': out.push_back('\t'); return;
    case 'b': out.push_back('\b'); return;
    case 'n': out.push_back('\n'); return;
    case 'r': out.push_back('\r'); return;
    case 'f': out.push_back('\f'); return;
    case '"': out.push_back('"'); return;
    case '\'': out.push_back('\''); return;
    case '\\': out.push_back('\\'); return;
    case 'u': append_utf8(out, parse_hex(s, 4)); return;
    case 'U': append_utf8(out, parse_hex(s, 8)); return;
    default: s.fail(std::string("unknown escape \\") + c);
  }
}

std::string parse_iriref(LineScanner& s) {
  if (s.take() != '<') s.fail("expected '<'");
  std::string iri;
  while (true) {
    if (s.eof()) s.fail("unterminated IRI");
    char c = s.take();
    if (c == '>') break;
    if (c == '\\') {
      size_t before = iri.size();
      decode_escape(s, iri);
      // only \u/\U are legal inside IRIREF; the cheap check is on the result
      if (iri.size() == before + 1 && iri.back() != '\\') s.fail("bad escape in IRI");
    } else if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' || c == '{' ||
               c == '}' || c == '|' || c == '^' || c == '`') {
      s.fail("illegal character in IRI");
    } else {
      iri.push_back(c);
    }
  }
  if (iri.empty()) s.fail("empty IRI");
  return iri;
}

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
         static_cast<unsigned char>(c) >= 0x80;
}

std::string parse_blank_label(LineScanner& s) {
  if (s.take() != '_' || s.eof() || s.take() != ':') s.fail("expected '_:'");
  std::string label;
  while (!s.eof() && is_label_char(s.peek())) label.push_back(s.take());
  while (!label.empty() && label.back() == '.') {  // trailing dot belongs to the triple
    label.pop_back();
    --s.pos;
  }
  if (label.empty()) s.fail("empty blank node label");
  return label;
}

RdfTerm parse_literal(LineScanner& s, int32_t /*scope*/) {
  if (s.take() != '"') s.fail("expected '\"'");
  std::string lex;
  while (true) {
    if (s.eof()) s.fail("unterminated literal");
    char c = s.take();
    if (c == '"') break;
    if (c == '\\') decode_escape(s, lex);
    else lex.push_back(c);
  }
  if (s.peek() == '@') {
    s.take();
    std::string tag;
    while (!s.eof() && (std::isalnum(static_cast<unsigned char>(s.peek())) || s.peek() == '-'))
      tag.push_back(s.take());
    if (tag.empty()) s.fail("empty language tag");
    return RdfTerm::lang_literal(std::move(lex), std::move(tag));
  }
  if (s.peek() == '^') {
    s.take();
    if (s.eof() || s.take() != '^') s.fail("expected '^^'");
    if (s.peek() != '<') s.fail("expected datatype IRI");
    std::string dt = parse_iriref(s);
    return RdfTerm::literal(std::move(lex), std::move(dt));
  }
  return RdfTerm::literal(std::move(lex));
}

RdfTerm parse_subject(LineScanner& s, int32_t scope) {
  if (s.peek() == '<') return RdfTerm::iri(parse_iriref(s));
  if (s.peek() == '_') return RdfTerm::blank(parse_blank_label(s), scope);
  s.fail("expected IRI or blank node as subject");
}

RdfTerm parse_object(LineScanner& s, int32_t scope) {
  if (s.peek() == '<') return RdfTerm::iri(parse_iriref(s));
  if (s.peek() == '_') return RdfTerm::blank(parse_blank_label(s), scope);
  if (s.peek() == '"') return parse_literal(s, scope);
  s.fail("expected IRI, blank node or literal as object");
}

}  // namespace

std::optional<LineResult> parse_ntriples_line(std::string_view line, size_t line_no,
                                              int32_t blank_scope) {
  LineScanner s{line};
  s.skip_ws();
  if (s.eof() || s.peek() == '#') return std::nullopt;
  try {
    Triple t;
    t.s = parse_subject(s, blank_scope);
    s.skip_ws();
    if (s.peek() != '<') s.fail("expected IRI as predicate");
    t.p = RdfTerm::iri(parse_iriref(s));
    s.skip_ws();
    t.o = parse_object(s, blank_scope);
    s.skip_ws();
    if (s.eof() || s.take() != '.') s.fail("expected '.'");
    s.skip_ws();
    if (!s.eof() && s.peek() != '#') s.fail("trailing characters after '.'");
    return LineResult{std::move(t)};
  } catch (const Error& e) {
    return LineResult{ParseError{line_no, e.what()}};
  }
}

std::optional<LineResult> NtriplesReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    auto r = parse_ntriples_line(line, line_no_, scope_);
    if (r) return r;
  }
  return std::nullopt;
}

std::vector<Triple> parse_ntriples(std::istream& in, int32_t blank_scope, bool strict,
                                   std::vector<ParseError>* errors) {
  NtriplesReader reader(in, blank_scope);
  std::vector<Triple> out;
  while (auto r = reader.next()) {
    if (auto* t = std::get_if<Triple>(&*r)) {
      out.push_back(std::move(*t));
      continue;
    }
    auto& err = std::get<ParseError>(*r);
    if (strict) throw Error(ErrorCode::Syntax, err.message, err.line, 0);
    if (errors) errors->push_back(err);
  }
  return out;
}

static void write_escaped(const std::string& s, std::ostream& out) {
  for (char c : s) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\r': out << "\\r"; break;
      case '\t': out << "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out << buf;
        } else {
          out << c;
        }
    }
  }
}

std::string term_to_ntriples(const RdfTerm& t) {
  std::ostringstream out;
  switch (t.kind) {
    case TermKind::Iri: out << '<' << t.value << '>'; break;
    case TermKind::Blank: out << "_:" << t.value; break;
    case TermKind::Literal: {
      out << '"';
      write_escaped(t.value, out);
      out << '"';
      if (!t.lang.empty()) out << '@' << t.lang;
      else if (t.datatype != iris::xsd_string) out << "^^<" << t.datatype << '>';
      break;
    }
  }
  return out.str();
}

void serialize_ntriples(std::span<const Triple> triples, std::ostream& out) {
  for (const Triple& t : triples) {
    out << term_to_ntriples(t.s) << ' ' << term_to_ntriples(t.p) << ' '
        << term_to_ntriples(t.o) << " .\n";
  }
}

std::string serialize_ntriples(std::span<const Triple> triples) {
  std::ostringstream out;
  serialize_ntriples(triples, out);
  return out.str();
}

}  // namespace ergs
