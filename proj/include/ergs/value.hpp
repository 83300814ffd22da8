#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ergs/rdf_term.hpp"

namespace ergs {

// Stored property value. Literal datatypes are folded into one of these four
// at ingest time (xsd numeric types -> integer/decimal, xsd:boolean -> bool,
// everything else -> string); the original datatype/language live in
// meta-properties.
using Scalar = std::variant<std::string, int64_t, double, bool>;

inline bool scalar_is_numeric(const Scalar& s) {
  return std::holds_alternative<int64_t>(s) || std::holds_alternative<double>(s);
}
inline double scalar_as_double(const Scalar& s) {
  if (auto* i = std::get_if<int64_t>(&s)) return static_cast<double>(*i);
  return std::get<double>(s);
}

// Canonical lexical form ("30", "4.5", "true", raw string).
std::string scalar_to_string(const Scalar& s);

// Total order used by ordered indexes and canonical sorts. Families are
// ordered bool < numeric < string; int64 and double with the same numeric
// value compare equal so that an eq probe finds either representation.
int compare_scalars(const Scalar& a, const Scalar& b);

// Value equality with numeric coercion; cross-family is false, never an error.
bool scalars_value_equal(const Scalar& a, const Scalar& b);

// A term as seen by query evaluation: an IRI, a blank node (by skolem
// string "_:d<scope>_<label>") or a literal whose value has been folded to a
// Scalar. Conversions to/from RdfTerm define the ingest datatype policy.
struct TermValue {
  enum class Kind : uint8_t { Iri, Blank, Literal };
  Kind kind = Kind::Iri;
  Scalar scalar;           // iri/blank: the identity string; literal: the value
  std::string lang;        // literals only
  std::string datatype;    // literals only; empty means xsd:string

  static TermValue iri(std::string v) { return {Kind::Iri, std::move(v), {}, {}}; }
  static TermValue blank(std::string skolem) { return {Kind::Blank, std::move(skolem), {}, {}}; }
  static TermValue literal(Scalar v, std::string lang = {}, std::string datatype = {}) {
    return {Kind::Literal, std::move(v), std::move(lang), std::move(datatype)};
  }

  bool is_literal() const { return kind == Kind::Literal; }
  const std::string& identity() const { return std::get<std::string>(scalar); }
};

// Skolem helpers for blank nodes.
std::string skolemize_blank(int32_t scope, const std::string& label);
bool is_skolem(const std::string& s);                 // "_:"-prefixed
std::string skolem_to_label(const std::string& s);    // "_:d0_b1" -> "b1"

// RdfTerm <-> TermValue. from_rdf_term applies the numeric datatype folding;
// to_rdf_term renders canonical lexicals and restores blank labels.
TermValue from_rdf_term(const RdfTerm& t);
RdfTerm to_rdf_term(const TermValue& v);

// Scalar folding for a literal: value plus the meta datatype to record
// (empty when xsd:string carries no information).
struct FoldedLiteral {
  Scalar value;
  std::string datatype;  // meta "datatype" to store; empty = plain string
  std::string lang;      // meta "language" to store
};
FoldedLiteral fold_literal(const RdfTerm& literal);

// Term identity as used by triple-pattern matching, joins, DISTINCT and
// GROUP BY: IRIs/blanks by string, literals by (value, lang, datatype) with
// numerically-equal scalars identified.
bool term_match(const TermValue& a, const TermValue& b);
// FILTER comparison semantics: numeric coercion across datatypes, otherwise
// same-kind comparison; cross-kind comparisons are false (not errors).
bool term_filter_equal(const TermValue& a, const TermValue& b);
// <0 / 0 / >0 when comparable; nullopt when the pair is incomparable.
std::optional<int> term_filter_compare(const TermValue& a, const TermValue& b);

// Deterministic total order for ORDER BY / canonical row sorting:
// blanks < IRIs < literals(bool < numeric < string); ties by lang, datatype.
int term_order(const TermValue& a, const TermValue& b);

// Deterministic string key (also used for dedup/group hashing).
std::string term_canonical_key(const TermValue& v);

// Predicate over term values. Operands are constants or references to a
// traverser binding, resolved by the evaluator before evaluation.
struct BindingRef {
  std::string name;
};
using PredOperand = std::variant<TermValue, BindingRef>;

enum class PredOp : uint8_t {
  TermEq,  // term identity (triple-pattern constants, VALUES, joins)
  Eq, Neq, Lt, Lte, Gt, Gte,
  Within,
  StartingWith, EndingWith, Containing,
  Regex,
  LangTag,   // langMatches basic filtering; "*" matches any tagged literal
  IsBound, IsUnbound,
};

struct ValuePredicate {
  PredOp op = PredOp::Eq;
  std::vector<PredOperand> operands;

  static ValuePredicate term_eq(TermValue v) { return {PredOp::TermEq, {std::move(v)}}; }
  static ValuePredicate eq(TermValue v) { return {PredOp::Eq, {std::move(v)}}; }
};

// Evaluates `pred` against `subject` with operands already resolved to
// constants. `subject_bound` is false when the subject is the Unbound
// sentinel; only IsBound/IsUnbound can then succeed. Regex patterns are
// compiled by the caller (see RegexCache in eval).
bool eval_predicate_basic(PredOp op, const std::vector<TermValue>& operands,
                          const TermValue* subject, bool subject_bound);

// langMatches basic filtering ("*", case-insensitive, subtag prefix).
bool lang_matches(const std::string& tag, const std::string& range);

}  // namespace ergs
