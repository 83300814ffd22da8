#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace ergs {

// Well-known vocabulary IRIs.
namespace iris {
inline constexpr const char* xsd_string = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr const char* xsd_boolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr const char* xsd_integer = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr const char* xsd_decimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr const char* xsd_double = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr const char* rdf_lang_string = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr const char* rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr const char* rdfs_sub_class_of = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr const char* rdfs_sub_property_of = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
inline constexpr const char* rdfs_domain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr const char* rdfs_range = "http://www.w3.org/2000/01/rdf-schema#range";
inline constexpr const char* owl_inverse_of = "http://www.w3.org/2002/07/owl#inverseOf";
inline constexpr const char* owl_symmetric_property = "http://www.w3.org/2002/07/owl#SymmetricProperty";
inline constexpr const char* owl_transitive_property = "http://www.w3.org/2002/07/owl#TransitiveProperty";
}  // namespace iris

enum class TermKind : uint8_t { Iri, Literal, Blank };

// One RDF term. For literals, `value` is the lexical form; `datatype` is
// always set (xsd:string when the source carried no explicit type,
// rdf:langString when a language tag is present). For blank nodes, `value`
// is the label and `blank_scope` identifies the parsed document, so labels
// from different documents never compare equal.
struct RdfTerm {
  TermKind kind = TermKind::Iri;
  std::string value;
  std::string datatype;
  std::string lang;
  int32_t blank_scope = 0;

  static RdfTerm iri(std::string v) {
    RdfTerm t;
    t.kind = TermKind::Iri;
    t.value = std::move(v);
    return t;
  }

  static RdfTerm literal(std::string lexical, std::string datatype = iris::xsd_string) {
    RdfTerm t;
    t.kind = TermKind::Literal;
    t.value = std::move(lexical);
    t.datatype = std::move(datatype);
    return t;
  }

  static RdfTerm lang_literal(std::string lexical, std::string language) {
    RdfTerm t;
    t.kind = TermKind::Literal;
    t.value = std::move(lexical);
    t.datatype = iris::rdf_lang_string;
    t.lang = std::move(language);
    return t;
  }

  static RdfTerm blank(std::string id, int32_t scope = 0) {
    RdfTerm t;
    t.kind = TermKind::Blank;
    t.value = std::move(id);
    t.blank_scope = scope;
    return t;
  }

  bool is_iri() const { return kind == TermKind::Iri; }
  bool is_literal() const { return kind == TermKind::Literal; }
  bool is_blank() const { return kind == TermKind::Blank; }

  friend bool operator==(const RdfTerm& a, const RdfTerm& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case TermKind::Iri: return a.value == b.value;
      case TermKind::Blank: return a.value == b.value && a.blank_scope == b.blank_scope;
      case TermKind::Literal:
        return a.value == b.value && a.datatype == b.datatype && a.lang == b.lang;
    }
    return false;
  }

  friend auto operator<=>(const RdfTerm& a, const RdfTerm& b) {
    return std::tie(a.kind, a.value, a.datatype, a.lang, a.blank_scope) <=>
           std::tie(b.kind, b.value, b.datatype, b.lang, b.blank_scope);
  }
};

inline bool term_equal(const RdfTerm& a, const RdfTerm& b) { return a == b; }

struct Triple {
  RdfTerm s, p, o;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple& a, const Triple& b) {
    return std::tie(a.s, a.p, a.o) <=> std::tie(b.s, b.p, b.o);
  }
};

// N-Triples form of a term ("<iri>", "_:label", quoted literal).
std::string term_to_ntriples(const RdfTerm& t);

}  // namespace ergs
