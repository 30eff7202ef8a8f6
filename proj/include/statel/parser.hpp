#pragma once

#include <string>
#include <string_view>

#include "statel/kb.hpp"

namespace statel {

// Surface syntax for concepts:
//
//   concept  := and-expr ('or' and-expr)*          -- expands via ¬(¬C1 ⊓ ¬C2)
//   and-expr := unary ('and' unary)*                -- left associative
//   unary    := 'not' unary
//             | 'exists' ROLE '.' unary
//             | 'forall' ROLE '.' unary             -- expands via ¬∃r.¬C
//             | 'top' | 'bottom' | NAME | '(' concept ')'
//
// so exists binds tighter than not, which binds tighter than and.
// Names match [A-Za-z][A-Za-z0-9_]*; the keywords above are reserved.
ConceptPtr parse_concept(std::string_view text);

// KB text: one statement per line, '#' starts a comment, LF or CRLF.
//
//   gci  C => D
//   cond C | D [l, u]
//
// Bounds are rationals written as p/q, integers, or finite decimals; decimals
// are exact (0.009 = 9/1000).  Throws ParseError / BoundsError.
KnowledgeBase parse_kb(std::string_view text);

// "C | D" (CLI --query flag).
Query parse_query(std::string_view text);
// "C | D [l, u]" (CLI --cond flag).
Conditional parse_conditional(std::string_view text);

std::string render_concept(const ConceptPtr& c);
// Inverse of parse_kb up to whitespace.
std::string render_kb(const KnowledgeBase& kb);

}  // namespace statel
