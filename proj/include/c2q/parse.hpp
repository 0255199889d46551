#pragma once

#include "c2q/quaternion.hpp"

#include <string>
#include <vector>

namespace c2q {

/// Element grammar over a field context:
///   sum     := product (('+' | '-') product)*
///   product := power (('*' | '/') power)*
///   power   := atom ('^' ['-'] integer)?
///   atom    := '0' | '1' | 'g' | variable | '(' sum ')'
/// `g` is the generator of GF(2^k) and is rejected for k = 1.
/// Errors are ParseError with 1-based line/column; a zero divisor throws
/// ZeroDenominator.
Elem parse_element(const std::string& text, const FieldCtx& field);

/// Quadratic form grammar:
///   form := term ('+' term)*
///   term := [scalar '*'] atom | '<<' e (',' e)* '>>' '*' atom
///   atom := '[' e ',' e ']' | 'H' | '<<' e (',' e)* ']]' | '(' form ')'
/// `<<a1,..,am,b]]` is the expanded quadratic Pfister form, `H` the
/// hyperbolic plane and `c*q` the scaled form.
QuadForm parse_form(const std::string& text, const FieldCtx& field);

/// `<<a1,..,am,b]]` kept as a Pfister form.
PfisterQ parse_pfister(const std::string& text, const FieldCtx& field);

/// `[alpha,beta)`; beta = 0 throws ZeroSlot.
Quaternion parse_quaternion(const std::string& text, const FieldCtx& field);

/// Comma-separated list of elements, e.g. a place or slot list.
std::vector<Elem> parse_element_list(const std::string& text, const FieldCtx& field);

} // namespace c2q
