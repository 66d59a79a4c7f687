/**
 * @file parse.hpp
 * @brief Expression grammar and the line-oriented presentation file format.
 *
 * Expressions: INT, INT/INT, q, identifiers, + - * ^ @ and parentheses, with
 * precedence ^ > * > @ > unary - > binary +/-; '#' starts a line comment.
 */
#pragma once

#include "qdual/algebra.hpp"

#include <map>
#include <string>

namespace qdual {

/** @brief Named values available to expressions besides the generators. */
using Environment = std::map<std::string, TensorElement>;

/**
 * @brief Parses src into a tensor (arity 1 for a plain element); the result is
 *        NOT normalized.  A pure scalar expression has arity `scalar_arity`.
 */
TensorElement parse_raw(const std::string& src, const Presentation& p, const Environment& env = {},
                        int scalar_arity = 1);

/** @brief Parses and normalizes an element (arity 1) or a tensor. */
TensorElement parse_expression(const std::string& src, const Presentation& p, const Environment& env = {});
NcElement parse_element(const std::string& src, const Presentation& p, const Environment& env = {});
LaurentPoly parse_scalar(const std::string& src);

/** @brief Parses a presentation file; runs build() and, when check is set, check_hopf. */
Presentation parse_presentation_file(const std::string& src, bool check = true);

/** @brief Serializes to the presentation file format. */
std::string serialize_presentation(const Presentation& p);

}  // namespace qdual
