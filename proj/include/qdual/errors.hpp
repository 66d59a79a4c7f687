/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every qdual module.
 *
 * Each leaf type maps to exactly one command-line exit code (see cli.hpp).
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qdual {

/** @brief Root of all library errors. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** @brief Mathematical failure: division, termination or window limits (exit code 3). */
struct MathError : Error {
    using Error::Error;
};

/** @brief Exact division by a power of (q-1) is impossible. */
struct NotDivisible : MathError {
    using MathError::MathError;
};

/** @brief The rewrite-step budget was exhausted. */
struct NonTerminating : MathError {
    using MathError::MathError;
};

/** @brief A lattice window grew beyond the configured bound. */
struct WindowExceeded : MathError {
    using MathError::MathError;
};

/** @brief A generator commutator does not vanish at q = 1. */
struct NotCommutativeAtLimit : MathError {
    using MathError::MathError;
};

/** @brief A generator's Delta - Delta^op does not vanish at q = 1. */
struct NotCocommutativeAtLimit : MathError {
    using MathError::MathError;
};

/** @brief Malformed textual input (exit code 2). */
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& what, int l = 0, int c = 0)
        : Error(l > 0 ? what + " at line " + std::to_string(l) + ", column " + std::to_string(c) : what),
          line(l), column(c) {}
};

/** @brief An identifier does not name a generator of the presentation. */
struct UnknownGenerator : ParseError {
    using ParseError::ParseError;
};

/** @brief Tensor factors of different arity were combined. */
struct ArityMismatch : ParseError {
    using ParseError::ParseError;
};

/** @brief Unknown catalog name (exit code 2). */
struct UnknownEntry : ParseError {
    using ParseError::ParseError;
};

/** @brief Catalog family parameter out of range (exit code 2). */
struct BadParameter : ParseError {
    using ParseError::ParseError;
};

/** @brief A declared identity failed to normalize to zero (exit code 1). */
struct VerificationFailed : Error {
    using Error::Error;
};

/** @brief A loaded presentation violates a Hopf axiom (exit code 1). */
struct HopfCheckFailed : VerificationFailed {
    using VerificationFailed::VerificationFailed;
};

}  // namespace qdual
