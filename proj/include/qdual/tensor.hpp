/**
 * @file tensor.hpp
 * @brief Slot-wise normalization, multiplication and zero test in tensor powers.
 */
#pragma once

#include "qdual/algebra.hpp"

namespace qdual {

/** @brief Normalizes every slot of x. */
TensorElement tensor_normal_form(const TensorElement& x, const Presentation& p);

/** @brief Slot-wise product, normalized; throws ArityMismatch on unequal arity. */
TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y, const Presentation& p);

/** @brief Zero test over k(q) in every slot (uses fraction rules when present). */
bool tensor_is_zero(const TensorElement& x, const Presentation& p);

/** @brief Appends the slots of y after those of x (unnormalized outer product). */
TensorElement tensor_concat(const TensorElement& x, const TensorElement& y);

/** @brief Coefficient-wise division by (q-1)^k; throws NotDivisible. */
NcElement shift_q1(const NcElement& x, int k);
TensorElement shift_q1(const TensorElement& x, int k);

/** @brief Evaluates every coefficient at q = 1. */
NcElement eval1(const NcElement& x);
TensorElement eval1(const TensorElement& x);

}  // namespace qdual
