/**
 * @file hopf.hpp
 * @brief Structure maps extended from generator data, iterated coproducts,
 *        Drinfeld's delta maps and Hopf-axiom verification.
 */
#pragma once

#include "qdual/algebra.hpp"
#include "qdual/tensor.hpp"

namespace qdual {

/** @brief Counit of a word (product of generator counits). */
LaurentPoly counit_word(const Word& w, const Presentation& p);

LaurentPoly apply_counit(const NcElement& x, const Presentation& p);
TensorElement apply_coproduct(const NcElement& x, const Presentation& p);
NcElement apply_antipode(const NcElement& x, const Presentation& p);

/** @brief Delta^n: Delta^0 = counit (arity 0), Delta^1 = id, Delta^n = (Delta x id) Delta^(n-1). */
TensorElement iterated_coproduct(const NcElement& x, int n, const Presentation& p);

/** @brief Applies (id - counit) in every slot. */
TensorElement augment_slots(const TensorElement& x, const Presentation& p);

/** @brief delta_n = (id - counit)^{(x)n} Delta^n. */
TensorElement delta_n(const NcElement& x, int n, const Presentation& p);

/** @brief delta_n by inclusion-exclusion over subsets of slots. */
TensorElement delta_via_subsets(const NcElement& x, int n, const Presentation& p);

/** @brief Delta applied to slot `slot` of x. */
TensorElement coproduct_in_slot(const TensorElement& x, int slot, const Presentation& p);

/** @brief Counit applied to slot `slot` of x (arity drops by one). */
TensorElement counit_in_slot(const TensorElement& x, int slot, const Presentation& p);

/** @brief Multiplies the slots of an arity-2 tensor together. */
NcElement multiply_slots(const TensorElement& x, const Presentation& p);

/** @brief Delta^op = flip of Delta. */
TensorElement apply_coproduct_op(const NcElement& x, const Presentation& p);

/**
 * @brief Algebra map determined by generator images in `target`
 *        (images[i] is the image of source generator i); result normalized.
 */
NcElement map_element(const NcElement& x, const std::vector<NcElement>& images, const Presentation& target);
TensorElement map_tensor(const TensorElement& x, const std::vector<NcElement>& images, const Presentation& target);

/** @brief The relations an algebra map must kill: declared relations and inverse pairs. */
std::vector<NcElement> defining_relations(const Presentation& p);

/**
 * @brief Verifies (i) Delta, counit, antipode respect every relation, (ii) coassociativity,
 *        (iii) counit laws, (iv) antipode convolution, on generators; plus
 *        sample_budget random checks of multiplicativity of Delta on word pairs.
 */
Report check_hopf(const Presentation& p, size_t sample_budget);

}  // namespace qdual
