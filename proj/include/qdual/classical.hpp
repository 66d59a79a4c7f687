/**
 * @file classical.hpp
 * @brief Specialization at q = 1: Poisson brackets, co-Poisson cobrackets and
 *        generator-level checks of specialization maps.
 */
#pragma once

#include "qdual/algebra.hpp"
#include "qdual/catalog.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qdual {

enum class LimitMarker { Poisson, CoPoisson };

/** @brief Semiclassical limit; elements use the source words with rational coefficients. */
struct PoissonPresentation {
    std::string name;
    LimitMarker marker = LimitMarker::Poisson;
    std::vector<std::string> generators;
    std::vector<NcElement> relations;                  ///< declared relations at q = 1
    std::map<std::pair<int, int>, NcElement> bracket;  ///< i < j, POISSON only
    std::map<int, TensorElement> cobracket;            ///< CO-POISSON only
};

/** @brief POISSON for QFA-class presentations, CO-POISSON for QUEA-class ones. */
LimitMarker limit_marker(const Presentation& p);

/**
 * @brief Limit at q = 1 of the requested kind (default: limit_marker(p)); throws
 *        NotCommutativeAtLimit / NotCocommutativeAtLimit when it is not (co)commutative.
 */
PoissonPresentation specialize(const Presentation& p, std::optional<LimitMarker> marker = std::nullopt);

/** @brief ((xy - yx)/(q-1)) at q = 1; throws NotDivisible. */
NcElement poisson_bracket(const NcElement& x, const NcElement& y, const Presentation& p);

/** @brief ((Delta - Delta^op)(x)/(q-1)) at q = 1; throws NotDivisible. */
TensorElement co_poisson_cobracket(const NcElement& x, const Presentation& p);

/** @brief Bracket of a classical target, extended from its table as a biderivation. */
NcElement classical_bracket(const NcElement& x, const NcElement& y, const Presentation& target);

/** @brief Cobracket of a classical target, extended from its table by the co-Leibniz rule. */
TensorElement classical_cobracket(const NcElement& x, const Presentation& target);

/**
 * @brief Generator-level check of a specialization map from `source` at q = 1:
 *        relations, Hopf structure, and bracket or cobracket tables.
 */
Report check_generator_map(const Presentation& source, const GeneratorMap& m);

/** @brief Antisymmetry, Jacobi and Leibniz on all generator triples of a POISSON limit. */
Report poisson_properties(const Presentation& p);

/** @brief Antisymmetry and co-Leibniz on all generators (pairs) of a CO-POISSON limit. */
Report copoisson_properties(const Presentation& p);

/** @brief Aligned text table of the bracket or cobracket of a limit. */
std::string render_limit_table(const Presentation& p, const PoissonPresentation& lim);

}  // namespace qdual
