/**
 * @file cache.hpp
 * @brief Per-presentation memo tables (internal).
 */
#pragma once

#include "qdual/algebra.hpp"

#include <mutex>
#include <unordered_map>
#include <vector>

namespace qdual {

struct PresentationCache {
    std::recursive_mutex mutex;
    std::unordered_map<Word, NcElement> normal;
    std::unordered_map<Word, ReducedWord> reduced;
    std::unordered_map<Word, TensorElement> coproduct;
    std::unordered_map<Word, NcElement> antipode;
    std::vector<std::vector<LaurentPoly>> atom_powers;  ///< atom_powers[i][k] = atoms[i]^k
};

}  // namespace qdual
