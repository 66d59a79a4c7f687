/**
 * @file catalog.hpp
 * @brief Built-in quantum groups, their Drinfeld-functor recipes and classical targets.
 */
#pragma once

#include "qdual/algebra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qdual {

/** @brief Tilde generator g~ realized in the hat algebra as (q-1)^shift * expr. */
struct TildeImage {
    std::string generator;
    int shift = 0;
    std::string expr;
};

/** @brief Generator map from the tilde algebra at q = 1 into a classical target. */
struct GeneratorMap {
    std::string target;                                     ///< classical catalog name
    std::vector<std::pair<std::string, std::string>> images;  ///< source generator -> target expression
    bool even_subalgebra = false;  ///< images must lie in the even-degree subalgebra
};

struct CatalogEntry {
    std::string name;     ///< e.g. "Uq_hn_s_hat(2)"
    std::string family;   ///< name without the parameter
    int n = 0;            ///< family parameter, 0 when absent
    Presentation hat;
    std::string tilde_name;
    /// Presentation-file text of the tilde algebra; empty when it is derived mechanically.
    std::string tilde_text;
    std::vector<TildeImage> tilde_images;
    /// QUEA entries: hat generators that must not lie in the tilde algebra.
    std::vector<std::string> excluded;
    /// QUEA entries: (tilde generator, hat expression x) with (q-1) x = g~ - counit(g~).
    std::vector<std::pair<std::string, std::string>> double_tilde_images;
    /// QUEA entries: hat generator -> expression in the names "dt_<tilde generator>".
    std::vector<std::pair<std::string, std::string>> hat_from_double_tilde;
    /// Map from the tilde algebra at q = 1 to its classical target, when one is known.
    std::optional<GeneratorMap> limit_map;
};

/** @brief Names of the quantum entries; families appear with a "(n)" suffix. */
std::vector<std::string> catalog_names();

/** @brief Names of the classical targets. */
std::vector<std::string> classical_names();

/**
 * @brief Loads (once) and returns a quantum entry; the hat presentation is checked
 *        with check_hopf and overlap_check.  Throws UnknownEntry or BadParameter.
 */
const CatalogEntry& catalog_get(const std::string& name);

/** @brief Loads (once) a classical target such as "F_sSL2star" or "U_hnstar(2)". */
const Presentation& catalog_classical(const std::string& name);

/** @brief True iff name denotes a classical target. */
bool is_classical_name(const std::string& name);

/** @brief Splits "family(n)" into (family, n); n = 0 without a suffix. */
std::pair<std::string, int> split_family(const std::string& name);

}  // namespace qdual
