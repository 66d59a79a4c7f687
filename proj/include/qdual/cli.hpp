/**
 * @file cli.hpp
 * @brief Command-line front end: algebra resolution, verification suites and
 *        dispatch with text or structured (JSON) output.
 */
#pragma once

#include "qdual/algebra.hpp"
#include "qdual/catalog.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace qdual {

/** @brief An algebra named on the command line. */
struct ResolvedAlgebra {
    std::string name;
    const Presentation* presentation = nullptr;
    const CatalogEntry* entry = nullptr;  ///< catalog entry whose hat or tilde this is
    bool tilde = false;                   ///< presentation is the entry's tilde algebra
    std::shared_ptr<Presentation> owned;  ///< loaded from a file
};

/**
 * @brief Resolves a catalog name ("Uq_sl2_hat", "Fq_Hn_hat(2)"), a tilde name
 *        ("Uq_sl2_tilde"), a classical target, or a presentation file path.
 */
ResolvedAlgebra resolve_algebra(const std::string& name);

/** @brief Suites: hopf, pbw, drinfeld, limits (or all). */
Report verify_suite(const ResolvedAlgebra& a, const std::string& suite);

/** @brief Report as text: one PASS/FAIL line per check and a summary line. */
std::string render_report(const Report& r);

/** @brief Runs one command; returns the exit code (0, 1 failure/NOT-MEMBER, 2 parse, 3 math, 4 INCONCLUSIVE). */
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdual
