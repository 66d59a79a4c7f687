/**
 * @file cli.cpp
 * @brief Command dispatch for the qdual tool.
 */
#include "qdual/cli.hpp"

#include "qdual/classical.hpp"
#include "qdual/drinfeld.hpp"
#include "qdual/errors.hpp"
#include "qdual/hopf.hpp"
#include "qdual/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace qdual {

using json = nlohmann::json;

namespace {

constexpr size_t kSampleBudget = 64;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string class_name(Classification c) {
    switch (c) {
        case Classification::QUEA: return "QUEA";
        case Classification::QFA: return "QFA";
        case Classification::Classical: return "classical";
    }
    return "";
}

json report_json(const Report& r) {
    json checks = json::array();
    for (const CheckEntry& c : r.entries) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"title", r.title}, {"ok", r.ok()}, {"failures", r.failures()}, {"checks", checks}};
}

json valuation_json(Valuation v) { return v == kInfinity ? json("inf") : json(v); }

const CatalogEntry* entry_for_tilde(const std::string& name) {
    auto [family, n] = split_family(name);
    for (const std::string& c : catalog_names()) {
        const bool param = c.find('(') != std::string::npos;
        if (param != (n > 0)) continue;
        const std::string fam = c.substr(0, c.find('('));
        const CatalogEntry& e = catalog_get(param ? fam + "(" + std::to_string(n) + ")" : fam);
        if (e.tilde_name == name) return &e;
    }
    return nullptr;
}

bool is_catalog_family(const std::string& name) {
    const std::string family = name.substr(0, name.find('('));
    for (const std::string& c : catalog_names())
        if (c.substr(0, c.find('(')) == family) return true;
    return false;
}

// Delta-formula cross-check on every generator.
Report delta_oracle(const Presentation& p, int n_max) {
    Report r;
    r.title = "delta_n vs inclusion-exclusion, n <= " + std::to_string(n_max);
    for (int g = 0; g < p.size(); ++g) {
        const NcElement x = NcElement::monomial(p.letter(g));
        for (int n = 1; n <= n_max; ++n) {
            const bool same = tensor_is_zero(delta_n(x, n, p) - delta_via_subsets(x, n, p), p);
            r.add("delta_" + std::to_string(n) + "(" + p.generators[g].name + ")", same);
        }
    }
    return r;
}

Report limit_report(const Presentation& p) {
    Report r;
    r.title = "limit of " + p.name;
    try {
        PoissonPresentation lim = specialize(p);
        r.add(std::string("specialize (") + (lim.marker == LimitMarker::Poisson ? "POISSON" : "CO-POISSON") + ")", true);
        r.append(lim.marker == LimitMarker::Poisson ? poisson_properties(p) : copoisson_properties(p));
    } catch (const MathError& e) {
        r.add("specialize", false, e.what());
    }
    return r;
}

}  // namespace

ResolvedAlgebra resolve_algebra(const std::string& name) {
    ResolvedAlgebra a;
    a.name = name;
    if (is_catalog_family(name)) {
        a.entry = &catalog_get(name);
        a.presentation = &a.entry->hat;
        return a;
    }
    if (is_classical_name(name)) {
        a.presentation = &catalog_classical(name);
        return a;
    }
    if (std::filesystem::is_regular_file(name)) {
        a.owned = std::make_shared<Presentation>(parse_presentation_file(read_file(name)));
        a.presentation = a.owned.get();
        return a;
    }
    if (name.find("_tilde") != std::string::npos) {
        if (const CatalogEntry* e = entry_for_tilde(name)) {
            a.entry = e;
            a.tilde = true;
            a.presentation = &tilde_of(*e);
            return a;
        }
    }
    throw UnknownEntry("unknown algebra: " + name + " (neither a catalog name nor a readable file)");
}

Report verify_suite(const ResolvedAlgebra& a, const std::string& suite) {
    const Presentation& p = *a.presentation;
    if (suite == "all") {
        Report r;
        r.title = "verify " + p.name;
        for (const char* s : {"hopf", "pbw", "drinfeld", "limits"}) r.append(verify_suite(a, s), std::string(s) + ": ");
        return r;
    }
    Report r;
    r.title = suite + " suite for " + p.name;
    if (suite == "hopf") {
        r.append(check_hopf(p, kSampleBudget));
    } else if (suite == "pbw") {
        r.append(validate_presentation(p));
        r.append(overlap_check(p, kSampleBudget));
    } else if (suite == "drinfeld") {
        r.append(delta_oracle(p, 3));
        if (a.entry && !a.tilde) {
            try {
                r.append(verify_tilde_images(*a.entry, tilde_of(*a.entry)), "tilde: ");
                r.append(double_tilde_check(*a.entry, 3), "double tilde: ");
            } catch (const VerificationFailed& e) {
                r.add("tilde presentation", false, e.what());
            }
        }
    } else if (suite == "limits") {
        if (p.classification == Classification::Classical) {
            r.add("classical algebra (no limit to take)", true);
        } else {
            r.append(limit_report(p));
        }
        if (a.entry && a.entry->limit_map) {
            const Presentation& t = tilde_of(*a.entry);
            if (!a.tilde) r.append(limit_report(t), "tilde: ");
            r.append(check_generator_map(t, *a.entry->limit_map), "map: ");
        }
    } else {
        throw ParseError("unknown suite: " + suite);
    }
    return r;
}

std::string render_report(const Report& r) {
    std::ostringstream os;
    os << r.title << "\n";
    for (const CheckEntry& c : r.entries) {
        os << "  " << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
    }
    os << r.entries.size() << " checks, " << r.failures() << " failures\n";
    return os.str();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qdual: quantum duality computations on presented Hopf algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

    std::string algebra, expr, suite = "all";
    int n = 1, max_n = 4;
    bool subsets = false, poisson_table = false, cobracket_table = false;

    auto* catalog = app.add_subcommand("catalog", "Catalog operations");
    catalog->add_subcommand("list", "List catalog entries and classical targets");
    catalog->require_subcommand(1);

    auto algebra_opt = [&](CLI::App* s) { s->add_option("--algebra", algebra, "Catalog name or presentation file")->required(); };
    auto expr_opt = [&](CLI::App* s) { s->add_option("--expr", expr, "Expression")->required(); };

    auto* normalize = app.add_subcommand("normalize", "PBW normal form of an element or tensor");
    algebra_opt(normalize);
    expr_opt(normalize);
    auto* coproduct = app.add_subcommand("coproduct", "Iterated coproduct Delta^n");
    algebra_opt(coproduct);
    expr_opt(coproduct);
    coproduct->add_option("--n", n, "Number of tensor factors")->check(CLI::Range(0, 12));
    auto* delta = app.add_subcommand("delta", "Drinfeld map delta_n");
    algebra_opt(delta);
    expr_opt(delta);
    delta->add_option("--n", n, "n")->required()->check(CLI::Range(0, 12));
    delta->add_flag("--subsets", subsets, "Use the inclusion-exclusion formula");
    auto* member = app.add_subcommand("member", "Bounded membership test for the tilde algebra");
    algebra_opt(member);
    expr_opt(member);
    member->add_option("--max-n", max_n, "Largest n tested")->check(CLI::Range(1, 12));
    auto* tilde = app.add_subcommand("tilde", "Tilde presentation of a QUEA entry");
    algebra_opt(tilde);
    auto* tilde_f = app.add_subcommand("tilde-f", "Tilde presentation of a QFA entry");
    algebra_opt(tilde_f);
    auto* dtilde = app.add_subcommand("double-tilde", "Check that the tilde of the tilde regenerates the entry");
    algebra_opt(dtilde);
    dtilde->add_option("--max-n", max_n, "Largest n in membership tests")->check(CLI::Range(1, 12));
    auto* limit = app.add_subcommand("limit", "Semiclassical limit at q = 1");
    algebra_opt(limit);
    auto* pt = limit->add_flag("--poisson-table", poisson_table, "Poisson bracket table");
    limit->add_flag("--cobracket-table", cobracket_table, "Cobracket table")->excludes(pt);
    auto* checkmap = app.add_subcommand("checkmap", "Check the specialization map of an entry");
    algebra_opt(checkmap);
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    algebra_opt(verify);
    verify->add_option("--suite", suite, "Suite")->check(CLI::IsMember({"hopf", "pbw", "drinfeld", "limits", "all"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const CLI::App* cmd = app.get_subcommands().front();
    std::string command = cmd->get_name();
    if (command == "catalog") command = "catalog list";
    const bool structured = format == "structured";

    json doc;
    doc["command"] = command;
    doc["algebra"] = algebra.empty() ? json(nullptr) : json(algebra);
    json inputs = json::object();
    if (!expr.empty()) inputs["expr"] = expr;
    json diagnostics = json::array();
    std::ostringstream text;
    int code = 0;

    auto finish = [&](int exit_code, const json& result) {
        doc["inputs"] = inputs;
        doc["result"] = result;
        doc["diagnostics"] = diagnostics;
        doc["exit_code"] = exit_code;
        if (structured) out << doc.dump(2) << "\n";
        else out << text.str();
        return exit_code;
    };

    try {
        json result;
        if (command == "catalog list") {
            json quantum = json::array(), classical = json::array();
            text << "quantum entries:\n";
            for (const std::string& c : catalog_names()) {
                const std::string fam = c.substr(0, c.find('('));
                const CatalogEntry& e = catalog_get(c.find('(') == std::string::npos ? fam : fam + "(1)");
                const std::string cls = class_name(e.hat.classification);
                std::string tn = e.tilde_name;
                if (c.find('(') != std::string::npos) tn = tn.substr(0, tn.find('(')) + "(n)";
                quantum.push_back({{"name", c}, {"class", cls}, {"tilde", tn}});
                text << "  " << c << "  " << cls << "  tilde: " << tn << "\n";
            }
            text << "classical targets:\n";
            for (const std::string& c : classical_names()) {
                classical.push_back(c);
                text << "  " << c << "\n";
            }
            result = {{"quantum", quantum}, {"classical", classical}};
            return finish(0, result);
        }

        const ResolvedAlgebra a = resolve_algebra(algebra);
        const Presentation& p = *a.presentation;

        if (command == "normalize") {
            TensorElement t = parse_expression(expr, p);
            const std::string s = t.arity() == 1 ? p.render(t.as_element()) : p.render(t);
            text << s << "\n";
            result = {{"arity", t.arity()}, {"value", s}};
        } else if (command == "coproduct" || command == "delta") {
            inputs["n"] = n;
            const NcElement x = parse_element(expr, p);
            TensorElement t(0);
            if (command == "coproduct") {
                t = iterated_coproduct(x, n, p);
            } else {
                inputs["subsets"] = subsets;
                t = subsets ? delta_via_subsets(x, n, p) : delta_n(x, n, p);
            }
            const std::string s = p.render(t);
            text << s << "\n";
            result = {{"arity", t.arity()}, {"value", s}};
        } else if (command == "member") {
            inputs["max_n"] = max_n;
            const MembershipVerdict v = tilde_member(parse_element(expr, p), p, max_n, expr);
            json prof = json::array();
            text << expr << ": " << verdict_name(v.verdict) << "\n  profile:";
            for (const auto& [k, val] : v.profile) {
                prof.push_back({{"n", k}, {"valuation", valuation_json(val)}});
                text << " v" << k << "=" << valuation_string(val);
            }
            text << "\n";
            if (v.verdict == Verdict::NotMember) text << "  witness n = " << v.witness << "\n";
            text << "  " << v.note << "\n";
            result = {{"verdict", verdict_name(v.verdict)}, {"profile", prof}, {"note", v.note}, {"max_n", v.max_n},
                      {"witness", v.verdict == Verdict::NotMember ? json(v.witness) : json(nullptr)}};
            code = v.verdict == Verdict::NotMember ? 1 : v.verdict == Verdict::Inconclusive ? 4 : 0;
        } else if (command == "tilde" || command == "tilde-f") {
            if (!a.entry || a.tilde) throw UnknownEntry(algebra + " has no tilde recipe (catalog hat entries only)");
            const Presentation& t =
                command == "tilde" ? tilde_presentation(*a.entry) : tilde_F_presentation(*a.entry);
            const Report rep = verify_tilde_images(*a.entry, t);
            const std::string pres = serialize_presentation(t);
            text << pres << "# " << rep.title << ": " << rep.entries.size() << " checks, " << rep.failures()
                 << " failures\n";
            result = {{"name", t.name}, {"presentation", pres}, {"verification", report_json(rep)}};
            code = rep.ok() ? 0 : 1;
        } else if (command == "double-tilde") {
            inputs["max_n"] = max_n;
            if (!a.entry || a.tilde) throw UnknownEntry(algebra + " has no tilde recipe (catalog hat entries only)");
            const Report rep = double_tilde_check(*a.entry, max_n);
            text << render_report(rep);
            result = report_json(rep);
            code = rep.ok() ? 0 : 1;
        } else if (command == "limit") {
            std::optional<LimitMarker> m;
            if (poisson_table) m = LimitMarker::Poisson;
            if (cobracket_table) m = LimitMarker::CoPoisson;
            inputs["table"] = poisson_table ? "poisson" : cobracket_table ? "cobracket" : "default";
            const PoissonPresentation lim = specialize(p, m);
            text << render_limit_table(p, lim);
            json table = json::object();
            if (lim.marker == LimitMarker::Poisson) {
                for (int i = 0; i < p.size(); ++i)
                    for (int j = i + 1; j < p.size(); ++j) {
                        auto it = lim.bracket.find({i, j});
                        table["{" + lim.generators[i] + ", " + lim.generators[j] + "}"] =
                            it == lim.bracket.end() ? "0" : p.render(it->second);
                    }
            } else {
                for (int i = 0; i < p.size(); ++i) {
                    auto it = lim.cobracket.find(i);
                    table["delta(" + lim.generators[i] + ")"] = it == lim.cobracket.end() ? "0" : p.render(it->second);
                }
            }
            result = {{"marker", lim.marker == LimitMarker::Poisson ? "POISSON" : "CO-POISSON"}, {"table", table}};
        } else if (command == "checkmap") {
            if (!a.entry || !a.entry->limit_map)
                throw UnknownEntry(algebra + " has no specialization map in the catalog");
            const Report rep = check_generator_map(tilde_of(*a.entry), *a.entry->limit_map);
            text << render_report(rep);
            result = report_json(rep);
            code = rep.ok() ? 0 : 1;
        } else if (command == "verify") {
            inputs["suite"] = suite;
            const Report rep = verify_suite(a, suite);
            text << render_report(rep);
            result = report_json(rep);
            code = rep.ok() ? 0 : 1;
        }
        return finish(code, result);
    } catch (const ParseError& e) {
        code = 2;
        diagnostics.push_back(e.what());
    } catch (const MathError& e) {
        code = 3;
        diagnostics.push_back(e.what());
    } catch (const VerificationFailed& e) {
        code = 1;
        diagnostics.push_back(e.what());
    }
    err << "error: " << diagnostics.back().get<std::string>() << "\n";
    if (structured) return finish(code, nullptr);
    return code;
}

}  // namespace qdual
