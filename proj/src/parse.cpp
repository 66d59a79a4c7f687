/**
 * @file parse.cpp
 * @brief Recursive-descent expression parser and presentation file reader/writer.
 */
#include "qdual/parse.hpp"

#include "qdual/errors.hpp"
#include "qdual/hopf.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace qdual {

namespace {

enum class Tok { Int, Ident, Op, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(const std::string& src, int line0, int col0) {
    std::vector<Token> out;
    int line = line0, col = col0;
    for (size_t i = 0; i < src.size();) {
        char ch = src[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            ++col;
            continue;
        }
        if (ch == '#') {
            while (i < src.size() && src[i] != '\n') ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Tok::Int, src.substr(start, i - start), line, col});
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
            out.push_back({Tok::Ident, src.substr(start, i - start), line, col});
        } else if (std::string("+-*^@()/").find(ch) != std::string::npos) {
            ++i;
            out.push_back({Tok::Op, std::string(1, ch), line, col});
        } else {
            throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
        }
        col += static_cast<int>(i - start);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

/** Parse-time value: a bare scalar or a tensor of fixed arity. */
struct Value {
    bool is_scalar = true;
    LaurentPoly scalar{1};
    TensorElement tensor{1};
};

class Parser {
public:
    Parser(std::vector<Token> toks, const Presentation& p, const Environment& env)
        : toks_(std::move(toks)), p_(p), env_(env) {}

    Value parse() {
        Value v = sum();
        if (peek().kind != Tok::End) fail("unexpected token '" + peek().text + "'");
        return v;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
    const Presentation& p_;
    const Environment& env_;

    const Token& peek() const { return toks_[pos_]; }
    bool is_op(const char* op) const { return peek().kind == Tok::Op && peek().text == op; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }
    void expect(const char* op) {
        if (!is_op(op)) fail(std::string("expected '") + op + "'");
        ++pos_;
    }

    static TensorElement to_tensor(const Value& v, int arity) {
        if (!v.is_scalar) return v.tensor;
        TensorElement t(arity);
        t.add(WordTuple(static_cast<size_t>(arity)), v.scalar);
        return t;
    }

    Value combine_sum(Value a, const Value& b, bool subtract, const Token& at) {
        if (a.is_scalar && b.is_scalar) {
            a.scalar = subtract ? a.scalar - b.scalar : a.scalar + b.scalar;
            return a;
        }
        int arity = a.is_scalar ? b.tensor.arity() : a.tensor.arity();
        TensorElement x = to_tensor(a, arity), y = to_tensor(b, arity);
        if (x.arity() != y.arity())
            throw ArityMismatch("sum of tensors of arity " + std::to_string(x.arity()) + " and " +
                                    std::to_string(y.arity()),
                                at.line, at.column);
        Value r;
        r.is_scalar = false;
        r.tensor = subtract ? x - y : x + y;
        return r;
    }

    Value sum() {
        Value v = signed_term();
        while (is_op("+") || is_op("-")) {
            Token op = peek();
            ++pos_;
            Value rhs = signed_term();
            v = combine_sum(v, rhs, op.text == "-", op);
        }
        return v;
    }

    Value signed_term() {
        if (is_op("-")) {
            ++pos_;
            Value v = signed_term();
            if (v.is_scalar)
                v.scalar = -v.scalar;
            else
                v.tensor = -v.tensor;
            return v;
        }
        if (is_op("+")) {
            ++pos_;
            return signed_term();
        }
        return tensor();
    }

    Value tensor() {
        Value v = product();
        while (is_op("@")) {
            ++pos_;
            Value rhs = product();
            Value r;
            r.is_scalar = false;
            r.tensor = tensor_concat(to_tensor(v, 1), to_tensor(rhs, 1));
            v = r;
        }
        return v;
    }

    Value multiply_values(const Value& a, const Value& b, const Token& at) {
        Value r;
        if (a.is_scalar && b.is_scalar) {
            r.scalar = a.scalar * b.scalar;
            return r;
        }
        r.is_scalar = false;
        if (a.is_scalar) {
            r.tensor = a.scalar * b.tensor;
            return r;
        }
        if (b.is_scalar) {
            r.tensor = b.scalar * a.tensor;
            return r;
        }
        if (a.tensor.arity() != b.tensor.arity())
            throw ArityMismatch("product of tensors of arity " + std::to_string(a.tensor.arity()) + " and " +
                                    std::to_string(b.tensor.arity()),
                                at.line, at.column);
        TensorElement t(a.tensor.arity());
        for (const auto& [x, cx] : a.tensor.terms())
            for (const auto& [y, cy] : b.tensor.terms()) {
                WordTuple z(x.size());
                for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
                t.add(z, cx * cy);
            }
        r.tensor = t;
        return r;
    }

    Value product() {
        Value v = power();
        while (is_op("*")) {
            Token op = peek();
            ++pos_;
            Value rhs = power();
            v = multiply_values(v, rhs, op);
        }
        return v;
    }

    Value power() {
        Value base = atom();
        if (!is_op("^")) return base;
        Token at = peek();
        ++pos_;
        bool neg = false;
        if (is_op("-")) {
            neg = true;
            ++pos_;
        }
        if (peek().kind != Tok::Int) fail("exponent must be an integer literal");
        long e = std::stol(peek().text);
        ++pos_;
        if (neg) e = -e;
        if (base.is_scalar) {
            if (e < 0) base.scalar = base.scalar.unit_inverse().pow(static_cast<unsigned>(-e));
            else base.scalar = base.scalar.pow(static_cast<unsigned>(e));
            return base;
        }
        if (e < 0) {
            // Negative powers only for an invertible generator.
            const auto& terms = base.tensor.terms();
            if (base.tensor.arity() != 1 || terms.size() != 1 || terms.begin()->first[0].size() != 1 ||
                terms.begin()->second != LaurentPoly(1))
                throw ParseError("negative exponent on a non-generator", at.line, at.column);
            int g = static_cast<unsigned char>(terms.begin()->first[0][0]);
            int gi = p_.generators[static_cast<size_t>(g)].inverse;
            if (gi < 0) throw ParseError("generator has no declared inverse", at.line, at.column);
            Value r;
            r.is_scalar = false;
            r.tensor = TensorElement(1);
            r.tensor.add({Word(static_cast<size_t>(-e), static_cast<char>(gi))}, 1);
            return r;
        }
        Value r;  // scalar 1
        for (long i = 0; i < e; ++i) r = multiply_values(r, base, at);
        return r;
    }

    Value atom() {
        const Token t = peek();
        if (t.kind == Tok::Int) {
            ++pos_;
            Rational r(t.text);
            if (is_op("/")) {
                ++pos_;
                if (peek().kind != Tok::Int) fail("expected denominator");
                Rational d(peek().text);
                if (d == 0) fail("zero denominator");
                ++pos_;
                r /= d;
            }
            Value v;
            v.scalar = LaurentPoly(r);
            return v;
        }
        if (is_op("(")) {
            ++pos_;
            Value v = sum();
            expect(")");
            return v;
        }
        if (t.kind == Tok::Ident) {
            ++pos_;
            auto it = env_.find(t.text);
            if (it != env_.end()) {
                Value v;
                v.is_scalar = false;
                v.tensor = it->second;
                return v;
            }
            if (t.text == "q") {
                Value v;
                v.scalar = LaurentPoly::q_power(1);
                return v;
            }
            int g = p_.generator_index(t.text);
            if (g < 0) throw UnknownGenerator("unknown generator '" + t.text + "'", t.line, t.column);
            Value v;
            v.is_scalar = false;
            v.tensor = TensorElement(1);
            v.tensor.add({p_.letter(g)}, 1);
            return v;
        }
        if (t.kind == Tok::End) fail("unexpected end of expression");
        fail("unexpected token '" + t.text + "'");
    }
};

TensorElement parse_at(const std::string& src, const Presentation& p, const Environment& env, int scalar_arity,
                       int line, int col) {
    Parser parser(tokenize(src, line, col), p, env);
    Value v = parser.parse();
    if (v.is_scalar) {
        TensorElement t(scalar_arity);
        t.add(WordTuple(static_cast<size_t>(scalar_arity)), v.scalar);
        return t;
    }
    return v.tensor;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

const std::set<std::string> kKeywords = {"algebra", "class", "generators", "inverse", "weight", "relation",
                                         "coproduct", "counit", "antipode", "lattice", "grading", "bracket",
                                         "cobracket"};

struct Directive {
    std::string keyword;
    std::string body;
    int line;
    int column;  // column of the body start
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

}  // namespace

TensorElement parse_raw(const std::string& src, const Presentation& p, const Environment& env, int scalar_arity) {
    return parse_at(src, p, env, scalar_arity, 1, 1);
}

TensorElement parse_expression(const std::string& src, const Presentation& p, const Environment& env) {
    return tensor_normal_form(parse_raw(src, p, env), p);
}

NcElement parse_element(const std::string& src, const Presentation& p, const Environment& env) {
    TensorElement t = parse_expression(src, p, env);
    if (t.arity() != 1) throw ArityMismatch("expected an element, got a tensor of arity " + std::to_string(t.arity()));
    return t.as_element();
}

LaurentPoly parse_scalar(const std::string& src) {
    Presentation empty;
    TensorElement t = parse_raw(src, empty, {}, 0);
    if (t.arity() != 0) throw ParseError("expected a scalar");
    return t.scalar_value();
}

Presentation parse_presentation_file(const std::string& src, bool check) {
    std::vector<Directive> dirs;
    std::stringstream ss(src);
    std::string raw;
    int line = 0;
    while (std::getline(ss, raw)) {
        ++line;
        std::string text = raw.substr(0, raw.find('#'));
        if (trim(text).empty()) continue;
        size_t a = text.find_first_not_of(" \t");
        size_t e = text.find_first_of(" \t:", a);
        std::string word = text.substr(a, e == std::string::npos ? std::string::npos : e - a);
        if (kKeywords.count(word) && a == 0) {
            size_t b = e == std::string::npos ? text.size() : e;
            dirs.push_back({word, text.substr(b), line, static_cast<int>(b) + 1});
        } else {
            if (dirs.empty()) throw ParseError("unknown directive '" + word + "'", line, static_cast<int>(a) + 1);
            if (a == 0) throw ParseError("unknown directive '" + word + "'", line, 1);
            dirs.back().body += "\n" + text;  // continuation line
        }
    }
    Presentation p;
    auto split_eq = [](const Directive& d) {
        size_t eq = d.body.find('=');
        if (eq == std::string::npos) throw ParseError("expected '=' in " + d.keyword + " directive", d.line, d.column);
        return std::make_pair(trim(d.body.substr(0, eq)), d.body.substr(eq + 1));
    };
    auto gen_of = [&p](const std::string& n, const Directive& d) {
        int g = p.generator_index(n);
        if (g < 0) throw UnknownGenerator("unknown generator '" + n + "'", d.line, d.column);
        return g;
    };
    bool have_gens = false;
    for (const Directive& d : dirs) {
        if (d.keyword == "algebra") {
            p.name = trim(d.body);
        } else if (d.keyword == "class") {
            std::string c = trim(d.body);
            if (c == "quea") p.classification = Classification::QUEA;
            else if (c == "qfa") p.classification = Classification::QFA;
            else if (c == "classical") p.classification = Classification::Classical;
            else throw ParseError("unknown class '" + c + "'", d.line, d.column);
        } else if (d.keyword == "generators") {
            if (have_gens) throw ParseError("duplicate generators directive", d.line, 1);
            have_gens = true;
            for (const std::string& n : split_list(d.body)) {
                if (n.empty() || n == "q" || p.generator_index(n) >= 0)
                    throw ParseError("bad or duplicate generator name '" + n + "'", d.line, d.column);
                Generator g;
                g.name = n;
                g.pbw_index = p.size();
                p.generators.push_back(g);
            }
        }
    }
    if (!have_gens) throw ParseError("missing generators directive");
    if (p.size() > 120) throw ParseError("too many generators");
    const size_t n = static_cast<size_t>(p.size());
    std::vector<bool> has_cop(n), has_cou(n), has_ant(n);
    p.hopf.coproduct.assign(n, TensorElement(2));
    p.hopf.counit.assign(n, LaurentPoly());
    p.hopf.antipode.assign(n, NcElement());
    // Inverse pairs first: negative exponents in later expressions need them.
    for (const Directive& d : dirs) {
        if (d.keyword == "inverse") {
            auto items = split_list(d.body);
            if (items.size() != 2) throw ParseError("inverse expects two generators", d.line, d.column);
            int g = gen_of(items[0], d), gi = gen_of(items[1], d);
            p.inverse_pairs.emplace_back(g, gi);
            p.generators[static_cast<size_t>(g)].inverse = gi;
            p.generators[static_cast<size_t>(gi)].inverse = g;
        } else if (d.keyword == "weight") {
            auto [lhs, rhs] = split_eq(d);
            p.generators[static_cast<size_t>(gen_of(lhs, d))].weight = std::stoi(trim(rhs));
        }
    }
    for (const Directive& d : dirs) {
        if (d.keyword == "relation") {
            TensorElement t = parse_at(d.body, p, {}, 1, d.line, d.column);
            if (t.arity() != 1) throw ArityMismatch("relation must be an element", d.line, d.column);
            p.relations.push_back(t.as_element());
        } else if (d.keyword == "coproduct") {
            auto [lhs, rhs] = split_eq(d);
            int g = gen_of(lhs, d);
            TensorElement t = parse_at(rhs, p, {}, 2, d.line, d.column);
            if (t.arity() != 2) throw ArityMismatch("coproduct must have arity 2", d.line, d.column);
            p.hopf.coproduct[static_cast<size_t>(g)] = t;
            has_cop[static_cast<size_t>(g)] = true;
        } else if (d.keyword == "counit") {
            auto [lhs, rhs] = split_eq(d);
            int g = gen_of(lhs, d);
            TensorElement t = parse_at(rhs, p, {}, 0, d.line, d.column);
            if (t.arity() != 0) throw ParseError("counit must be a scalar", d.line, d.column);
            p.hopf.counit[static_cast<size_t>(g)] = t.scalar_value();
            has_cou[static_cast<size_t>(g)] = true;
        } else if (d.keyword == "antipode") {
            auto [lhs, rhs] = split_eq(d);
            int g = gen_of(lhs, d);
            TensorElement t = parse_at(rhs, p, {}, 1, d.line, d.column);
            if (t.arity() != 1) throw ArityMismatch("antipode must be an element", d.line, d.column);
            p.hopf.antipode[static_cast<size_t>(g)] = t.as_element();
            has_ant[static_cast<size_t>(g)] = true;
        } else if (d.keyword == "lattice") {
            std::string body = trim(d.body);
            size_t colon = body.find(':');
            std::string kind = trim(body.substr(0, colon));
            if (kind == "free") p.lattice.kind = LatticeKind::Free;
            else if (kind == "span") p.lattice.kind = LatticeKind::Spanning;
            else throw ParseError("lattice kind must be free or span", d.line, d.column);
            p.lattice.pattern = colon == std::string::npos ? "" : trim(body.substr(colon + 1));
        } else if (d.keyword == "grading") {
            auto [lhs, rhs] = split_eq(d);
            p.lattice.grading[gen_of(lhs, d)] = std::stoi(trim(rhs));
        } else if (d.keyword == "bracket") {
            auto [lhs, rhs] = split_eq(d);
            auto items = split_list(lhs);
            if (items.size() != 2) throw ParseError("bracket expects two generators", d.line, d.column);
            TensorElement t = parse_at(rhs, p, {}, 1, d.line, d.column);
            p.bracket[{gen_of(items[0], d), gen_of(items[1], d)}] = t.as_element();
        } else if (d.keyword == "cobracket") {
            auto [lhs, rhs] = split_eq(d);
            TensorElement t = parse_at(rhs, p, {}, 2, d.line, d.column);
            if (t.arity() != 2) throw ArityMismatch("cobracket must have arity 2", d.line, d.column);
            p.cobracket[gen_of(lhs, d)] = t;
        }
    }
    for (size_t g = 0; g < n; ++g) {
        const std::string& gn = p.generators[g].name;
        if (!has_cop[g]) throw ParseError("incomplete Hopf data: no coproduct for " + gn);
        if (!has_cou[g]) throw ParseError("incomplete Hopf data: no counit for " + gn);
        if (!has_ant[g]) throw ParseError("incomplete Hopf data: no antipode for " + gn);
    }
    p.build();
    if (check) {
        Report rep = check_hopf(p, 0);
        for (const CheckEntry& e : rep.entries)
            if (!e.passed) throw HopfCheckFailed("presentation " + p.name + " fails " + e.name);
    }
    return p;
}

std::string serialize_presentation(const Presentation& p) {
    std::ostringstream out;
    out << "algebra " << p.name << "\n";
    out << "class "
        << (p.classification == Classification::QUEA ? "quea"
                                                     : p.classification == Classification::QFA ? "qfa" : "classical")
        << "\n";
    out << "generators ";
    for (int g = 0; g < p.size(); ++g) out << (g ? ", " : "") << p.generators[static_cast<size_t>(g)].name;
    out << "\n";
    for (const auto& [g, gi] : p.inverse_pairs)
        out << "inverse " << p.generators[static_cast<size_t>(g)].name << ", "
            << p.generators[static_cast<size_t>(gi)].name << "\n";
    for (const Generator& g : p.generators)
        if (g.weight != 1) out << "weight " << g.name << " = " << g.weight << "\n";
    for (const NcElement& r : p.relations) out << "relation " << p.render(r) << "\n";
    for (int g = 0; g < p.size(); ++g) {
        const std::string& gn = p.generators[static_cast<size_t>(g)].name;
        out << "coproduct " << gn << " = " << p.render(p.hopf.coproduct[static_cast<size_t>(g)]) << "\n";
        out << "counit " << gn << " = " << p.hopf.counit[static_cast<size_t>(g)].to_string() << "\n";
        out << "antipode " << gn << " = " << p.render(p.hopf.antipode[static_cast<size_t>(g)]) << "\n";
    }
    out << "lattice " << (p.lattice.kind == LatticeKind::Free ? "free" : "span");
    if (!p.lattice.pattern.empty()) out << ": " << p.lattice.pattern;
    out << "\n";
    for (const auto& [g, w] : p.lattice.grading)
        out << "grading " << p.generators[static_cast<size_t>(g)].name << " = " << w << "\n";
    for (const auto& [pr, v] : p.bracket)
        out << "bracket " << p.generators[static_cast<size_t>(pr.first)].name << ", "
            << p.generators[static_cast<size_t>(pr.second)].name << " = " << p.render(v) << "\n";
    for (const auto& [g, v] : p.cobracket)
        out << "cobracket " << p.generators[static_cast<size_t>(g)].name << " = " << p.render(v) << "\n";
    return out.str();
}

}  // namespace qdual
